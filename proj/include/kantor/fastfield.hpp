#pragma once

#include <climits>
#include <cstdint>
#include <stdexcept>

#include "kantor/scalar.hpp"

namespace kantor {

/// Image of ℚ(i) in the prime field F_p, p ≡ 1 (mod 4), with i mapped to a
/// fixed square root of −1. A ring homomorphism on every element whose
/// denominators are prime to p, so linear independence observed here lifts
/// to independence over ℚ(i).
class Fp {
 public:
  static constexpr uint64_t kPrime = 2147483629ULL;
  static constexpr uint64_t kSqrtMinusOne = 629208553ULL;

  constexpr Fp() noexcept : v_(0) {}
  Fp(int v) noexcept : v_(reduce_signed(v)) {}
  Fp(long v) noexcept : v_(reduce_signed(v)) {}
  Fp(long long v) noexcept : v_(reduce_signed(v)) {}
  static constexpr Fp raw(uint64_t v) noexcept {
    Fp r;
    r.v_ = v;
    return r;
  }
  static Fp i() noexcept { return raw(kSqrtMinusOne); }

  uint64_t value() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }
  bool is_one() const noexcept { return v_ == 1; }

  Fp& operator+=(Fp o) noexcept {
    v_ += o.v_;
    if (v_ >= kPrime) v_ -= kPrime;
    return *this;
  }
  Fp& operator-=(Fp o) noexcept {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + kPrime - o.v_;
    return *this;
  }
  Fp& operator*=(Fp o) noexcept {
    v_ = (v_ * o.v_) % kPrime;
    return *this;
  }
  Fp operator-() const noexcept { return raw(v_ == 0 ? 0 : kPrime - v_); }
  friend Fp operator+(Fp a, Fp b) noexcept { return a += b; }
  friend Fp operator-(Fp a, Fp b) noexcept { return a -= b; }
  friend Fp operator*(Fp a, Fp b) noexcept { return a *= b; }
  friend bool operator==(Fp a, Fp b) noexcept { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) noexcept { return a.v_ != b.v_; }

  Fp pow(uint64_t e) const noexcept {
    Fp base = *this, acc(1);
    while (e != 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }
  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: division by zero");
    return pow(kPrime - 2);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp& operator/=(Fp o) { return *this *= o.inverse(); }

 private:
  static uint64_t reduce_signed(long long v) noexcept {
    long long m = v % static_cast<long long>(kPrime);
    return static_cast<uint64_t>(m < 0 ? m + static_cast<long long>(kPrime) : m);
  }
  uint64_t v_;
};

class BadReduction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reduction map ℚ(i) → F_p. Throws BadReduction when a denominator vanishes mod p.
Fp reduce_mod_p(const GaussianRational& z);

class IntegerOverflow : public std::overflow_error {
 public:
  IntegerOverflow() : std::overflow_error("Gaussian integer overflow") {}
};

/// Gaussian integer with 64-bit parts; every operation is overflow-checked and
/// throws IntegerOverflow rather than wrapping. Used as a fast exact path for
/// homogeneous identity checks after clearing denominators.
class GaussInt {
 public:
  constexpr GaussInt() noexcept : re_(0), im_(0) {}
  constexpr GaussInt(long long re) noexcept : re_(re), im_(0) {}
  constexpr GaussInt(int re) noexcept : re_(re), im_(0) {}
  constexpr GaussInt(long re) noexcept : re_(re), im_(0) {}
  constexpr GaussInt(long long re, long long im) noexcept : re_(re), im_(im) {}

  long long re() const noexcept { return re_; }
  long long im() const noexcept { return im_; }
  bool is_zero() const noexcept { return re_ == 0 && im_ == 0; }

  GaussInt& operator+=(GaussInt o) {
    if (__builtin_add_overflow(re_, o.re_, &re_) || __builtin_add_overflow(im_, o.im_, &im_)) throw IntegerOverflow();
    return *this;
  }
  GaussInt& operator-=(GaussInt o) {
    if (__builtin_sub_overflow(re_, o.re_, &re_) || __builtin_sub_overflow(im_, o.im_, &im_)) throw IntegerOverflow();
    return *this;
  }
  friend GaussInt operator*(GaussInt a, GaussInt b) {
    long long ac, bd, ad, bc, re, im;
    if (a.im_ == 0 && b.im_ == 0) {
      if (__builtin_mul_overflow(a.re_, b.re_, &re)) throw IntegerOverflow();
      return GaussInt(re);
    }
    if (__builtin_mul_overflow(a.re_, b.re_, &ac) || __builtin_mul_overflow(a.im_, b.im_, &bd) ||
        __builtin_mul_overflow(a.re_, b.im_, &ad) || __builtin_mul_overflow(a.im_, b.re_, &bc) ||
        __builtin_sub_overflow(ac, bd, &re) || __builtin_add_overflow(ad, bc, &im))
      throw IntegerOverflow();
    return GaussInt(re, im);
  }
  GaussInt& operator*=(GaussInt o) { return *this = *this * o; }
  GaussInt operator-() const {
    if (re_ == LLONG_MIN || im_ == LLONG_MIN) throw IntegerOverflow();
    return GaussInt(-re_, -im_);
  }
  friend GaussInt operator+(GaussInt a, GaussInt b) { return a += b; }
  friend GaussInt operator-(GaussInt a, GaussInt b) { return a -= b; }
  friend bool operator==(GaussInt a, GaussInt b) noexcept { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(GaussInt a, GaussInt b) noexcept { return !(a == b); }

  GaussianRational to_q() const { return {Rational(re_), Rational(im_)}; }

 private:
  long long re_;
  long long im_;
};

/// The integer z·scale; throws IntegerOverflow if it is not a 64-bit Gaussian integer.
GaussInt scaled_to_gauss_int(const GaussianRational& z, const mpz_class& scale);

}  // namespace kantor
