#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kantor {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arbitrary precision rational number.
///
/// Values that fit in a pair of 64-bit words are stored inline; larger values
/// spill to an owned GMP rational. The representation is canonical (lowest
/// terms, positive denominator, inline whenever possible), so equality is a
/// plain field comparison.
class Rational {
 public:
  Rational() noexcept : num_(0), den_(1) {}
  Rational(int v);
  Rational(long v);
  Rational(long long v);
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);
  Rational(const Rational& o);
  Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_) {
    o.den_ = 1;
    o.num_ = 0;
  }
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&& o) noexcept;
  ~Rational() {
    if (den_ == 0) release();
  }

  bool is_zero() const noexcept { return den_ == 1 && num_ == 0; }
  bool is_one() const noexcept { return den_ == 1 && num_ == 1; }
  bool is_integer() const;
  bool is_small() const noexcept { return den_ != 0; }
  int sign() const;

  // Only meaningful when is_small().
  int64_t small_num() const noexcept { return num_; }
  int64_t small_den() const noexcept { return den_; }

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  Rational operator-() const;
  Rational inverse() const;
  Rational abs() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
  static int compare(const Rational& a, const Rational& b);

  std::string to_string() const;
  static Rational parse(std::string_view s);

 private:
  void release() noexcept;
  static Rational from_i128(__int128 n, __int128 d);
  static Rational from_mpq(mpq_class&& q);
  mpq_class* big() const noexcept { return reinterpret_cast<mpq_class*>(num_); }

  // den_ == 0 marks the spilled form; num_ then stores an owning pointer.
  int64_t num_;
  int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Element re + im·i of the Gaussian rationals ℚ(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}
  GaussianRational(long v) : re_(v) {}
  GaussianRational(long long v) : re_(v) {}
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const noexcept { return re_.is_one() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  /// re² + im², the field norm down to ℚ.
  Rational norm() const;
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Serialized form "a/b+c/d i"; "0" for zero, imaginary part omitted when zero.
  std::string to_string() const;
  static GaussianRational parse(std::string_view s);

 private:
  Rational re_;
  Rational im_;
};

using Q = GaussianRational;

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Least common multiple of the denominators of re and im.
mpz_class denominator_lcm(const GaussianRational& z);

}  // namespace kantor
