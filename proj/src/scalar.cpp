#include "kantor/scalar.hpp"

#include <cctype>
#include <climits>
#include <ostream>

namespace kantor {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

inline uint64_t gcd_u64(uint64_t a, uint64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

inline int ctz128(u128 v) {
  uint64_t lo = static_cast<uint64_t>(v);
  if (lo != 0) return __builtin_ctzll(lo);
  return 64 + __builtin_ctzll(static_cast<uint64_t>(v >> 64));
}

u128 gcd_u128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) return gcd_u64(static_cast<uint64_t>(a), static_cast<uint64_t>(b));
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = ctz128(a | b);
  a >>= ctz128(a);
  do {
    b >>= ctz128(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

inline uint64_t uabs(int64_t v) { return v < 0 ? 0 - static_cast<uint64_t>(v) : static_cast<uint64_t>(v); }

inline bool fits_small(i128 v) { return v > static_cast<i128>(INT64_MIN) && v <= static_cast<i128>(INT64_MAX); }

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(0) - static_cast<u128>(v) : static_cast<u128>(v);
  mpz_class r(static_cast<unsigned long>(static_cast<uint64_t>(u >> 64)));
  r <<= 64;
  r += static_cast<unsigned long>(static_cast<uint64_t>(u));
  if (neg) r = -r;
  return r;
}

bool mpz_fits_small(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) && z != LONG_MIN;
}

}  // namespace

Rational::Rational(int v) : Rational(static_cast<long long>(v)) {}
Rational::Rational(long v) : Rational(static_cast<long long>(v)) {}

Rational::Rational(long long v) : num_(v), den_(1) {
  if (v == LLONG_MIN) {
    den_ = 0;
    num_ = reinterpret_cast<int64_t>(new mpq_class(mpz_from_i128(v)));
  }
}

Rational::Rational(long long num, long long den) : num_(0), den_(1) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  *this = from_i128(den < 0 ? -static_cast<i128>(num) : static_cast<i128>(num),
                    den < 0 ? -static_cast<i128>(den) : static_cast<i128>(den));
}

Rational::Rational(const mpq_class& q) : num_(0), den_(1) {
  mpq_class c(q);
  c.canonicalize();
  *this = from_mpq(std::move(c));
}

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
  if (o.den_ == 0) num_ = reinterpret_cast<int64_t>(new mpq_class(*o.big()));
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  if (o.den_ == 0) {
    if (den_ == 0) {
      *big() = *o.big();
      return *this;
    }
    num_ = reinterpret_cast<int64_t>(new mpq_class(*o.big()));
    den_ = 0;
    return *this;
  }
  if (den_ == 0) release();
  num_ = o.num_;
  den_ = o.den_;
  return *this;
}

Rational& Rational::operator=(Rational&& o) noexcept {
  if (this == &o) return *this;
  if (den_ == 0) release();
  num_ = o.num_;
  den_ = o.den_;
  o.num_ = 0;
  o.den_ = 1;
  return *this;
}

void Rational::release() noexcept {
  delete big();
  num_ = 0;
  den_ = 1;
}

Rational Rational::from_i128(i128 n, i128 d) {
  Rational r;
  if (n == 0) return r;
  u128 g = gcd_u128(n < 0 ? static_cast<u128>(0) - static_cast<u128>(n) : static_cast<u128>(n), static_cast<u128>(d));
  if (g != 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (fits_small(n) && fits_small(d)) {
    r.num_ = static_cast<int64_t>(n);
    r.den_ = static_cast<int64_t>(d);
    return r;
  }
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  r.num_ = reinterpret_cast<int64_t>(new mpq_class(std::move(q)));
  r.den_ = 0;
  return r;
}

Rational Rational::from_mpq(mpq_class&& q) {
  Rational r;
  if (mpz_fits_small(q.get_num()) && mpz_fits_small(q.get_den())) {
    r.num_ = q.get_num().get_si();
    r.den_ = q.get_den().get_si();
    return r;
  }
  r.num_ = reinterpret_cast<int64_t>(new mpq_class(std::move(q)));
  r.den_ = 0;
  return r;
}

bool Rational::is_integer() const { return den_ == 1 || (den_ == 0 && big()->get_den() == 1); }

int Rational::sign() const {
  if (den_ != 0) return (num_ > 0) - (num_ < 0);
  return sgn(*big());
}

mpq_class Rational::to_mpq() const {
  if (den_ == 0) return *big();
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const {
  if (den_ == 0) return big()->get_num();
  return mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  if (den_ == 0) return big()->get_den();
  return mpz_class(static_cast<long>(den_));
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ != 0 && o.den_ != 0) {
    if (o.num_ == 0) return *this;
    if (den_ == o.den_) {
      long long r;
      if (den_ == 1 && !__builtin_add_overflow(num_, o.num_, &r) && r != LLONG_MIN) {
        num_ = r;
        return *this;
      }
      *this = from_i128(static_cast<i128>(num_) + o.num_, den_);
      return *this;
    }
    *this = from_i128(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                      static_cast<i128>(den_) * o.den_);
    return *this;
  }
  *this = from_mpq(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (den_ != 0 && o.den_ != 0) {
    if (o.num_ == 0) return *this;
    if (den_ == o.den_) {
      long long r;
      if (den_ == 1 && !__builtin_sub_overflow(num_, o.num_, &r) && r != LLONG_MIN) {
        num_ = r;
        return *this;
      }
      *this = from_i128(static_cast<i128>(num_) - o.num_, den_);
      return *this;
    }
    *this = from_i128(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
                      static_cast<i128>(den_) * o.den_);
    return *this;
  }
  *this = from_mpq(to_mpq() - o.to_mpq());
  return *this;
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.den_ != 0 && b.den_ != 0) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    Rational r;
    if (a.den_ == 1 && b.den_ == 1) {
      long long p;
      if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != LLONG_MIN) {
        r.num_ = p;
        return r;
      }
      return Rational::from_i128(static_cast<i128>(a.num_) * b.num_, 1);
    }
    uint64_t g1 = gcd_u64(uabs(a.num_), static_cast<uint64_t>(b.den_));
    uint64_t g2 = gcd_u64(uabs(b.num_), static_cast<uint64_t>(a.den_));
    i128 n = static_cast<i128>(a.num_ / static_cast<int64_t>(g1)) * (b.num_ / static_cast<int64_t>(g2));
    i128 d = static_cast<i128>(a.den_ / static_cast<int64_t>(g2)) * (b.den_ / static_cast<int64_t>(g1));
    if (fits_small(n) && fits_small(d)) {
      r.num_ = static_cast<int64_t>(n);
      r.den_ = static_cast<int64_t>(d);
      return r;
    }
    return Rational::from_i128(n, d);
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational& Rational::operator*=(const Rational& o) {
  *this = *this * o;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  *this = *this * o.inverse();
  return *this;
}

Rational Rational::operator-() const {
  if (den_ != 0) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return from_mpq(-*big());
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: division by zero");
  if (den_ != 0) {
    Rational r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
  }
  mpq_class q;
  mpq_inv(q.get_mpq_t(), big()->get_mpq_t());
  return from_mpq(std::move(q));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

bool operator==(const Rational& a, const Rational& b) {
  if (a.den_ != 0 && b.den_ != 0) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.den_ == 0 && b.den_ == 0) return *a.big() == *b.big();
  return false;
}

int Rational::compare(const Rational& a, const Rational& b) {
  if (a.den_ != 0 && b.den_ != 0) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return (l > r) - (l < r);
  }
  return cmp(a.to_mpq(), b.to_mpq());
}

std::string Rational::to_string() const {
  if (den_ == 0) return big()->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view s) {
  std::string t(s);
  if (t.empty()) throw ParseError("empty rational");
  std::size_t pos = 0;
  if (t[0] == '+' || t[0] == '-') pos = 1;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t k = pos; k < t.size(); ++k) {
    char c = t[k];
    if (c == '/') {
      if (seen_slash || !digit_before) throw ParseError("malformed rational: " + t);
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw ParseError("malformed rational: " + t);
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) throw ParseError("malformed rational: " + t);
  if (t[0] == '+') t.erase(0, 1);
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw ParseError("malformed rational: " + t);
  if (q.get_den() == 0) throw ParseError("zero denominator: " + t);
  q.canonicalize();
  return from_mpq(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational GaussianRational::norm() const { return re_ * re_ + im_ * im_; }

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("GaussianRational: division by zero");
  if (im_.is_zero()) return GaussianRational(re_.inverse());
  Rational n = norm().inverse();
  return {re_ * n, -(im_ * n)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (!o.im_.is_zero()) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (!o.im_.is_zero()) im_ -= o.im_;
  return *this;
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  const bool ar = a.im_.is_zero();
  const bool br = b.im_.is_zero();
  if (ar && br) return GaussianRational(a.re_ * b.re_);
  if (ar) return {a.re_ * b.re_, a.re_ * b.im_};
  if (br) return {a.re_ * b.re_, a.im_ * b.re_};
  if (a.re_.is_zero()) return {-(a.im_ * b.im_), a.im_ * b.re_};
  if (b.re_.is_zero()) return {-(a.im_ * b.im_), a.re_ * b.im_};
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  *this = *this * o;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  if (re_.is_zero()) return im_.to_string() + " i";
  std::string s = re_.to_string();
  if (im_.sign() < 0) {
    s += "-" + (-im_).to_string();
  } else {
    s += "+" + im_.to_string();
  }
  return s + " i";
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty scalar");
  if (s.back() != 'i') return GaussianRational(Rational::parse(s));
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  Rational im;
  if (im_part.empty() || im_part == "+") {
    im = Rational(1);
  } else if (im_part == "-") {
    im = Rational(-1);
  } else {
    im = Rational::parse(im_part);
  }
  Rational re = re_part.empty() ? Rational(0) : Rational::parse(re_part);
  return {re, im};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

mpz_class denominator_lcm(const GaussianRational& z) {
  mpz_class l;
  mpz_class a = z.re().denominator();
  mpz_class b = z.im().denominator();
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace kantor
