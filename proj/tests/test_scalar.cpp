#include <gtest/gtest.h>

#include "kantor/fastfield.hpp"
#include "kantor/parallel.hpp"
#include "kantor/scalar.hpp"

using namespace kantor;

namespace {

Rational random_rational(Rng& rng, long long bound) {
  long long d = rng.uniform(1, bound);
  return Rational(rng.uniform(-bound, bound), d);
}

Q random_q(Rng& rng, long long bound) { return Q(random_rational(rng, bound), random_rational(rng, bound)); }

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational a(6, -4);
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ(Rational(0, 7).to_string(), "0");
  EXPECT_EQ(Rational(10, 5), Rational(2));
  EXPECT_TRUE(Rational(10, 5).is_integer());
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, SpillsToBigAndBack) {
  Rational big(1);
  for (int k = 0; k < 100; ++k) big *= Rational(3);
  EXPECT_FALSE(big.is_small());
  Rational back = big;
  for (int k = 0; k < 100; ++k) back /= Rational(3);
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, Rational(1));
  Rational sum = big + (-big);
  EXPECT_TRUE(sum.is_zero());
  EXPECT_TRUE(sum.is_small());
}

TEST(Rational, OverflowBoundaries) {
  Rational m(INT64_MAX);
  Rational s = m + Rational(1);
  EXPECT_EQ(s.to_string(), "9223372036854775808");
  EXPECT_EQ(s - Rational(1), m);
  Rational f(INT64_MAX - 2, INT64_MAX);
  Rational g = f * f;
  EXPECT_EQ(g * f.inverse(), f);
}

TEST(Rational, ParseRoundTrip) {
  for (const char* s : {"0", "5", "-7/3", "123456789012345678901234567891/7"}) {
    EXPECT_EQ(Rational::parse(s).to_string(), s);
  }
  EXPECT_EQ(Rational::parse("4/6").to_string(), "2/3");
  EXPECT_THROW(Rational::parse("1/"), ParseError);
  EXPECT_THROW(Rational::parse("a"), ParseError);
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
}

TEST(GaussianRational, Format) {
  EXPECT_EQ(Q().to_string(), "0");
  EXPECT_EQ(Q(Rational(1, 2), Rational(1, 3)).to_string(), "1/2+1/3 i");
  EXPECT_EQ(Q(Rational(1, 2), Rational(-1, 3)).to_string(), "1/2-1/3 i");
  EXPECT_EQ(Q(Rational(0), Rational(-5)).to_string(), "-5 i");
  EXPECT_EQ(Q(Rational(3)).to_string(), "3");
}

TEST(GaussianRational, ParseRoundTrip) {
  Rng rng(11);
  for (int k = 0; k < 500; ++k) {
    Q z = random_q(rng, 50);
    EXPECT_EQ(Q::parse(z.to_string()), z);
  }
  EXPECT_EQ(Q::parse("i"), Q::i());
  EXPECT_EQ(Q::parse("-i"), -Q::i());
  EXPECT_EQ(Q::parse("-1/2-3/4 i"), Q(Rational(-1, 2), Rational(-3, 4)));
}

TEST(GaussianRational, ISquaredIsMinusOne) { EXPECT_EQ(Q::i() * Q::i(), Q(-1)); }

TEST(GaussianRationalProperty, FieldAxioms) {
  Rng rng(2024);
  for (int k = 0; k < 500; ++k) {
    Q a = random_q(rng, 30), b = random_q(rng, 30), c = random_q(rng, 30);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, Q());
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Q(1));
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
  }
}

TEST(GaussianRationalProperty, LargeValuesStayExact) {
  Rng rng(5);
  Q acc(1);
  std::vector<Q> factors;
  for (int k = 0; k < 60; ++k) {
    Q f = random_q(rng, 1000);
    if (f.is_zero()) continue;
    factors.push_back(f);
    acc *= f;
  }
  for (const auto& f : factors) acc /= f;
  EXPECT_EQ(acc, Q(1));
}

TEST(Fp, ReductionIsHomomorphism) {
  Rng rng(9);
  EXPECT_EQ(Fp::i() * Fp::i(), Fp(-1));
  for (int k = 0; k < 300; ++k) {
    Q a = random_q(rng, 40), b = random_q(rng, 40);
    EXPECT_EQ(reduce_mod_p(a * b), reduce_mod_p(a) * reduce_mod_p(b));
    EXPECT_EQ(reduce_mod_p(a + b), reduce_mod_p(a) + reduce_mod_p(b));
  }
}

TEST(GaussInt, OverflowIsDetected) {
  GaussInt big(INT64_MAX / 2 + 1);
  EXPECT_THROW(big + big, IntegerOverflow);
  EXPECT_THROW(big * GaussInt(0, 2), IntegerOverflow);
  EXPECT_EQ(GaussInt(1, 2) * GaussInt(3, -1), GaussInt(5, 5));
}

TEST(GaussInt, ScalingClearsDenominators) {
  Q z(Rational(1, 2), Rational(-3, 4));
  EXPECT_EQ(scaled_to_gauss_int(z, mpz_class(4)), GaussInt(2, -3));
  EXPECT_THROW(scaled_to_gauss_int(z, mpz_class(2)), std::invalid_argument);
}
