#include <gtest/gtest.h>

#include "kantor/exterior.hpp"
#include "kantor/parallel.hpp"

using namespace kantor;

namespace {

Form random_form(std::size_t n, int k, Rng& rng) {
  Form f(n);
  for (Mask m : degree_basis(n, k)) f.add(m, Q(Rational(rng.uniform(-3, 3)), Rational(rng.uniform(-1, 1))));
  return f;
}

Matrix<Q> random_matrix(std::size_t n, Rng& rng) {
  Matrix<Q> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Q(rng.uniform(-2, 2));
  return a;
}

Mask all_of(std::size_t n) { return (Mask{1} << n) - 1; }

}  // namespace

TEST(Exterior, ShuffleSigns) {
  EXPECT_EQ(shuffle_sign(0b01, 0b10), 1);
  EXPECT_EQ(shuffle_sign(0b10, 0b01), -1);
  EXPECT_EQ(shuffle_sign(0b11, 0b01), 0);
  EXPECT_EQ(shuffle_sign(0b100, 0b011), 1);   // e2∧e0e1 = e0e1e2
  EXPECT_EQ(shuffle_sign(0b010, 0b101), -1);  // e1∧e0e2 = −e0e1e2
  EXPECT_EQ(degree_basis(5, 2).size(), 10u);
  EXPECT_EQ(full_basis(6).size(), 64u);
}

TEST(Exterior, WedgeIsGradedCommutativeAndAssociative) {
  Rng rng(0);
  for (int trial = 0; trial < 10; ++trial) {
    const Form a = random_form(6, 1 + trial % 3, rng), b = random_form(6, 2, rng), c = random_form(6, 1, rng);
    const int ka = a.homogeneous_degree();
    EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
    EXPECT_EQ(wedge(a, b), wedge(b, a));
    EXPECT_EQ(wedge(a, c), wedge(c, a) * Q(ka % 2 == 0 ? 1 : -1));
    EXPECT_TRUE(wedge(c, c).is_zero());
  }
}

TEST(Exterior, ContractionIsAdjointToWedge) {
  Rng rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const Form a = random_form(6, 2, rng), b = random_form(6, 1, rng), xi = random_form(6, 3, rng);
    EXPECT_EQ(pairing(contract(a, xi), b), pairing(xi, wedge(a, b)));
  }
}

TEST(Exterior, HodgeStar) {
  Rng rng(2);
  const std::size_t n = 6;
  for (int k = 0; k <= 6; ++k) {
    const Form a = random_form(n, k, rng), b = random_form(n, k, rng);
    EXPECT_EQ(wedge(a, hodge(b)), Form::basis(n, all_of(n), pairing(a, b)));
    EXPECT_EQ(hodge(hodge(a)), a * Q((k * (6 - k)) % 2 == 0 ? 1 : -1));
  }
  const std::vector<int> signs{1, -1, 1, -1, 1, -1};
  const Form a = random_form(n, 2, rng), b = random_form(n, 2, rng);
  Q eta;
  for (const auto& [m, c] : a.terms()) {
    int s = 1;
    for (Mask r = m; r; r &= r - 1) s *= signs[std::countr_zero(r)];
    eta += c * b.coeff(m) * Q(s);
  }
  EXPECT_EQ(wedge(a, hodge(b, signs)), Form::basis(n, all_of(n), eta));
}

TEST(Exterior, ActionIsDerivationAndDualIsContragredient) {
  Rng rng(3);
  const std::size_t n = 5;
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix<Q> a = random_matrix(n, rng);
    const Form x = random_form(n, 2, rng), y = random_form(n, 1, rng), xi = random_form(n, 3, rng);
    EXPECT_EQ(act(a, wedge(x, y), false), wedge(act(a, x, false), y) + wedge(x, act(a, y, false)));
    EXPECT_EQ(pairing(act(a, wedge(x, y), false), xi) + pairing(wedge(x, y), act(a, xi, true)), Q());
  }
}

TEST(Exterior, TransformIsMultiplicative) {
  Rng rng(4);
  const std::size_t n = 4;
  const Matrix<Q> g = random_matrix(n, rng), h = random_matrix(n, rng);
  const Form x = random_form(n, 2, rng), y = random_form(n, 1, rng);
  EXPECT_EQ(transform(g, wedge(x, y)), wedge(transform(g, x), transform(g, y)));
  EXPECT_EQ(transform(g * h, x), transform(g, transform(h, x)));
  EXPECT_EQ(transform(Matrix<Q>::identity(n), x), x);
}

TEST(Exterior, BulletNormalization) {
  const std::size_t n = 6;
  const Mask low = 0b000111;
  const Matrix<Q> b = bullet(Form::basis(n, low), Form::basis(n, low));
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_EQ(b(i, i), i < 3 ? Q(Rational(1, 2)) : Q(Rational(-1, 2)));
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) EXPECT_EQ(b(i, j), Q());
  }
  Rng rng(5);
  const Form x = random_form(n, 2, rng), xi = random_form(n, 2, rng);
  const Matrix<Q> m = bullet(x, xi);
  Q trace;
  for (std::size_t i = 0; i < n; ++i) trace += m(i, i);
  EXPECT_EQ(trace, Q());
  EXPECT_THROW(bullet(x, random_form(n, 3, rng)), std::invalid_argument);
}

TEST(Exterior, MaskIndexRoundTrip) {
  const MaskIndex idx(5, degree_basis(5, 2));
  Rng rng(6);
  const Form x = random_form(5, 2, rng);
  EXPECT_EQ(idx.form(idx.coordinates(x)), x);
  EXPECT_THROW(idx.coordinates(Form::basis(5, 0b111)), std::invalid_argument);
  EXPECT_EQ(idx.index(idx.mask(3)), 3u);
}
