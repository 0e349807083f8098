#include <gtest/gtest.h>

#include "kantor/clifford.hpp"
#include "kantor/parallel.hpp"

using namespace kantor;

namespace {

/// x^{⊗k} for a 2-vector x.
ZVec tensor_power(Zi x0, Zi x1, std::size_t k) {
  ZVec v{Zi(1)};
  for (std::size_t q = 0; q < k; ++q) {
    ZVec next(v.size() * 2);
    for (std::size_t j = 0; j < v.size(); ++j) {
      next[2 * j] = v[j] * x0;
      next[2 * j + 1] = v[j] * x1;
    }
    v = std::move(next);
  }
  return v;
}

ZVec random_semispinor(const CliffordRep& rep, int sign, Rng& rng) {
  ZVec s(rep.spinor_dim());
  for (std::size_t j = 0; j < rep.semispinor_dim(); ++j)
    axpy(s, Zi(rng.uniform(-2, 2), rng.uniform(-2, 2)), rep.semispinor_basis(sign, j));
  return s;
}

ZVec random_spinor(const CliffordRep& rep, Rng& rng) {
  ZVec s(rep.spinor_dim());
  for (auto& x : s) x = Zi(rng.uniform(-2, 2), rng.uniform(-2, 2));
  return s;
}

}  // namespace

TEST(Clifford, RelationsInEveryDimension) {
  for (std::size_t n = 2; n <= 14; ++n) {
    CliffordRep rep(n);
    EXPECT_EQ(rep.spinor_dim(), std::size_t{1} << (n / 2));
    EXPECT_NO_THROW(rep.verify());
    auto sq = (rep.volume() * rep.volume()).scalar_phase();
    ASSERT_TRUE(sq.has_value()) << n;
    if (rep.even()) EXPECT_EQ(*sq, static_cast<int>((n / 2) % 2 == 0 ? 0 : 2)) << n;
  }
  EXPECT_THROW(CliffordRep(1), std::invalid_argument);
  EXPECT_THROW(CliffordRep(15), std::invalid_argument);
}

TEST(Clifford, DimensionTwoIsG1G2) {
  CliffordRep rep(2);
  Matrix<Q> g1(2, 2), g2(2, 2);
  g1(0, 0) = Q::i();
  g1(1, 1) = -Q::i();
  g2(0, 1) = Q::i();
  g2(1, 0) = Q::i();
  EXPECT_EQ(rep.gamma(0).to_matrix(), g1);
  EXPECT_EQ(rep.gamma(1).to_matrix(), g2);
  EXPECT_EQ(rep.pair(0, 0), Monomial::identity(2).negated());
}

TEST(Clifford, OddDimensionsWithOddHalfHaveUnitVolume) {
  for (std::size_t n : {3u, 7u, 11u}) {
    CliffordRep rep(n);
    EXPECT_EQ(rep.volume(), Monomial::identity(rep.spinor_dim())) << n;
  }
  EXPECT_THROW(CliffordRep(7).chirality(), std::logic_error);
}

TEST(Clifford, ChiralityIsTensorPowerOfT) {
  CliffordRep rep(12);
  Matrix<Q> t(2, 2);
  t(0, 1) = -Q::i();
  t(1, 0) = Q::i();
  Matrix<Q> power = Matrix<Q>::identity(1);
  for (int q = 0; q < 6; ++q) power = kronecker(power, t);
  EXPECT_EQ(rep.chirality().to_matrix(), power);
  // (1, i) spans the +1 eigenspace of T.
  auto plus = tensor_power(1, Zi(0, 1), 6);
  EXPECT_EQ(rep.chirality().apply(plus), plus);
  EXPECT_NO_THROW(rep.semispinor_coordinates(1, plus));
  EXPECT_THROW(rep.semispinor_coordinates(-1, plus), std::invalid_argument);
}

TEST(Clifford, SemispinorBasesAreEigenvectors) {
  CliffordRep rep(10);
  for (int sign : {1, -1})
    for (std::size_t j = 0; j < rep.semispinor_dim(); ++j) {
      auto v = rep.semispinor_basis(sign, j);
      EXPECT_EQ(rep.chirality().apply(v), scaled(v, Zi(sign)));
      auto c = rep.semispinor_coordinates(sign, v);
      for (std::size_t q = 0; q < c.size(); ++q) EXPECT_EQ(c[q], Zi(q == j ? 1 : 0));
    }
}

TEST(AdmissibleForms, CatalogInvariants) {
  struct Case {
    std::size_t n;
    int tau, sigma, iota;
  };
  for (auto c : {Case{7, -1, 1, 0}, Case{8, 1, 1, 1}, Case{10, -1, -1, -1}, Case{12, -1, -1, 1}, Case{14, -1, 1, -1}}) {
    CliffordRep rep(c.n);
    auto f = catalog_form(rep);
    EXPECT_EQ(f.tau, c.tau) << c.n;
    EXPECT_EQ(f.sigma, c.sigma) << c.n;
    EXPECT_EQ(f.iota, c.iota) << c.n;
    EXPECT_EQ(f.pattern.size(), rep.factors());
  }
  EXPECT_EQ(catalog_form(CliffordRep(10)).pattern, "wgwgw");
  EXPECT_EQ(catalog_form(CliffordRep(12)).pattern, "gwgwgw");
  EXPECT_THROW(admissible_form(CliffordRep(10), -1, -1, 1), UnrealizableInvariants);
  EXPECT_THROW(kronecker_form(CliffordRep(4), "gg"), std::invalid_argument);
}

TEST(AdmissibleForms, InvariantsHoldOnVectors) {
  Rng rng(5);
  for (std::size_t n : {7u, 10u, 12u, 14u}) {
    CliffordRep rep(n);
    auto beta = catalog_form(rep);
    for (int trial = 0; trial < 5; ++trial) {
      auto s = random_spinor(rep, rng), t = random_spinor(rep, rng);
      EXPECT_EQ(beta(s, t), beta(t, s) * Zi(beta.sigma));
      for (std::size_t a = 0; a < n; ++a) {
        EXPECT_EQ(beta(rep.gamma(a).apply(s), t), beta(s, rep.gamma(a).apply(t)) * Zi(beta.tau));
        for (std::size_t b = a + 1; b < n; ++b)
          EXPECT_EQ(beta(rep.pair(a, b).apply(s), t) + beta(s, rep.pair(a, b).apply(t)), Zi(0));
      }
    }
  }
}

TEST(Currents, DimensionTenSpotValues) {
  CliffordRep rep(10);
  auto beta = catalog_form(rep);
  auto t = tensor_power(1, Zi(0, 1), 5);
  auto r = tensor_power(1, Zi(0, -1), 5);
  EXPECT_NO_THROW(rep.semispinor_coordinates(1, t));
  EXPECT_NO_THROW(rep.semispinor_coordinates(-1, r));
  EXPECT_EQ(beta(r, t), Zi(0, 32));
  auto current = gamma_current(rep, beta, t, t);
  for (auto x : current) EXPECT_TRUE(x.is_zero());
  // Γ⁽²⁾(r,t) = −32 Σ_{l odd} e_l∧e_{l+1}.
  auto w = gamma2(rep, beta, r, t);
  for (std::size_t a = 0; a < 10; ++a)
    for (std::size_t b = a + 1; b < 10; ++b)
      EXPECT_EQ(w.at(a, b), Zi(a % 2 == 0 && b == a + 1 ? -32 : 0)) << a << "," << b;
  EXPECT_EQ(spin_action_doubled(rep, w, t), scaled(t, Zi(0, 160)));
}

TEST(Currents, DimensionTwelveSpotValues) {
  CliffordRep rep(12);
  auto beta = catalog_form(rep);
  auto s = tensor_power(1, Zi(0, 1), 6);
  auto t = tensor_power(1, Zi(0, -1), 6);
  EXPECT_EQ(beta(s, t), Zi(0, 64));
  EXPECT_EQ(beta(s, s), Zi(0));
  EXPECT_TRUE(gamma2(rep, beta, s, s).is_zero());
  auto w = gamma2(rep, beta, s, t);
  for (std::size_t a = 0; a < 12; ++a)
    for (std::size_t b = a + 1; b < 12; ++b) EXPECT_EQ(w.at(a, b), Zi(a % 2 == 0 && b == a + 1 ? 64 : 0));
}

TEST(Currents, Gamma2IsAntisymmetricMatrix) {
  Rng rng(2);
  CliffordRep rep(10);
  auto beta = catalog_form(rep);
  auto s = random_semispinor(rep, 1, rng), t = random_semispinor(rep, -1, rng);
  auto m = gamma2(rep, beta, s, t).to_matrix();
  EXPECT_EQ(m.transpose(), m.scaled(Q(-1)));
  // σ = −1: Γ⁽²⁾ is symmetric in its arguments, Γ antisymmetric.
  auto w1 = gamma2(rep, beta, s, t), w2 = gamma2(rep, beta, t, s);
  EXPECT_EQ(w1.coeff, w2.coeff);
  auto g1 = gamma_current(rep, beta, s, t), g2 = gamma_current(rep, beta, t, s);
  EXPECT_EQ(g1, scaled(g2, Zi(-1)));
}

TEST(Currents, FierzIdentityInDimensionTen) {
  // Γ(t,t)∘r = Γ⁽²⁾(r,t)·t + β(r,t)(½ + 3c₃)t with c₃ = −1, for t ∈ S⁺ and r ∈ S⁻.
  Rng rng(11);
  CliffordRep rep(10);
  auto beta = catalog_form(rep);
  for (int trial = 0; trial < 8; ++trial) {
    auto t = random_semispinor(rep, 1, rng), r = random_semispinor(rep, -1, rng);
    auto lhs = scaled(rep.act(gamma_current(rep, beta, t, t), r), Zi(2));
    auto rhs = spin_action_doubled(rep, gamma2(rep, beta, r, t), t);
    axpy(rhs, beta(r, t) * Zi(-5), t);
    EXPECT_EQ(lhs, rhs) << trial;
  }
}

TEST(Volumes, DimensionSeven) {
  CliffordRep rep(7);
  auto full = volume_element(rep, 7);
  EXPECT_EQ(*full.monomial, Monomial::identity(8));
  EXPECT_EQ(full.square, 1);
  auto w3 = volume_element(rep, 3);
  EXPECT_EQ(w3.square, 1);
  EXPECT_NE(*w3.monomial, Monomial::identity(8));
}

TEST(Volumes, CatalogSubspacesCoverMinusReflection) {
  for (auto [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{10, 1}, {10, 3}, {10, 5}, {12, 2}, {12, 6}, {14, 3}, {14, 7}}) {
    CliffordRep rep(n);
    auto v = volume_element(rep, m);
    EXPECT_TRUE(v.square == 1 || v.square == -1);
    EXPECT_EQ(v.subspace.size(), m);
  }
  EXPECT_THROW(volume_element(CliffordRep(6), std::vector<std::size_t>{2, 1}), std::invalid_argument);
}

TEST(Volumes, ExponentialSquaresToVolume) {
  CliffordRep rep(12);
  auto v = isotropic_exponential(rep);
  EXPECT_EQ(v.denominator, 8);
  auto s = tensor_power(1, Zi(0, 1), 6);
  auto twice = v.apply_scaled(v.apply_scaled(s));
  EXPECT_EQ(twice, scaled(s, Zi(-64)));
  EXPECT_THROW(isotropic_exponential(CliffordRep(10)), SpecMismatch);
}
