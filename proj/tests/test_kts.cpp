#include <gtest/gtest.h>

#include "kantor/catalog.hpp"
#include "kantor/kts.hpp"
#include "kantor/tkk.hpp"

using namespace kantor;

namespace {

Vec<Q> dense(std::size_t n, std::initializer_list<std::pair<std::size_t, int>> entries) {
  Vec<Q> v(n, Q(0));
  for (auto [k, a] : entries) v[k] = Q(a);
  return v;
}

/// V = V⁺ ⊕ V⁻, both lines; the only nonzero products are (e+ e- e+) = e+ and (e- e+ e-) = e-.
TripleSystem polarized_toy() {
  return TripleSystem("polarized", 2, [](std::size_t i, std::size_t j, std::size_t k) {
    SV out(2);
    if (i == k && i != j) out.push(static_cast<uint32_t>(i), Q(2));
    return out;
  });
}

/// Copy of v with one structure constant rescaled.
TripleSystem perturbed(const TripleSystem& v, std::size_t flat, Q factor) {
  Tensor t = v.tensor();
  t[flat] = t[flat].scaled(factor);
  return TripleSystem::from_tensor(v.id() + "-perturbed", v.dim(), t);
}

}  // namespace

TEST(Axioms, ZeroProductPasses) {
  auto r = check_axioms(zero_system(3), CheckMode::Exhaustive);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.tuples_checked, 243u);
}

TEST(Axioms, ClassicalSmallSystemsPass) {
  for (auto v : {ksl_transpose(1, 1, 1), ksp_symplectic(1, 2), kso_reflexive(3, 2, 1), kar(4)}) {
    auto r = check_axioms(v);
    EXPECT_TRUE(r.ok) << v.id() << ": " << r.message;
  }
}

TEST(Axioms, PerturbationIsCaught) {
  const auto v = ksl_transpose(1, 1, 2);
  bool caught = false;
  for (std::size_t flat = 0; flat < v.tensor().size() && !caught; ++flat) {
    if (v.tensor()[flat].nnz() == 0) continue;
    auto r = check_axioms(perturbed(v, flat, Q(2)), CheckMode::Exhaustive);
    if (!r.ok) {
      caught = true;
      EXPECT_TRUE(r.failed_axiom == 1 || r.failed_axiom == 2);
      EXPECT_EQ(r.witness.size(), 5u);
    }
  }
  EXPECT_TRUE(caught);
}

TEST(Axioms, SampledModeReportsCount) {
  auto r = check_axioms(kar(4), CheckMode::Sampled, Sampling{17, 3});
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.tuples_checked, 17u);
  EXPECT_EQ(r.mode, CheckMode::Sampled);
}

TEST(Axioms, RequireThrowsWithWitness) {
  const auto v = ksl_transpose(1, 1, 2);
  for (std::size_t flat = 0; flat < v.tensor().size(); ++flat) {
    if (v.tensor()[flat].nnz() == 0) continue;
    auto bad = perturbed(v, flat, Q(3));
    if (check_axioms(bad, CheckMode::Exhaustive).ok) continue;
    try {
      require_axioms(bad);
      FAIL() << "no exception";
    } catch (const AxiomViolation& e) {
      EXPECT_EQ(e.witness().size(), 5u);
    }
    return;
  }
  FAIL() << "no perturbation broke the axioms";
}

TEST(Kantor, JordanSystemsHaveVanishingK) {
  // (xyz) = x y^t z + z y^t x on row vectors is a Jordan triple system.
  TripleSystem jordan("jordan", 3, [](std::size_t i, std::size_t j, std::size_t k) {
    Vec<Q> d(3, Q(0));
    if (i == j) d[k] += Q(1);
    if (k == j) d[i] += Q(1);
    return SV::from_dense(d);
  });
  EXPECT_TRUE(check_axioms(jordan).ok);
  EXPECT_TRUE(is_jordan(jordan));
  EXPECT_FALSE(is_jordan(ksl_transpose(1, 1, 1)));
}

TEST(Kantor, TensorColumnsMatchDefinition) {
  auto v = ksl_transpose(1, 1, 1);
  auto x = dense(2, {{0, 1}}), y = dense(2, {{1, 1}});
  auto k = kantor_tensor(v, x, y);
  for (std::size_t c = 0; c < 2; ++c) {
    auto ec = dense(2, {{c, 1}});
    auto lhs = v.product(x, ec, y), rhs = v.product(y, ec, x);
    for (std::size_t r = 0; r < 2; ++r) EXPECT_EQ(k(r, c), lhs[r] - rhs[r]);
  }
}

TEST(Center, ZeroProductIsEverything) { EXPECT_EQ(center(zero_system(4)).dim(), 4u); }

TEST(Center, DirectSumWithZeroLine) {
  auto v = direct_sum(ksl_transpose(1, 1, 1), zero_system(1));
  auto c = center(v);
  ASSERT_EQ(c.dim(), 1u);
  EXPECT_TRUE(c.contains(dense(3, {{2, 1}})));
  EXPECT_FALSE(is_centerless(v));
  EXPECT_TRUE(is_centerless(ksl_transpose(1, 1, 1)));
}

TEST(Ideals, KindsOnPolarizedToy) {
  auto v = polarized_toy();
  EXPECT_TRUE(check_axioms(v).ok);
  // The line V⁺ receives (V V V⁺) and (V⁺ V V) but (V⁻ V⁺ V⁻) lands in V⁻.
  auto plus = SV::unit(2, 0);
  EXPECT_EQ(ideal_closure(v, plus, IdealKind::LeftIdeal).dim(), 1u);
  EXPECT_EQ(ideal_closure(v, plus, IdealKind::KIdeal).dim(), 1u);
  EXPECT_EQ(ideal_closure(v, plus, IdealKind::Ideal).dim(), 2u);
  EXPECT_TRUE(is_simple(v));
  EXPECT_FALSE(is_k_simple(v));
}

TEST(Ideals, ClosureIsClosed) {
  auto v = direct_sum(ksl_transpose(1, 1, 1), ksl_transpose(1, 1, 1));
  auto s = ideal_closure(v, SV::unit(4, 0), IdealKind::Ideal);
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(is_ideal_of_kind(v, s, IdealKind::Ideal));
  EXPECT_FALSE(is_simple(v));
  EXPECT_FALSE(closure_is_everything(v, SV::unit(4, 3), IdealKind::Ideal));
  EXPECT_TRUE(is_simple(kar(4)));
  EXPECT_TRUE(is_k_simple(kar(4)));
  // ℂ^4 is stable under every L_xy, so Kar(4) is reducible.
  EXPECT_FALSE(is_irreducible(kar(4)));
  EXPECT_TRUE(is_irreducible(kso_reflexive(3, 2, 1)));
}

TEST(PIdeals, WholeSpaceAndZero) {
  auto v = ksl_transpose(1, 1, 2);
  Subspace all{3, {dense(3, {{0, 1}}), dense(3, {{1, 1}}), dense(3, {{2, 1}})}};
  auto p = p_ideal_from_K_ideal(v, all);
  EXPECT_EQ(p.plus.dim(), 3u);
  EXPECT_EQ(p.minus.dim(), 3u);
  EXPECT_TRUE(is_p_ideal(v, p));
  auto z = p_ideal_from_K_ideal(v, Subspace{3, {}});
  EXPECT_EQ(z.plus.dim(), 0u);
  EXPECT_EQ(z.minus.dim(), 0u);
}

TEST(PIdeals, RejectsNonKIdeal) {
  auto v = ksl_transpose(1, 1, 1);
  Subspace line{2, {dense(2, {{0, 1}})}};
  EXPECT_THROW(p_ideal_from_K_ideal(v, line), NotAKIdeal);
}

TEST(PIdeals, PolarizedToyHalf) {
  auto v = polarized_toy();
  Subspace plus{2, {dense(2, {{0, 1}})}};
  auto p = p_ideal_from_K_ideal(v, plus);
  EXPECT_EQ(p.minus.dim(), 1u);
  EXPECT_TRUE(p.minus.contains(dense(2, {{1, 1}})));
  EXPECT_TRUE(is_p_ideal(v, p));
}

TEST(Modify, IdentityGivesSameSystem) {
  auto v = kso_reflexive(3, 2, 1);
  auto w = modify(v, Matrix<Q>::identity(v.dim()));
  EXPECT_TRUE(w.same_tensor(v));
}

TEST(Modify, RejectsNonAutomorphismAndNonInvolution) {
  auto v = ksl_transpose(1, 1, 1);
  auto twice = Matrix<Q>::identity(2).scaled(Q(2));
  EXPECT_FALSE(is_automorphism(v, twice));
  EXPECT_THROW(modify(v, twice), std::invalid_argument);
  // (ix, iy, iz) = -i(xyz)
  auto rot = Matrix<Q>::identity(2).scaled(Q::i());
  EXPECT_FALSE(is_automorphism(v, rot));
}

TEST(Modify, SwapOnPolarizedToy) {
  auto v = polarized_toy();
  Matrix<Q> swap(2, 2);
  swap(0, 1) = Q(1);
  swap(1, 0) = Q(1);
  ASSERT_TRUE(is_automorphism(v, swap));
  auto w = modify(v, swap);
  EXPECT_TRUE(check_axioms(w).ok);
  EXPECT_TRUE(modify(w, swap).same_tensor(v));
  EXPECT_FALSE(w.same_tensor(v));
}

TEST(Lts, FromTkkOfSl3) {
  auto p = tkk_build(ksl_transpose(1, 1, 1));
  auto t = lts_of(p.algebra, p.sigma);
  EXPECT_EQ(t.dim(), 4u);
  EXPECT_TRUE(check_lts_axioms(t).ok);
}

TEST(Lts, AbelianGivesZero) {
  GradedLieAlgebra g(std::vector<LieBasisElement>{{"x", -1}, {"y", 1}});
  Involution s({SV::unit(2, 1), SV::unit(2, 0)});
  auto t = lts_of(g, s);
  EXPECT_TRUE(t.same_tensor(zero_system(2)));
}

TEST(Lts, NonLtsIsRejected) {
  // (x y z) = x for every basis triple fails antisymmetry.
  TripleSystem bad("bad", 2, [](std::size_t i, std::size_t, std::size_t) { return SV::unit(2, static_cast<uint32_t>(i)); });
  EXPECT_FALSE(check_lts_axioms(bad).ok);
}
