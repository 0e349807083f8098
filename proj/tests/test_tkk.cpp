#include <gtest/gtest.h>

#include "kantor/catalog.hpp"
#include "kantor/tkk.hpp"

using namespace kantor;

namespace {

std::vector<std::size_t> dims_of(const CatalogEntry& e) {
  return {e.expected.tkk_dims.begin(), e.expected.tkk_dims.end()};
}

}  // namespace

TEST(Tkk, Sl3FromSmallestSystem) {
  auto p = tkk_build(ksl_transpose(1, 1, 1));
  EXPECT_EQ(p.algebra.graded_dims(), (std::vector<std::size_t>{1, 2, 2, 2, 1}));
  EXPECT_EQ(p.algebra.dim(), 8u);
  EXPECT_TRUE(check_jacobi(p.algebra, CheckMode::Exhaustive).ok);
  EXPECT_TRUE(check_involution(p.algebra, p.sigma).ok);
  EXPECT_TRUE(is_simple(p.algebra, CheckMode::Exhaustive));
  EXPECT_TRUE(check_grading_element(p.algebra).ok);
}

TEST(Tkk, Kar4GivesSo10) {
  auto p = tkk_build(kar(4));
  EXPECT_EQ(p.algebra.graded_dims(), (std::vector<std::size_t>{4, 10, 17, 10, 4}));
  EXPECT_EQ(p.algebra.dim(), 45u);
  EXPECT_TRUE(check_jacobi(p.algebra, CheckMode::Exhaustive).ok);
  EXPECT_TRUE(is_simple(p.algebra, CheckMode::Exhaustive));
}

TEST(Tkk, RejectsCenter) {
  EXPECT_THROW(tkk_build(direct_sum(ksl_transpose(1, 1, 1), zero_system(1))), NotCenterless);
}

TEST(Tkk, EmbeddingHasDegreeMinusOne) {
  auto v = ksp_symplectic(1, 2);
  auto p = tkk_build(v);
  ASSERT_EQ(p.embedding.size(), v.dim());
  for (auto idx : p.embedding) EXPECT_EQ(p.algebra.basis()[idx].degree, -1);
}

TEST(Tkk, TransitiveAndFundamental) {
  auto p = tkk_build(kso_reflexive(3, 2, 0));
  auto r = check_transitive_fundamental(p.algebra);
  EXPECT_TRUE(r.transitive);
  EXPECT_TRUE(r.fundamental);
}

TEST(Tkk, BracketOfMinusOnesIsKantorOperator) {
  // [x, y] spans g_{-2}; its bracket with z recovers K_xy(z) through sigma.
  auto v = ksl_transpose(1, 1, 2);
  auto p = tkk_build(v);
  const auto& g = p.algebra;
  std::size_t nonzero = 0;
  for (std::size_t a = 0; a < v.dim(); ++a)
    for (std::size_t b = 0; b < v.dim(); ++b) {
      SV br = g.bracket(g.unit(p.embedding[a]), g.unit(p.embedding[b]));
      if (br.nnz()) ++nonzero;
      for (auto [k, c] : br) EXPECT_EQ(g.basis()[k].degree, -2);
    }
  EXPECT_GT(nonzero, 0u);
}

TEST(Roundtrip, ClassicalGrid) {
  for (const auto& e : classical_grid(8)) {
    auto v = e.build();
    EXPECT_TRUE(roundtrip_check(v)) << e.id;
  }
}

TEST(Roundtrip, PairGivesBackProduct) {
  auto v = kso_antireflexive(2, 1);
  auto w = kts_from_pair(tkk_build(v), "back");
  EXPECT_EQ(w.id(), "back");
  EXPECT_TRUE(w.same_tensor(v));
}

TEST(ClassicalGrid, DimensionsMatchLieTheory) {
  auto grid = classical_grid(12);
  EXPECT_GT(grid.size(), 100u);
  for (const auto& e : grid) {
    auto v = e.build();
    ASSERT_EQ(v.dim(), e.dim) << e.id;
    auto p = tkk_build(v);
    EXPECT_EQ(p.algebra.graded_dims(), dims_of(e)) << e.id;
    EXPECT_EQ(e.expected.tkk_dims[1], e.dim) << e.id;
  }
}

TEST(ClassicalGrid, EveryEntryIsASimpleKts) {
  for (const auto& e : classical_grid(12)) {
    auto v = e.build();
    EXPECT_TRUE(check_axioms(v).ok) << e.id;
    EXPECT_TRUE(is_centerless(v)) << e.id;
    EXPECT_TRUE(is_k_simple(v)) << e.id;
  }
}

TEST(ClassicalGrid, SmallAlgebrasAreSimpleLieAlgebras) {
  for (const auto& e : classical_grid(6)) {
    auto p = tkk_build(e.build());
    EXPECT_TRUE(check_jacobi(p.algebra, CheckMode::Exhaustive).ok) << e.id;
    EXPECT_TRUE(check_involution(p.algebra, p.sigma).ok) << e.id;
    EXPECT_TRUE(is_simple(p.algebra, CheckMode::Exhaustive)) << e.id;
  }
}

TEST(ClassicalGrid, LookupById) {
  EXPECT_EQ(classical_entry("Kar(4)").dim, 10u);
  EXPECT_EQ(classical_entry("Ksl(1,1,1;t)").algebra, "sl(3)");
  EXPECT_THROW(classical_entry("Kar(1)"), UnknownId);
}

TEST(ClassicalGrid, ParameterGuards) {
  EXPECT_THROW(ksl_transpose(0, 1, 1), ParameterOutOfRange);
  EXPECT_THROW(kso_reflexive(3, 2, 2), ParameterOutOfRange);
  EXPECT_THROW(kar(1), ParameterOutOfRange);
}

TEST(Derivations, Sl3HasNone) {
  // g_0 is the Cartan subalgebra spanned by L_00 = diag(2,-1), L_11 = diag(-1,2); sigma is -1 there.
  auto p = tkk_build(ksl_transpose(1, 1, 1));
  auto d = derivations_commuting_with(p.algebra, p.sigma);
  EXPECT_EQ(d.dim(), 0u);
  EXPECT_EQ(center_of_degree_zero(p.algebra).size(), 2u);
}
