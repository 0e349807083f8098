#include <gtest/gtest.h>

#include "kantor/lie.hpp"

using namespace kantor;

namespace {

SV vec(std::size_t n, std::initializer_list<std::pair<uint32_t, Q>> entries) {
  SV v(n);
  for (auto& [k, c] : entries) v.push(k, c);
  return v;
}

// Basis order e, h, f with degrees 1, 0, −1.
GradedLieAlgebra sl2(Q ef = Q(1)) {
  GradedLieAlgebra g({{"e", 1}, {"h", 0}, {"f", -1}});
  g.set_bracket(1, 0, vec(3, {{0, Q(2)}}));
  g.set_bracket(1, 2, vec(3, {{2, Q(-2)}}));
  g.set_bracket(0, 2, vec(3, {{1, ef}}));
  g.set_grading_element(vec(3, {{1, Q(Rational(1, 2))}}));
  return g;
}

GradedLieAlgebra abelian(std::vector<int> degrees) {
  std::vector<LieBasisElement> b;
  for (std::size_t k = 0; k < degrees.size(); ++k) b.push_back({"x" + std::to_string(k), degrees[k]});
  return GradedLieAlgebra(b);
}

// Heisenberg g_{-2} = <z>, g_{-1} = <p, q>, [p, q] = z, plus a central c in degree 0.
GradedLieAlgebra heisenberg_plus_center() {
  GradedLieAlgebra g({{"z", -2}, {"p", -1}, {"q", -1}, {"c", 0}});
  g.set_bracket(1, 2, vec(4, {{0, Q(1)}}));
  return g;
}

}  // namespace

TEST(Jacobi, AbelianPasses) {
  auto g = abelian({0, 0, 1, -1});
  EXPECT_TRUE(check_jacobi(g, CheckMode::Exhaustive).ok);
  EXPECT_TRUE(check_jacobi(g, CheckMode::Sampled).ok);
}

TEST(Jacobi, Sl2Passes) {
  EXPECT_TRUE(check_jacobi(sl2(), CheckMode::Exhaustive).ok);
  EXPECT_TRUE(check_jacobi(sl2(), CheckMode::Sampled, {50, 1}).ok);
}

TEST(Jacobi, RescaledEFStillPasses) {
  // Any scalar c in [e,f] = c·h leaves the (e,h,f) Jacobiator at −2c·h + 2c·h = 0.
  EXPECT_TRUE(check_jacobi(sl2(Q(2)), CheckMode::Exhaustive).ok);
  EXPECT_TRUE(check_jacobi(sl2(Q(2)), CheckMode::Sampled, {20, 0}).ok);
}

// [h,f] = −3f instead of −2f: the (e,h,f) Jacobiator is c·h.
GradedLieAlgebra broken_sl2() {
  auto g = sl2();
  g.set_bracket(1, 2, vec(3, {{2, Q(-3)}}));
  return g;
}

TEST(Jacobi, BrokenSl2Fails) {
  auto r = check_jacobi(broken_sl2(), CheckMode::Exhaustive);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.witness, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_FALSE(check_jacobi(broken_sl2(), CheckMode::Sampled, {20, 0}).ok);
}

TEST(Jacobi, ViolationThrowsWithWitness) {
  try {
    require_jacobi(broken_sl2(), CheckMode::Sampled, {10, 0});
    FAIL();
  } catch (const JacobiViolation& v) {
    EXPECT_EQ(v.witness().size(), 1u);
  }
}

TEST(Grading, DegreeAdditivityEnforced) {
  GradedLieAlgebra g({{"a", -1}, {"b", -1}, {"c", 0}});
  EXPECT_THROW(g.set_bracket(0, 1, vec(3, {{2, Q(1)}})), DegreeViolation);
}

TEST(Grading, GradingElementSl2) {
  EXPECT_TRUE(check_grading_element(sl2()).ok);
  EXPECT_TRUE(check_degree_additivity(sl2()).ok);
}

TEST(Transitive, HeisenbergWithCenter) {
  auto r = check_transitive_fundamental(heisenberg_plus_center());
  EXPECT_TRUE(r.fundamental);
  EXPECT_FALSE(r.transitive);
}

TEST(Transitive, AbelianNegativePart) {
  EXPECT_FALSE(check_transitive_fundamental(abelian({-2, -1, -1})).fundamental);
  EXPECT_TRUE(check_transitive_fundamental(abelian({-1, -1})).fundamental);
}

TEST(Transitive, Sl2) {
  auto r = check_transitive_fundamental(sl2());
  EXPECT_TRUE(r.transitive);
  EXPECT_TRUE(r.fundamental);
}

TEST(IdealClosure, SimpleGivesEverything) {
  auto g = sl2();
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(ideal_closure(g, g.unit(i)).dim(), 3u);
    EXPECT_TRUE(ideal_closure_is_everything(g, g.unit(i)));
  }
}

TEST(IdealClosure, DirectSumStaysInSummand) {
  // sl2 ⊕ sl2 with the second copy on indices 3..5.
  GradedLieAlgebra g({{"e", 1}, {"h", 0}, {"f", -1}, {"e'", 1}, {"h'", 0}, {"f'", -1}});
  for (uint32_t o : {0u, 3u}) {
    g.set_bracket(o + 1, o, vec(6, {{o, Q(2)}}));
    g.set_bracket(o + 1, o + 2, vec(6, {{o + 2, Q(-2)}}));
    g.set_bracket(o, o + 2, vec(6, {{o + 1, Q(1)}}));
  }
  auto sub = ideal_closure(g, g.unit(1));
  EXPECT_EQ(sub.dim(), 3u);
  EXPECT_TRUE(sub.contains(g.unit(0).to_dense()));
  EXPECT_FALSE(sub.contains(g.unit(3).to_dense()));
  EXPECT_FALSE(is_simple(g, CheckMode::Exhaustive));
}

TEST(IdealClosure, AbelianSpan) {
  auto g = abelian({0, 0, 0});
  SV seed = vec(3, {{0, Q(1)}, {2, Q(5)}});
  auto sub = ideal_closure(g, seed);
  EXPECT_EQ(sub.dim(), 1u);
  EXPECT_TRUE(sub.contains(seed.to_dense()));
}

TEST(Simple, Sl2IsSimple) {
  EXPECT_TRUE(is_simple(sl2(), CheckMode::Exhaustive));
  EXPECT_TRUE(is_simple(sl2(), CheckMode::Sampled));
}

TEST(Simple, Gl2IsNot) {
  auto base = sl2();
  GradedLieAlgebra g({{"e", 1}, {"h", 0}, {"f", -1}, {"c", 0}});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      SV v(4);
      for (const auto& [k, c] : base.bracket_basis(i, j)) v.push(k, c);
      g.set_bracket(i, j, v);
    }
  EXPECT_FALSE(is_simple(g, CheckMode::Exhaustive));
  auto center = center_of_degree_zero(g);
  EXPECT_EQ(center.size(), 2u);  // h and c both commute with degree 0
}

TEST(Involution, ChevalleyOnSl2) {
  auto g = sl2();
  Involution sigma({vec(3, {{2, Q(-1)}}), vec(3, {{1, Q(-1)}}), vec(3, {{0, Q(-1)}})});
  EXPECT_TRUE(check_involution(g, sigma).ok);
  auto der = derivations_commuting_with(g, sigma);
  EXPECT_EQ(der.dim(), 0u);
}

TEST(Involution, IdentityOnDegreeZeroAbelian) {
  auto g = abelian({0, 0});
  Involution id({g.unit(0), g.unit(1)});
  EXPECT_TRUE(check_involution(g, id).ok);
  auto der = derivations_commuting_with(g, id);
  EXPECT_EQ(der.dim(), 2u);
  EXPECT_EQ(der.central_dim, 2u);
  EXPECT_EQ(der.dim_without_center(), 0u);
}

TEST(Involution, GradePreservingFails) {
  auto g = sl2();
  Involution id({g.unit(0), g.unit(1), g.unit(2)});
  auto r = check_involution(g, id);
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.message.find("grade"), std::string::npos);
}

TEST(Involution, NonMorphismFails) {
  auto g = sl2();
  Involution sigma({vec(3, {{2, Q(1)}}), vec(3, {{1, Q(-1)}}), vec(3, {{0, Q(1)}})});
  // σ(e) = f, σ(f) = e, σ(h) = −h is an automorphism; flip one sign to break it.
  EXPECT_TRUE(check_involution(g, sigma).ok);
  Involution bad({vec(3, {{2, Q(1)}}), vec(3, {{1, Q(1)}}), vec(3, {{0, Q(1)}})});
  EXPECT_FALSE(check_involution(g, bad).ok);
}
