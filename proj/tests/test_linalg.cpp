#include <gtest/gtest.h>

#include "kantor/linalg.hpp"
#include "kantor/parallel.hpp"

using namespace kantor;

namespace {

Matrix<Q> mat(std::initializer_list<std::initializer_list<Q>> rows) {
  std::vector<Vec<Q>> r;
  for (auto row : rows) r.emplace_back(row);
  return Matrix<Q>::from_rows(r);
}

Matrix<Q> random_matrix(Rng& rng, std::size_t r, std::size_t c, long long bound, int zero_bias) {
  Matrix<Q> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng.uniform(0, zero_bias) == 0) m(i, j) = Q(Rational(rng.uniform(-bound, bound)), Rational(rng.uniform(-bound, bound)));
  return m;
}

const Q I = Q::i();

}  // namespace

TEST(Kernel, Identity) { EXPECT_TRUE(kernel(Matrix<Q>::identity(2)).empty()); }

TEST(Kernel, Zero) { EXPECT_EQ(kernel(Matrix<Q>(2, 2)).size(), 2u); }

TEST(Kernel, HandReduced) {
  auto k = kernel(mat({{1, 1, 0}, {0, 1, 1}, {1, 2, 1}}));
  ASSERT_EQ(k.size(), 1u);
  // Normalize to the first coordinate.
  Q s = k[0][0].inverse();
  EXPECT_EQ(k[0][0] * s, Q(1));
  EXPECT_EQ(k[0][1] * s, Q(-1));
  EXPECT_EQ(k[0][2] * s, Q(1));
}

TEST(Kronecker, IdentityBlocks) {
  auto e = Matrix<Q>::identity(2);
  EXPECT_EQ(kronecker(e, e), Matrix<Q>::identity(4));
}

TEST(Kronecker, G1TensorT) {
  auto g1 = mat({{I, 0}, {0, -I}});
  auto t = mat({{0, -I}, {I, 0}});
  auto k = kronecker(g1, t);
  // (g1 ⊗ T)_{(a,b),(c,d)} = g1_{ac} T_{bd}.
  auto expected = mat({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
  EXPECT_EQ(k, expected);
}

TEST(Kronecker, TTensorTSquared) {
  auto t = mat({{0, -I}, {I, 0}});
  auto tt = kronecker(t, t);
  EXPECT_EQ(tt * tt, Matrix<Q>::identity(4));
}

TEST(KroneckerProperty, MixedProduct) {
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    auto a = random_matrix(rng, 2, 3, 3, 1), b = random_matrix(rng, 2, 2, 3, 1);
    auto c = random_matrix(rng, 3, 2, 3, 1), d = random_matrix(rng, 2, 3, 3, 1);
    EXPECT_EQ(kronecker(a, b) * kronecker(c, d), kronecker(a * c, b * d));
    EXPECT_EQ(kronecker(kronecker(a, b), c), kronecker(a, kronecker(b, c)));
  }
}

TEST(KroneckerProperty, SparseAgreesWithDense) {
  Rng rng(4);
  auto a = random_matrix(rng, 3, 2, 2, 2), b = random_matrix(rng, 2, 4, 2, 2);
  auto sk = kronecker(SparseMatrix<Q>::from_dense(a), SparseMatrix<Q>::from_dense(b));
  EXPECT_EQ(sk.to_dense(), kronecker(a, b));
}

TEST(Solve, Identity) {
  Vec<Q> v{Q(3), Q(Rational(1, 2), Rational(2))};
  EXPECT_EQ(*solve_linear(Matrix<Q>::identity(2), v), v);
}

TEST(Solve, Inconsistent) {
  EXPECT_FALSE(solve_linear(Matrix<Q>(2, 2), Vec<Q>{Q(1), Q(0)}).has_value());
  EXPECT_THROW(solve_linear_or_throw(Matrix<Q>(2, 2), Vec<Q>{Q(1), Q(0)}), NoSolution);
}

TEST(Solve, Diagonal) {
  auto x = solve_linear(mat({{2, 0}, {0, 3}}), Vec<Q>{Q(1), Q(1)});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], Q(Rational(1, 2)));
  EXPECT_EQ((*x)[1], Q(Rational(1, 3)));
}

TEST(Matrix, DimensionMismatchIsError) {
  EXPECT_THROW(Matrix<Q>(2, 3) * Matrix<Q>(2, 3), DimensionMismatch);
  EXPECT_THROW(Matrix<Q>(2, 3) + Matrix<Q>(3, 2), DimensionMismatch);
}

TEST(LinalgProperty, RankNullity) {
  Rng rng(77);
  for (int k = 0; k < 60; ++k) {
    std::size_t r = rng.uniform(1, 6), c = rng.uniform(1, 6);
    auto m = random_matrix(rng, r, c, 2, 2);
    auto ker = kernel(m);
    EXPECT_EQ(rank(m) + ker.size(), c);
    for (const auto& v : ker) EXPECT_TRUE(is_zero_vec(m * v));
  }
}

TEST(LinalgProperty, SolveReproducesRhs) {
  Rng rng(78);
  for (int k = 0; k < 40; ++k) {
    auto m = random_matrix(rng, 4, 3, 3, 1);
    Vec<Q> x0(3);
    for (auto& x : x0) x = Q(Rational(rng.uniform(-5, 5)), Rational(rng.uniform(-5, 5)));
    auto x = solve_linear(m, m * x0);
    ASSERT_TRUE(x);
    EXPECT_EQ(m * *x, m * x0);
  }
}

TEST(SparseEchelon, CoordinatesOfDependentVectors) {
  SparseEchelon<Q> e(3);
  auto v = [](Q a, Q b, Q c) { return SparseVector<Q>::from_dense({a, b, c}); };
  EXPECT_TRUE(e.insert(v(1, 1, 0)).accepted);
  EXPECT_TRUE(e.insert(v(0, 1, 1)).accepted);
  auto r = e.insert(v(2, 5, 3));
  ASSERT_FALSE(r.accepted);
  EXPECT_EQ(r.coordinates.get(0), Q(2));
  EXPECT_EQ(r.coordinates.get(1), Q(3));
}

TEST(Echelon, AnnihilatorMatchesKernel) {
  Rng rng(12);
  auto m = random_matrix(rng, 3, 6, 3, 1);
  Echelon<Q> e(6);
  for (std::size_t r = 0; r < 3; ++r) e.insert(m.row(r));
  auto ann = e.complement_kernel();
  EXPECT_EQ(ann.size(), kernel(m).size());
  for (const auto& v : ann) EXPECT_TRUE(is_zero_vec(m * v));
}
