#include <gtest/gtest.h>

#include "kantor/catalog.hpp"
#include "kantor/jordan.hpp"
#include "kantor/parallel.hpp"

using namespace kantor;

namespace {

Q small(Rng& rng) { return Q(Rational(rng.uniform(-3, 3)), Rational(rng.uniform(-1, 1))); }

Octonion random_octonion(Rng& rng) {
  Octonion o;
  for (std::size_t k = 0; k < 8; ++k) o[k] = small(rng);
  return o;
}

AlbertElement random_albert(Rng& rng) {
  Vec<Q> v(AlbertElement::kDim);
  for (auto& x : v) x = small(rng);
  return AlbertElement(v);
}

FreudenthalElement random_point(Rng& rng) {
  Vec<Q> v(FreudenthalElement::kDim);
  for (auto& x : v) x = small(rng);
  return FreudenthalElement::from_coords(v);
}

/// 3×3 octonion matrix of an Albert element.
using OctMatrix = std::array<std::array<Octonion, 3>, 3>;

OctMatrix as_matrix(const AlbertElement& a) {
  OctMatrix m;
  for (std::size_t i = 0; i < 3; ++i) m[i][i] = Octonion::scalar(a.diag(i));
  m[0][1] = a.off(2);
  m[1][0] = a.off(2).conj();
  m[1][2] = a.off(0);
  m[2][1] = a.off(0).conj();
  m[2][0] = a.off(1);
  m[0][2] = a.off(1).conj();
  return m;
}

Vec<Q> flatten(const Matrix<Q>& m) {
  Vec<Q> v;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

bool same(const FreudenthalElement& a, const FreudenthalElement& b) { return a.coords() == b.coords(); }

}  // namespace

TEST(Octonion, MultiplicationTable) {
  for (std::size_t i = 1; i <= 7; ++i) {
    EXPECT_EQ(Octonion::unit(i) * Octonion::unit(i), Octonion::scalar(Q(-1)));
    for (std::size_t j = 1; j <= 7; ++j) {
      if (i == j) continue;
      auto [s, k] = octonion_table(i, j);
      auto [s2, k2] = octonion_table(j, i);
      EXPECT_EQ(k, k2);
      EXPECT_EQ(s, -s2);
      EXPECT_NE(k, i);
      EXPECT_NE(k, j);
    }
  }
  // e₁e₂ = e₄ and its cyclic shifts.
  EXPECT_EQ(Octonion::unit(1) * Octonion::unit(2), Octonion::unit(4));
  EXPECT_EQ(Octonion::unit(2) * Octonion::unit(4), Octonion::unit(1));
  EXPECT_EQ(Octonion::unit(7) * Octonion::unit(1), Octonion::unit(3));
}

TEST(Octonion, AlternativeAndComposition) {
  Rng rng(0);
  bool associative = true;
  for (int trial = 0; trial < 50; ++trial) {
    const Octonion x = random_octonion(rng), y = random_octonion(rng), z = random_octonion(rng);
    EXPECT_EQ((x * x) * y, x * (x * y));
    EXPECT_EQ((y * x) * x, y * (x * x));
    EXPECT_EQ((x * y) * x, x * (y * x));
    EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
    EXPECT_EQ((x * y).conj(), y.conj() * x.conj());
    EXPECT_EQ(x * x.conj(), Octonion::scalar(x.norm()));
    if ((x * y) * z != x * (y * z)) associative = false;
  }
  EXPECT_FALSE(associative);
}

TEST(CubicNorm, BasicValues) {
  const auto& cd = CubicData::albert();
  const auto one = AlbertElement::identity();
  EXPECT_EQ(cd.norm(one), Q(1));
  EXPECT_EQ(cd.trace(one), Q(3));
  EXPECT_EQ(cd.s_form(one, one), Q(6));
  EXPECT_EQ(cd.sharp(one), one);
  EXPECT_EQ(rank(cd.gram()), AlbertElement::kDim);
  // Trace of a diagonal element, and the trace form on the diagonal.
  const auto e11 = AlbertElement::unit(0);
  EXPECT_EQ(cd.trace(e11), Q(1));
  EXPECT_EQ(cd.pairing(e11, e11), Q(1));
}

TEST(CubicNorm, SharpIdentities) {
  const auto& cd = CubicData::albert();
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_albert(rng), b = random_albert(rng);
    EXPECT_EQ(cd.sharp(cd.sharp(a)), a.scaled(cd.norm(a)));
    EXPECT_EQ(cd.cross(a, a), cd.sharp(a).scaled(Q(2)));
    EXPECT_EQ(cd.cross(a, b), cd.cross(b, a));
    EXPECT_EQ(cd.pairing(cd.sharp(a), b), cd.norm(a, a, b) * Q(3));
    EXPECT_EQ(cd.norm(a, a, a), cd.norm(a));
    EXPECT_EQ(cd.pairing(a, b), cd.pairing(b, a));
  }
}

TEST(Jordan, ProductAxioms) {
  const auto& cd = CubicData::albert();
  const auto one = AlbertElement::identity();
  const auto e11 = AlbertElement::unit(0);
  EXPECT_EQ(cd.jordan_product(e11, e11), e11);
  EXPECT_EQ(cd.jordan_product(e11, AlbertElement::unit(1)), AlbertElement());
  Rng rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_albert(rng), b = random_albert(rng);
    EXPECT_EQ(cd.jordan_product(a, b), cd.jordan_product(b, a));
    EXPECT_EQ(cd.jordan_product(a, one), a);
    const auto a2 = cd.jordan_product(a, a);
    EXPECT_EQ(cd.jordan_product(cd.jordan_product(a2, b), a), cd.jordan_product(a2, cd.jordan_product(b, a)));
    // Diagonal elements multiply entrywise.
    std::array<Q, 3> d1{small(rng), small(rng), small(rng)}, d2{small(rng), small(rng), small(rng)};
    const auto x = AlbertElement::from_parts(d1, {}), y = AlbertElement::from_parts(d2, {});
    EXPECT_EQ(cd.jordan_product(x, y), AlbertElement::from_parts({d1[0] * d2[0], d1[1] * d2[1], d1[2] * d2[2]}, {}));
  }
}

TEST(Jordan, AgreesWithMatrixProduct) {
  // ½(XY + YX) computed entrywise with octonion matrices.
  const auto& cd = CubicData::albert();
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_albert(rng), b = random_albert(rng);
    const OctMatrix x = as_matrix(a), y = as_matrix(b), p = as_matrix(cd.jordan_product(a, b));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Octonion s;
        for (std::size_t k = 0; k < 3; ++k) s = s + x[i][k] * y[k][j] + y[i][k] * x[k][j];
        EXPECT_EQ(s.scaled(Q(Rational(1, 2))), p[i][j]);
      }
  }
}

TEST(StructureAlgebra, DimensionAndInvariance) {
  const auto& cd = CubicData::albert();
  const auto& basis = cd.structure_algebra();
  ASSERT_EQ(basis.size(), 78u);
  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_albert(rng);
    const auto& phi = basis[rng.uniform(0, 77)];
    EXPECT_TRUE(cd.norm(a, a, AlbertElement(phi * a.coords())).is_zero());
  }
  Echelon<Q> span(AlbertElement::kDim * AlbertElement::kDim);
  for (const auto& phi : basis) EXPECT_TRUE(span.insert(flatten(phi)));
  for (int trial = 0; trial < 20; ++trial) {
    const auto& p = basis[rng.uniform(0, 77)];
    const auto& q = basis[rng.uniform(0, 77)];
    EXPECT_TRUE(span.contains(flatten(p * q - q * p)));
  }
}

TEST(Freudenthal, ReferenceProducts) {
  FreudenthalElement x;
  x.alpha = Q(1);
  x.beta = Q(1);
  const E7Element xx = freudenthal_product(x, x);
  EXPECT_TRUE(xx.phi.is_zero());
  EXPECT_EQ(xx.x, AlbertElement());
  EXPECT_EQ(xx.y, AlbertElement());
  EXPECT_EQ(xx.nu, Q(Rational(-3, 4)));
  FreudenthalElement z;
  z.alpha = Q(1);
  z.beta = Q(-1);
  const E7Element xz = freudenthal_product(x, z);
  EXPECT_TRUE(xz.phi.is_zero());
  EXPECT_EQ(xz.nu, Q());
  EXPECT_EQ(symplectic(x, z), Q(-2));
}

TEST(Freudenthal, SymmetryAndInvariance) {
  const auto& cd = CubicData::albert();
  const auto& e6 = cd.structure_algebra();
  Echelon<Q> span(AlbertElement::kDim * AlbertElement::kDim);
  for (const auto& phi : e6) span.insert(flatten(phi));
  Rng rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const auto x = random_point(rng), y = random_point(rng), u = random_point(rng), w = random_point(rng);
    EXPECT_EQ(symplectic(x, y), -symplectic(y, x));
    const E7Element g = freudenthal_product(x, y), h = freudenthal_product(y, x);
    EXPECT_EQ(g.phi, h.phi);
    EXPECT_EQ(g.x, h.x);
    EXPECT_EQ(g.y, h.y);
    EXPECT_EQ(g.nu, h.nu);
    EXPECT_TRUE(span.contains(flatten(g.phi)));
    EXPECT_EQ(symplectic(e7_act(g, u), w) + symplectic(u, e7_act(g, w)), Q());
  }
}

TEST(Freudenthal, E7SpanAndClosure) {
  const auto& e6 = CubicData::albert().structure_algebra();
  std::vector<Matrix<Q>> generators;
  for (const auto& phi : e6) generators.push_back(e7_matrix(E7Element{phi, {}, {}, Q()}));
  for (std::size_t k = 0; k < AlbertElement::kDim; ++k) {
    generators.push_back(e7_matrix(E7Element{Matrix<Q>(27, 27), AlbertElement::unit(k), {}, Q()}));
    generators.push_back(e7_matrix(E7Element{Matrix<Q>(27, 27), {}, AlbertElement::unit(k), Q()}));
  }
  generators.push_back(e7_matrix(E7Element{Matrix<Q>(27, 27), {}, {}, Q(1)}));
  Echelon<Q> span(FreudenthalElement::kDim * FreudenthalElement::kDim);
  for (const auto& m : generators) span.insert(flatten(m));
  EXPECT_EQ(span.rank(), 133u);
  Rng rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& p = generators[rng.uniform(0, 132)];
    const auto& q = generators[rng.uniform(0, 132)];
    EXPECT_TRUE(span.contains(flatten(p * q - q * p)));
  }
}

TEST(Freudenthal, GradingElementCommutesWithE6) {
  const E7Element g{Matrix<Q>(27, 27), {}, {}, Q(Rational(-3, 2))};
  const Matrix<Q> gm = e7_matrix(g);
  for (const auto& phi : CubicData::albert().structure_algebra()) {
    const Matrix<Q> pm = e7_matrix(E7Element{phi, {}, {}, Q()});
    EXPECT_EQ(gm * pm, pm * gm);
  }
  Rng rng(7);
  const auto x = random_point(rng);
  const auto gx = e7_act(g, x);
  EXPECT_EQ(gx.alpha, x.alpha * Q(Rational(-3, 2)));
  EXPECT_EQ(gx.beta, x.beta * Q(Rational(3, 2)));
}

TEST(FreudenthalTripleSystem, DerivedConstants) {
  const auto c = derived_constants("E8-FTS");
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0].value, Q(4));
  EXPECT_EQ(c[1].value, Q(Rational(-1, 2)));
  EXPECT_EQ(c[2].value, Q(-1));
}

TEST(FreudenthalTripleSystem, ProductFormula) {
  const FreudenthalConstants c{Q(4), Q(Rational(-1, 2)), Q(-1)};
  Rng rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    const auto x = random_point(rng), y = random_point(rng), z = random_point(rng);
    const auto iy = paracomplex(y);
    const auto expected =
        e7_act(freudenthal_product(x, iy), z).scaled(Q(-4)) + z.scaled(symplectic(x, iy) * Q(Rational(1, 2)));
    EXPECT_TRUE(same(e8_fts_product(x, y, z, c), expected));
    EXPECT_TRUE(same(paracomplex(paracomplex(y)), y));
  }
}
