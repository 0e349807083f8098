#include "catalog_detail.hpp"
#include "kantor/jordan.hpp"
#include "kantor/parallel.hpp"

namespace kantor::detail {

namespace {

FreudenthalElement random_point(Rng& rng) {
  Vec<Q> v(FreudenthalElement::kDim);
  for (auto& x : v) x = Q(Rational(rng.uniform(-2, 2)), Rational(rng.uniform(-1, 1)));
  return FreudenthalElement::from_coords(v);
}

FreudenthalElement diagonal_point(long long alpha, long long beta) {
  FreudenthalElement x;
  x.alpha = Q(alpha);
  x.beta = Q(beta);
  return x;
}

Vec<Q> minus(const Vec<Q>& a, const Vec<Q>& b) {
  Vec<Q> out = a;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= b[k];
  return out;
}

}  // namespace

std::vector<DerivedConstant> e8_fts_constants() {
  ConstantSystem sys({"c1", "c2", "c3"});
  const Vec<Q> none(FreudenthalElement::kDim);
  auto add_triple = [&](const FreudenthalElement& x, const FreudenthalElement& y, const FreudenthalElement& z) {
    // 0 = [x, 𝟙] + c₃[E, x]: x + c₃x = 0.
    sys.add({none, none, x.coords()}, x.coords());
    // 0 = [x̂, [y, 𝟙]] = −(2c₂ + 1){x,y}𝟙.
    const Q xy = symplectic(x, y);
    sys.add({Vec<Q>{Q()}, Vec<Q>{xy * Q(-2)}, Vec<Q>{Q()}}, Vec<Q>{-xy});
    // {y,z}x = c₁(x×y)z − c₂{x,y}z − c₁(x×z)y + c₂{x,z}y.
    const Vec<Q> c1 = minus(e7_act(freudenthal_product(x, y), z).coords(), e7_act(freudenthal_product(x, z), y).coords());
    const Vec<Q> c2 = minus(y.scaled(symplectic(x, z)).coords(), z.scaled(xy).coords());
    sys.add({c1, c2, none}, x.scaled(-symplectic(y, z)).coords());
  };
  add_triple(diagonal_point(1, 1), diagonal_point(1, 1), diagonal_point(1, -1));
  Rng rng(0);
  for (int trial = 0; trial < 2; ++trial) {
    const auto x = random_point(rng), y = random_point(rng), z = random_point(rng);
    add_triple(x, y, z);
  }
  return sys.solve();
}

TripleSystem e8_contact_fts() {
  static const FreudenthalConstants c = [] {
    auto v = e8_fts_constants();
    expect_constants("E8-FTS", v, {Q(4), Q(Rational(-1, 2)), Q(-1)});
    return FreudenthalConstants{v[0].value, v[1].value, v[2].value};
  }();
  const std::size_t n = FreudenthalElement::kDim;
  return system_from_pairs("E8-contact-FTS", n, [&](std::size_t i, std::size_t j) {
    const auto x = FreudenthalElement::unit(i), iy = paracomplex(FreudenthalElement::unit(j));
    const E7Element g = freudenthal_product(x, iy).scaled(-c.c1);
    const Q shift = -c.c2 * symplectic(x, iy);
    std::vector<SV> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      const auto z = FreudenthalElement::unit(k);
      out.push_back(SV::from_dense((e7_act(g, z) + z.scaled(shift)).coords()));
    }
    return out;
  });
}

}  // namespace kantor::detail
