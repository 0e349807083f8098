// Spinor systems: extended Poincaré type for F4, E7, E8 and contact type for E7.

#include <array>
#include <mutex>

#include "catalog_detail.hpp"
#include "kantor/clifford.hpp"
#include "kantor/parallel.hpp"
#include "kantor/tkk.hpp"

namespace kantor::detail {

void ConstantSystem::add(const std::vector<Vec<Q>>& coeffs, const Vec<Q>& constant) {
  if (coeffs.size() != names_.size()) throw std::invalid_argument("ConstantSystem::add: wrong number of unknowns");
  for (std::size_t comp = 0; comp < constant.size(); ++comp) {
    Vec<Q> row(names_.size());
    bool any = !constant[comp].is_zero();
    for (std::size_t k = 0; k < names_.size(); ++k) {
      row[k] = coeffs[k][comp];
      any = any || !row[k].is_zero();
    }
    if (!any) continue;
    rows_.push_back(std::move(row));
    rhs_.push_back(-constant[comp]);
  }
}

std::vector<DerivedConstant> ConstantSystem::solve() const {
  Matrix<Q> a = Matrix<Q>::from_rows(rows_);
  if (rows_.empty() || rank(a) != names_.size())
    throw InternalInconsistency("constant equations do not determine every unknown");
  auto x = solve_linear(a, rhs_);
  if (!x) throw InternalInconsistency("constant equations are inconsistent");
  std::vector<DerivedConstant> out;
  for (std::size_t k = 0; k < names_.size(); ++k) out.push_back({names_[k], (*x)[k]});
  return out;
}

void expect_constants(const std::string& family, const std::vector<DerivedConstant>& got,
                      const std::vector<Q>& expected) {
  if (got.size() != expected.size()) throw InternalInconsistency(family + ": wrong number of constants");
  for (std::size_t k = 0; k < got.size(); ++k)
    if (got[k].value != expected[k])
      throw InternalInconsistency(family + ": " + got[k].name + " = " + got[k].value.to_string() + ", expected " +
                                  expected[k].to_string());
}

TripleSystem system_from_pairs(std::string id, std::size_t dim, const PairProducts& products) {
  Tensor t(dim * dim * dim);
  parallel_for(dim * dim, [&](std::size_t ij) {
    auto column = products(ij / dim, ij % dim);
    if (column.size() != dim) throw DimensionMismatch("system_from_pairs");
    for (std::size_t k = 0; k < dim; ++k) t[ij * dim + k] = std::move(column[k]);
  });
  return TripleSystem::from_tensor(std::move(id), dim, std::move(t));
}

namespace {

Vec<Q> q_of(const ZVec& v, long long den = 1) { return to_q(v, den); }

Vec<Q> q_scaled(const ZVec& v, const Q& a) {
  Vec<Q> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out[k] = a * v[k].over();
  return out;
}

void add_to(Vec<Q>& a, const Vec<Q>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!b[k].is_zero()) a[k] += b[k];
}

ZVec unit_spinor(std::size_t n, std::size_t j) {
  ZVec v(n);
  v[j] = Zi(1);
  return v;
}

ZVec random_semispinor(const CliffordRep& rep, int sign, Rng& rng) {
  ZVec s(rep.spinor_dim());
  for (std::size_t j = 0; j < rep.semispinor_dim(); ++j)
    axpy(s, Zi(rng.uniform(-2, 2), rng.uniform(-2, 2)), rep.semispinor_basis(sign, j));
  return s;
}

/// Γ⁽²⁾(s,t)u as a vector, for u = e_a: Σ_b c_ab e_b.
ZVec two_form_on_basis(const TwoForm& w, std::size_t a) {
  ZVec out(w.dim_u);
  for (std::size_t b = 0; b < w.dim_u; ++b) out[b] = w.at(a, b);
  return out;
}

/// e_a ∧ u in pair order.
ZVec wedge_basis(std::size_t n, std::size_t a, const ZVec& u) {
  ZVec out(n * (n - 1) / 2);
  for (std::size_t b = 0; b < n; ++b) {
    if (b == a || u[b].is_zero()) continue;
    if (a < b) out[TwoForm::index(n, a, b)] += u[b];
    else out[TwoForm::index(n, b, a)] -= u[b];
  }
  return out;
}

ZVec plus(const ZVec& a, const ZVec& b) {
  ZVec out = a;
  axpy(out, Zi(1), b);
  return out;
}

ZVec scalar_vec(Zi x) { return ZVec{x}; }

}  // namespace

// ---------------------------------------------------------------------------
// Constants

std::vector<DerivedConstant> f4_poincare_constants() {
  // 0 = [û,[s,v]] = −v∘u∘s − λ(u∧v)·s + μη(u,v)s.
  CliffordRep rep(7);
  const std::size_t n = rep.spinor_dim();
  ConstantSystem sys({"lambda", "mu"});
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t b = 0; b < 7; ++b)
      for (std::size_t j = 0; j < n; ++j) {
        const ZVec s = unit_spinor(n, j);
        const Vec<Q> spin = a == b ? Vec<Q>(n) : q_of(rep.pair(a, b).apply(s), 2);
        Vec<Q> lambda(n), mu(n);
        for (std::size_t k = 0; k < n; ++k) lambda[k] = -spin[k];
        if (a == b) mu = q_of(s);
        sys.add({lambda, mu}, q_of(scaled(rep.pair(b, a).apply(s), Zi(-1))));
      }
  return sys.solve();
}

std::vector<DerivedConstant> e7_poincare_constants() {
  CliffordRep rep(10);
  const auto beta = catalog_form(rep);
  const std::size_t n = rep.spinor_dim(), u_dim = 10, pairs = 45;
  ConstantSystem sys({"c1", "c2", "c3", "c4", "c5"});
  Rng rng(0);
  const Vec<Q> zero_u(u_dim), zero_s(n), zero_p(pairs), zero_1(1);
  for (int trial = 0; trial < 3; ++trial) {
    const ZVec r = random_semispinor(rep, -1, rng);
    const ZVec t = random_semispinor(rep, 1, rng);
    const ZVec s = random_semispinor(rep, 1, rng);
    const TwoForm rt = gamma2(rep, beta, r, t);
    const Zi brt = beta(r, t);
    for (std::size_t a = 0; a < u_dim; ++a) {
      // 0 = [r⊗c,[t⊗d,u]]: c₁Γ⁽²⁾(r,t)u − 2c₂β(r,t)u − Γ(t,u∘r) = 0.
      const ZVec ua = unit_spinor(u_dim, a);
      sys.add({q_of(two_form_on_basis(rt, a)), q_of(scaled(ua, brt * Zi(-2))), zero_u, zero_u, zero_u},
              q_of(scaled(gamma_current(rep, beta, t, rep.gamma(a).apply(r)), Zi(-1))));
      // 0 = [û,[t⊗c,s⊗d]] in its so(U), E and sl(2) components.
      const ZVec ut = rep.gamma(a).apply(t), us = rep.gamma(a).apply(s);
      const TwoForm g1 = gamma2(rep, beta, ut, s), g2 = gamma2(rep, beta, us, t);
      sys.add({q_of(plus(g1.coeff, g2.coeff)), zero_p, zero_p, q_of(wedge_basis(u_dim, a, gamma_current(rep, beta, t, s))),
               zero_p},
              zero_p);
      const Zi b1 = beta(ut, s), b2 = beta(us, t);
      sys.add({zero_1, q_of(scalar_vec(b1 + b2)), zero_1, zero_1, q_of(scalar_vec(b1))}, zero_1);
      sys.add({zero_1, zero_1, q_of(scalar_vec(b1 - b2)), zero_1, zero_1}, zero_1);
    }
    // Γ(t,t)∘r + c₁Γ⁽²⁾(r,t)·t − (c₂ + 3c₃)β(r,t)t = 0.
    const ZVec tt = rep.act(gamma_current(rep, beta, t, t), r);
    const Vec<Q> spin = q_of(spin_action_doubled(rep, rt, t), 2);
    const Vec<Q> bt = q_of(scaled(t, -brt));
    sys.add({spin, bt, q_scaled(scaled(t, -brt), Q(3)), zero_s, zero_s}, q_of(tt));
  }
  return sys.solve();
}

std::vector<DerivedConstant> e7_contact_constants() {
  CliffordRep rep(12);
  const auto beta = catalog_form(rep);
  ConstantSystem sys({"lambda", "mu"});
  Rng rng(0);
  for (int trial = 0; trial < 3; ++trial) {
    const ZVec s = random_semispinor(rep, 1, rng), t = random_semispinor(rep, 1, rng),
               r = random_semispinor(rep, 1, rng);
    // 0 = [ŝ,[t,𝟙]] = −2μβ(s,t)𝟙 + β(t,s)𝟙.
    sys.add({Vec<Q>(1), q_of(scalar_vec(beta(s, t) * Zi(-2)))}, q_of(scalar_vec(beta(t, s))));
    // β(t,r)s = λΓ⁽²⁾(s,t)·r − μβ(s,t)r − λΓ⁽²⁾(s,r)·t + μβ(s,r)t.
    Vec<Q> lambda = q_of(spin_action_doubled(rep, gamma2(rep, beta, s, t), r), 2);
    Vec<Q> lambda_b = q_of(spin_action_doubled(rep, gamma2(rep, beta, s, r), t), -2);
    add_to(lambda, lambda_b);
    Vec<Q> mu = q_of(scaled(r, -beta(s, t)));
    add_to(mu, q_of(scaled(t, beta(s, r))));
    sys.add({lambda, mu}, q_of(scaled(s, -beta(t, r))));
  }
  return sys.solve();
}

// ---------------------------------------------------------------------------
// Products

namespace {

/// (r s t) = a·Γ⁽²⁾(r, I∘s)·t + b·β(r, I∘s)t on a spinor module, with I
/// given by its scaled columns. `sign` selects S^± (0 for all of S).
TripleSystem gamma2_system(std::string id, const CliffordRep& rep, const AdmissibleForm& beta,
                           const VolumeElement& vol, int sign, Q a, Q b) {
  const std::size_t n = rep.spinor_dim();
  const std::size_t dim = sign == 0 ? n : rep.semispinor_dim();
  std::vector<ZVec> basis(dim);
  for (std::size_t j = 0; j < dim; ++j) basis[j] = sign == 0 ? unit_spinor(n, j) : rep.semispinor_basis(sign, j);
  const Q half_a = a * Q(Rational(1, 2 * vol.denominator));
  const Q b_scaled = b * Q(Rational(1, vol.denominator));
  return system_from_pairs(std::move(id), dim, [&, half_a, b_scaled](std::size_t i, std::size_t j) {
    const ZVec is = vol.apply_scaled(basis[j]);
    const TwoForm w = gamma2(rep, beta, basis[i], is);
    const Zi bw = beta(basis[i], is);
    std::vector<SV> out;
    out.reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const ZVec sd = spin_action_doubled(rep, w, basis[k]);
      const ZVec coords_sd = sign == 0 ? sd : rep.semispinor_coordinates(sign, sd);
      SV v(dim);
      for (std::size_t q = 0; q < dim; ++q) {
        Q x = coords_sd[q].is_zero() ? Q() : half_a * coords_sd[q].over();
        if (q == k && !bw.is_zero()) x += b_scaled * bw.over();
        v.push(static_cast<uint32_t>(q), std::move(x));
      }
      out.push_back(std::move(v));
    }
    return out;
  });
}

std::string dim_tag(std::size_t m) { return std::to_string(m); }

}  // namespace

TripleSystem f4_poincare(std::size_t dim_w) {
  if (dim_w != 7 && dim_w != 3) throw ParameterOutOfRange("F4 extended Poincaré: dim W is 7 or 3");
  static const auto constants = [] {
    auto c = f4_poincare_constants();
    expect_constants("F4-eP", c, {Q(2), Q(-1)});
    return c;
  }();
  (void)constants;
  CliffordRep rep(7);
  return gamma2_system("F4-eP-" + dim_tag(dim_w), rep, catalog_form(rep), volume_element(rep, dim_w), 0, Q(-1),
                       Q(Rational(1, 2)));
}

TripleSystem e8_poincare(std::size_t dim_w) {
  if (dim_w != 7 && dim_w != 3) throw ParameterOutOfRange("E8 extended Poincaré: dim W is 3 or 7");
  CliffordRep rep(14);
  return gamma2_system("E8-eP-" + dim_tag(dim_w), rep, catalog_form(rep), volume_element(rep, dim_w), 1, Q(-1),
                       Q(Rational(1, 2)));
}

TripleSystem e7_contact_volume(std::size_t dim_w) {
  if (dim_w != 6 && dim_w != 2) throw ParameterOutOfRange("E7 contact: dim W is 6 or 2");
  static const auto c = [] {
    auto v = e7_contact_constants();
    expect_constants("E7-contact", v, {Q(Rational(1, 2)), Q(Rational(-1, 2))});
    return v;
  }();
  CliffordRep rep(12);
  // I = i·vol_W.
  VolumeElement vol = volume_element(rep, dim_w);
  for (auto& col : vol.columns) col = scaled(col, Zi(0, 1));
  vol.monomial = vol.monomial->rotated(1);
  return gamma2_system("E7-contact-" + dim_tag(dim_w), rep, catalog_form(rep), vol, 1, -c[0].value, -c[1].value);
}

TripleSystem e7_contact_exponential() {
  static const auto c = e7_contact_constants();
  CliffordRep rep(12);
  const Q i = Q::i();
  return gamma2_system("E7-contact-gl6", rep, catalog_form(rep), isotropic_exponential(rep), 1, -i * c[0].value,
                       -i * c[1].value);
}

TripleSystem e7_poincare(std::size_t dim_w) {
  if (dim_w != 1 && dim_w != 3 && dim_w != 5) throw ParameterOutOfRange("E7 extended Poincaré: dim W is 1, 3 or 5");
  static const auto c = [] {
    auto v = e7_poincare_constants();
    expect_constants("E7-eP", v, {Q(-1), Q(Rational(1, 2)), Q(-1), Q(2), Q(-1)});
    return v;
  }();
  const Q c1 = c[0].value, c2 = c[1].value, c3 = c[2].value;
  CliffordRep rep(10);
  const auto beta = catalog_form(rep);
  const VolumeElement vol = volume_element(rep, dim_w);
  const std::size_t half = rep.semispinor_dim(), dim = 2 * half;
  std::vector<ZVec> spinors(half);
  for (std::size_t j = 0; j < half; ++j) spinors[j] = rep.semispinor_basis(1, j);
  // J = standard complex structure on ℂ², or the identity when dim W = 3.
  const bool j_identity = dim_w == 3;
  auto j_of = [j_identity](std::size_t q) -> std::array<Q, 2> {
    if (j_identity) return q == 0 ? std::array<Q, 2>{Q(1), Q(0)} : std::array<Q, 2>{Q(0), Q(1)};
    return q == 0 ? std::array<Q, 2>{Q(0), Q(1)} : std::array<Q, 2>{Q(-1), Q(0)};
  };
  auto omega = [](const std::array<Q, 2>& x, const std::array<Q, 2>& y) { return x[0] * y[1] - x[1] * y[0]; };
  auto e = [](std::size_t q) { return q == 0 ? std::array<Q, 2>{Q(1), Q(0)} : std::array<Q, 2>{Q(0), Q(1)}; };

  return system_from_pairs("E7-eP-" + dim_tag(dim_w), dim, [&](std::size_t x, std::size_t y) {
    const std::size_t rj = x / 2, sj = y / 2;
    const auto b = e(x % 2), jc = j_of(y % 2);
    const ZVec is = vol.apply_scaled(spinors[sj]);
    const TwoForm w = gamma2(rep, beta, spinors[rj], is);
    const Q bw = beta(spinors[rj], is).over();
    const Q wbjc = omega(b, jc);
    std::vector<SV> out;
    out.reserve(dim);
    for (std::size_t z = 0; z < dim; ++z) {
      const std::size_t tj = z / 2;
      const auto d = e(z % 2);
      // c₁ω(b,Jc)Γ⁽²⁾·t⊗d + c₂βω(b,Jc)t⊗d + c₃βt⊗(ω(Jc,d)b + ω(b,d)Jc).
      const ZVec coords = rep.semispinor_coordinates(1, spin_action_doubled(rep, w, spinors[tj]));
      std::array<Q, 2> sl2{};
      for (int p = 0; p < 2; ++p) sl2[p] = omega(jc, d) * b[p] + omega(b, d) * jc[p];
      Vec<Q> v(dim);
      for (std::size_t q = 0; q < half; ++q) {
        if (coords[q].is_zero() || wbjc.is_zero()) continue;
        const Q g = c1 * wbjc * Q(Rational(1, 2)) * coords[q].over();
        for (int p = 0; p < 2; ++p)
          if (!d[p].is_zero()) v[2 * q + p] += g * d[p];
      }
      if (!bw.is_zero())
        for (int p = 0; p < 2; ++p) {
          const Q coef = c2 * bw * wbjc * d[p] + c3 * bw * sl2[p];
          if (!coef.is_zero()) v[2 * tj + p] += coef;
        }
      out.push_back(SV::from_dense(v));
    }
    return out;
  });
}

}  // namespace kantor::detail
