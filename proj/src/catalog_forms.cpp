// Systems built from exterior forms: G2, the contact systems of F4 and E6,
// the extended Poincaré systems of E6, the special systems of E6 and E7 and
// the sl(8) model of the E8 contact system.

#include <array>

#include "catalog_detail.hpp"
#include "kantor/exterior.hpp"
#include "kantor/parallel.hpp"
#include "kantor/tkk.hpp"

namespace kantor::detail {

namespace {

Vec<Q> unit_vec(std::size_t n, std::size_t k) {
  Vec<Q> v(n);
  v[k] = Q(1);
  return v;
}

Matrix<Q> operator_matrix(std::size_t dim, const std::function<Vec<Q>(std::size_t)>& column) {
  Matrix<Q> m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    auto c = column(j);
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = c[i];
  }
  return m;
}

std::vector<SV> columns_of(const Matrix<Q>& op) {
  std::vector<SV> out;
  out.reserve(op.cols());
  for (std::size_t k = 0; k < op.cols(); ++k) {
    SV v(op.rows());
    for (std::size_t q = 0; q < op.rows(); ++q) v.push(static_cast<uint32_t>(q), op(q, k));
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Contact systems: V with a skew form • and an equivariant symmetric ∨ into g₀',
// [α̂, β] = λ α∨β + μ(α•β)E, [α̂, 𝟙] = α.

struct ContactModel {
  std::size_t dim = 0;
  Matrix<Q> bullet;            // α•β on basis vectors
  std::vector<Matrix<Q>> vee;  // γ ↦ (e_i∨e_j)·γ at index i*dim + j
};

std::vector<DerivedConstant> solve_contact_constants(const ContactModel& m) {
  const std::size_t n = m.dim;
  ConstantSystem sys({"lambda", "mu"});
  // [α̂,[β,𝟙]] = 0 gives (−2μ − 1)(α•β) = 0.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!m.bullet(i, j).is_zero()) sys.add({Vec<Q>{Q()}, Vec<Q>{m.bullet(i, j) * Q(-2)}}, Vec<Q>{-m.bullet(i, j)});
  // [α̂,[β,γ]] = (β•γ)α = λ(α∨β)γ − μ(α•β)γ − λ(α∨γ)β + μ(α•γ)β.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec<Q> lambda(n), mu(n), constant(n);
        for (std::size_t q = 0; q < n; ++q) lambda[q] = m.vee[i * n + j](q, k) - m.vee[i * n + k](q, j);
        mu[k] -= m.bullet(i, j);
        mu[j] += m.bullet(i, k);
        constant[i] -= m.bullet(j, k);
        sys.add({lambda, mu}, constant);
      }
  return sys.solve();
}

/// (αβγ) = [[α, σβ], γ] for σ(β) = \widehat{Mβ}: −λ(α∨Mβ)·γ − μ(α•Mβ)γ.
TripleSystem contact_system(std::string id, const ContactModel& m, const Matrix<Q>& involution, Q lambda, Q mu) {
  const std::size_t n = m.dim;
  return system_from_pairs(std::move(id), n, [&, lambda, mu](std::size_t a, std::size_t b) {
    Matrix<Q> op(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const Q& mj = involution(j, b);
      if (mj.is_zero()) continue;
      op = op + m.vee[a * n + j].scaled(-lambda * mj);
      const Q s = -mu * mj * m.bullet(a, j);
      if (!s.is_zero())
        for (std::size_t q = 0; q < n; ++q) op(q, q) += s;
    }
    return columns_of(op);
  });
}

/// Moment map into the span of `algebra` for the pairing (A·x)•y, by the trace form.
class MomentMap {
 public:
  explicit MomentMap(std::vector<Matrix<Q>> algebra) : algebra_(std::move(algebra)) {
    const std::size_t d = algebra_.size();
    gram_ = Matrix<Q>(d, d);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t l = 0; l < d; ++l) {
        Q t;
        const auto prod = algebra_[k] * algebra_[l];
        for (std::size_t q = 0; q < prod.rows(); ++q) t += prod(q, q);
        gram_(k, l) = t;
      }
    if (rank(gram_) != d) throw InternalInconsistency("MomentMap: trace form is degenerate");
  }
  const std::vector<Matrix<Q>>& algebra() const noexcept { return algebra_; }

  /// Element m with tr(A_k m) = values[k] for every basis element A_k.
  Matrix<Q> dual(const Vec<Q>& values) const {
    auto c = solve_linear(gram_, values);
    if (!c) throw InternalInconsistency("MomentMap: no dual element");
    Matrix<Q> out(algebra_[0].rows(), algebra_[0].cols());
    for (std::size_t l = 0; l < c->size(); ++l)
      if (!(*c)[l].is_zero()) out = out + algebra_[l].scaled((*c)[l]);
    return out;
  }

 private:
  std::vector<Matrix<Q>> algebra_;
  Matrix<Q> gram_;
};

/// Subspace of Λ^k spanned by kernel vectors with unit entries at distinct free positions.
class FormChart {
 public:
  FormChart(MaskIndex ambient, std::vector<Vec<Q>> basis) : ambient_(std::move(ambient)), basis_(std::move(basis)) {
    for (const auto& v : basis_) {
      std::size_t pos = v.size();
      for (std::size_t q = 0; q < v.size(); ++q)
        if (v[q] == Q(1)) {
          bool free = true;
          for (const auto& w : basis_)
            if (&w != &v && !w[q].is_zero()) free = false;
          if (free) {
            pos = q;
            break;
          }
        }
      if (pos == v.size()) throw InternalInconsistency("FormChart: basis lacks free positions");
      free_.push_back(pos);
    }
  }
  std::size_t dim() const noexcept { return basis_.size(); }
  Form form(std::size_t k) const { return ambient_.form(basis_[k]); }
  Vec<Q> coordinates(const Form& f) const {
    const Vec<Q> v = ambient_.coordinates(f);
    Vec<Q> c(dim());
    Vec<Q> back(v.size());
    for (std::size_t k = 0; k < dim(); ++k) {
      c[k] = v[free_[k]];
      if (c[k].is_zero()) continue;
      for (std::size_t q = 0; q < v.size(); ++q) back[q] += c[k] * basis_[k][q];
    }
    if (back != v) throw InternalInconsistency("FormChart: form leaves the subspace");
    return c;
  }

 private:
  MaskIndex ambient_;
  std::vector<Vec<Q>> basis_;
  std::vector<std::size_t> free_;
};

constexpr Mask kAll6 = 0x3f;

// C⁶ with ω(p_i, q_j) = δ_ij, p_i = e_i and q_i = e_{3+i}.
Q omega6(std::size_t a, std::size_t b) {
  if (a < 3 && b == a + 3) return Q(1);
  if (b < 3 && a == b + 3) return Q(-1);
  return Q();
}

/// x⊙y : z ↦ ω(x,z)y + ω(y,z)x on C⁶.
Matrix<Q> symplectic_product(std::size_t a, std::size_t b) {
  Matrix<Q> m(6, 6);
  for (std::size_t c = 0; c < 6; ++c) {
    m(b, c) += omega6(a, c);
    m(a, c) += omega6(b, c);
  }
  return m;
}

/// Σ p_i∧q_i, used both as a bivector and as a form.
Form omega_bivector_6() {
  Form w(6);
  for (Mask i = 0; i < 3; ++i) w.add((Mask{1} << i) | (Mask{1} << (i + 3)), Q(1));
  return w;
}

struct F4ContactData {
  FormChart chart;
  ContactModel model;
  Matrix<Q> j;  // the complex structure on V
};

F4ContactData f4_contact_data() {
  MaskIndex cubic(6, degree_basis(6, 3));
  // Primitive forms: the kernel of contraction by ω = Σ p^i∧q^i.
  const Form omega = omega_bivector_6();
  Matrix<Q> contraction(6, cubic.size());
  for (std::size_t k = 0; k < cubic.size(); ++k) {
    const Form c = contract(omega, cubic.form(k));
    for (std::size_t q = 0; q < 6; ++q) contraction(q, k) = c.coeff(Mask{1} << q);
  }
  FormChart chart(cubic, kernel(contraction));
  if (chart.dim() != 14) throw InternalInconsistency("F4 contact: primitive forms are not 14-dimensional");
  const std::size_t n = chart.dim();

  const Form vol = wedge(wedge(omega, omega), omega) * Q(Rational(1, 6));
  const Q vol0 = vol.coeff(kAll6);
  ContactModel model;
  model.dim = n;
  model.bullet = Matrix<Q>(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      model.bullet(a, b) = wedge(chart.form(a), chart.form(b)).coeff(kAll6) / vol0;

  std::vector<Matrix<Q>> sp6;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a; b < 6; ++b) sp6.push_back(symplectic_product(a, b));
  MomentMap moment(sp6);
  auto raw_vee = [&](const Form& x, const Form& y) {
    Vec<Q> values(sp6.size());
    for (std::size_t k = 0; k < sp6.size(); ++k) values[k] = wedge(act(sp6[k], x, false), y).coeff(kAll6) / vol0;
    return moment.dual(values);
  };
  // Normalization: p₁p₂p₃ ∨ q₁q₂q₃ = Σ p_i⊙q_i.
  const Form p = Form::basis(6, 0x07), q = Form::basis(6, 0x38);
  const Matrix<Q> raw = raw_vee(p, q);
  Matrix<Q> target(6, 6);
  for (std::size_t i = 0; i < 3; ++i) target = target + symplectic_product(i, i + 3);
  Q kappa;
  for (std::size_t r = 0; r < 6 && kappa.is_zero(); ++r)
    for (std::size_t c = 0; c < 6; ++c)
      if (!raw(r, c).is_zero()) {
        kappa = target(r, c) / raw(r, c);
        break;
      }
  if (kappa.is_zero() || raw.scaled(kappa) != target) throw InternalInconsistency("F4 contact: ∨ is not proportional to Σ p⊙q");

  model.vee.resize(n * n);
  parallel_for(n * n, [&](std::size_t ij) {
    const Matrix<Q> vee = raw_vee(chart.form(ij / n), chart.form(ij % n)).scaled(kappa);
    model.vee[ij] = operator_matrix(n, [&](std::size_t k) { return chart.coordinates(act(vee, chart.form(k), false)); });
  });

  Matrix<Q> j6(6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    j6(i + 3, i) = Q(1);
    j6(i, i + 3) = Q(-1);
  }
  Matrix<Q> jv = operator_matrix(n, [&](std::size_t k) { return chart.coordinates(transform(j6, chart.form(k))); });
  return {std::move(chart), std::move(model), std::move(jv)};
}

}  // namespace

std::vector<DerivedConstant> f4_contact_constants() { return solve_contact_constants(f4_contact_data().model); }

TripleSystem f4_contact() {
  auto data = f4_contact_data();
  auto c = solve_contact_constants(data.model);
  expect_constants("F4-contact", c, {Q(Rational(-1, 2)), Q(Rational(-1, 2))});
  return contact_system("F4-contact", data.model, data.j, c[0].value, c[1].value);
}

// ---------------------------------------------------------------------------
// E6 contact: V = Λ³C⁶ with (α∨β)(x) = ι_{α•}(β∧x) + ι_{β•}(α∧x), contracting trailing slots.

namespace {

ContactModel e6_contact_model() {
  MaskIndex cubic(6, degree_basis(6, 3));
  const std::size_t n = cubic.size();
  ContactModel model;
  model.dim = n;
  model.bullet = Matrix<Q>(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) model.bullet(a, b) = wedge(cubic.form(a), cubic.form(b)).coeff(kAll6);
  auto dual = [&](std::size_t a) {
    Form f(6);
    for (std::size_t b = 0; b < n; ++b) f.add(cubic.mask(b), model.bullet(a, b));
    return f;
  };
  model.vee.resize(n * n);
  parallel_for(n * n, [&](std::size_t ij) {
    const std::size_t a = ij / n, b = ij % n;
    const Form da = dual(a), db = dual(b);
    Matrix<Q> vee(6, 6);
    for (std::size_t x = 0; x < 6; ++x) {
      const Form ex = Form::basis(6, Mask{1} << x);
      // ι_φ pairs φ with the trailing three slots: minus the leading contraction on Λ⁴.
      const Form image = -(contract(da, wedge(cubic.form(b), ex)) + contract(db, wedge(cubic.form(a), ex)));
      for (std::size_t r = 0; r < 6; ++r) vee(r, x) = image.coeff(Mask{1} << r);
    }
    model.vee[ij] = operator_matrix(n, [&](std::size_t k) { return cubic.coordinates(act(vee, cubic.form(k), false)); });
  });
  return model;
}

Matrix<Q> e6_contact_involution(const std::string& real_form) {
  MaskIndex cubic(6, degree_basis(6, 3));
  const std::size_t n = cubic.size();
  if (real_form == "EI") {
    const std::vector<int> signature{1, -1, 1, -1, 1, -1};
    return operator_matrix(n, [&](std::size_t k) { return cubic.coordinates(hodge(cubic.form(k), signature)); });
  }
  Matrix<Q> m(6, 6);
  if (real_form == "EII") {
    for (std::size_t i = 0; i < 6; ++i) m(i, 5 - i) = Q(i == 1 || i == 4 ? -1 : 1);
  } else if (real_form == "EIII") {
    for (std::size_t i = 1; i < 5; ++i) m(i, i) = Q(1);
    m(0, 5) = Q(-1);
    m(5, 0) = Q(-1);
  } else {
    throw ParameterOutOfRange("E6 contact: real form is EI, EII or EIII");
  }
  return operator_matrix(n, [&](std::size_t k) { return cubic.coordinates(transform(m, cubic.form(k))); });
}

}  // namespace

TripleSystem e6_contact(const std::string& real_form) {
  const Matrix<Q> involution = e6_contact_involution(real_form);
  static const ContactModel model = e6_contact_model();
  static const auto c = [] {
    auto v = solve_contact_constants(model);
    expect_constants("E6-contact", v, {Q(Rational(1, 2)), Q(Rational(-1, 2))});
    return v;
  }();
  return contact_system("E6-contact-" + real_form, model, involution, c[0].value, c[1].value);
}

// ---------------------------------------------------------------------------
// G2 on S³C², as cubic polynomials in e₀, e₁ with basis e₀^{3−k}e₁^k.

namespace {

using Poly = std::array<Q, 4>;
using Pair2 = std::array<Q, 2>;

Q omega2(const Pair2& x, const Pair2& y) { return x[0] * y[1] - x[1] * y[0]; }
Pair2 j2(const Pair2& y) { return {-y[1], y[0]}; }

/// u·z² as a cubic.
Poly times_square(const Pair2& u, const Pair2& z) {
  const std::array<Q, 3> sq{z[0] * z[0], Q(2) * z[0] * z[1], z[1] * z[1]};
  Poly p{};
  for (int k = 0; k < 3; ++k) {
    p[k] += u[0] * sq[k];
    p[k + 1] += u[1] * sq[k];
  }
  return p;
}

/// (x³y³z³) on cubes.
Poly g2_on_cubes(const Pair2& x, const Pair2& y, const Pair2& z) {
  const Pair2 jy = j2(y);
  const Q w = omega2(x, jy);
  const Poly a = times_square(jy, z), b = times_square(x, z), cube = times_square(z, z);
  const Q ca = Q(Rational(-3, 2)) * w * w * omega2(x, z);
  const Q cb = Q(Rational(-3, 2)) * w * w * omega2(jy, z);
  const Q cc = Q(Rational(1, 2)) * w * w * w;
  Poly out{};
  for (int k = 0; k < 4; ++k) out[k] = ca * a[k] + cb * b[k] + cc * cube[k];
  return out;
}

}  // namespace

TripleSystem g2_system() {
  // Monomials as combinations of the cubes (1,t)³, t = 0..3.
  Matrix<Q> cubes(4, 4);
  const long long binom[4] = {1, 3, 3, 1};
  for (long long t = 0; t < 4; ++t) {
    long long power = 1;
    for (int k = 0; k < 4; ++k, power *= t) cubes(k, t) = Q(binom[k] * power);
  }
  std::array<Vec<Q>, 4> weights;
  for (std::size_t k = 0; k < 4; ++k) weights[k] = *solve_linear(cubes, unit_vec(4, k));
  std::array<Pair2, 4> points;
  for (long long t = 0; t < 4; ++t) points[t] = {Q(1), Q(t)};
  std::vector<Poly> f(64);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t c = 0; c < 4; ++c) f[(a * 4 + b) * 4 + c] = g2_on_cubes(points[a], points[b], points[c]);
  return system_from_pairs("G2", 4, [&](std::size_t i, std::size_t j) {
    std::vector<SV> out;
    for (std::size_t k = 0; k < 4; ++k) {
      Vec<Q> v(4);
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
          for (std::size_t c = 0; c < 4; ++c) {
            const Q w = weights[i][a] * weights[j][b] * weights[k][c];
            if (w.is_zero()) continue;
            for (std::size_t q = 0; q < 4; ++q) v[q] += w * f[(a * 4 + b) * 4 + c][q];
          }
      out.push_back(SV::from_dense(v));
    }
    return out;
  });
}

// ---------------------------------------------------------------------------
// E6 extended Poincaré type on S = Λ(W*), dim W = 4.

namespace {

constexpr Mask kTop4 = 0x0f;

int sign_power(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

/// (−1)^{⌈(deg α + 1)/2⌉} ι_ω(α∧β).
Q spinor_bullet(const Form& a, const Form& b) {
  const int d = a.homogeneous_degree();
  return wedge(a, b).coeff(kTop4) * Q(sign_power((d + 2) / 2));
}

Form e6_poincare_basis_product(Mask a, Mask b, Mask c) {
  const int da = degree(a), db = degree(b), dc = degree(c);
  const Form fa = Form::basis(4, a), fb = Form::basis(4, b), fc = Form::basis(4, c);
  if (da % 2 != db % 2) return Form(4);
  if ((a == 0 && b == kTop4 && dc == 1) || (a == kTop4 && b == 0 && dc == 3) || (da == 3 && db == 1 && c == kTop4) ||
      (da == 1 && db == 3 && c == 0))
    return Form(4);
  if (dc % 2 == da % 2)
    return fc * spinor_bullet(fa, fb) + fa * spinor_bullet(fb, fc) - fb * spinor_bullet(fa, fc);
  if (da + dc <= 4) return hodge(wedge(hodge(wedge(fa, fc)), hodge(fb))) * Q(sign_power((da + 3) / 2));
  return wedge(hodge(wedge(hodge(fa), hodge(fc))), fb) * Q(sign_power((da + 2) / 2));
}

/// ⋆̃α = ε(α)⋆α with ε = −1 in degrees 1, 2.
Form modified_hodge(const Form& x) {
  Form out(4);
  for (int k = 0; k <= 4; ++k) {
    const Form part = hodge(x.component(k));
    out += (k == 1 || k == 2) ? -part : part;
  }
  return out;
}

/// i(dx¹∧α − ι_{∂₁}α).
Form clifford_first(const Form& x) {
  const Form d1 = Form::basis(4, 1);
  return (wedge(d1, x) - contract(d1, x)) * Q::i();
}

}  // namespace

TripleSystem e6_poincare() {
  MaskIndex spinors(4, full_basis(4));
  const std::size_t n = spinors.size();
  return system_from_pairs("E6-eP-EIV", n, [&](std::size_t i, std::size_t j) {
    std::vector<SV> out;
    for (std::size_t k = 0; k < n; ++k)
      out.push_back(SV::from_dense(
          spinors.coordinates(e6_poincare_basis_product(spinors.mask(i), spinors.mask(j), spinors.mask(k)))));
    return out;
  });
}

Matrix<Q> e6_poincare_modification(const std::string& real_form) {
  MaskIndex spinors(4, full_basis(4));
  std::function<Form(const Form&)> phi;
  if (real_form == "EI") phi = modified_hodge;
  else if (real_form == "EII") phi = [](const Form& x) { return clifford_first(modified_hodge(x)); };
  else if (real_form == "EIII") phi = clifford_first;
  else throw ParameterOutOfRange("E6 extended Poincaré modification: real form is EI, EII or EIII");
  return operator_matrix(spinors.size(), [&](std::size_t k) { return spinors.coordinates(phi(spinors.form(k))); });
}

// ---------------------------------------------------------------------------
// E6 special: V = Λ²(C⁵)*⊗C², basis index = 2·(form index) + (C² index).

namespace {

Pair2 unit2(std::size_t q) { return q == 0 ? Pair2{Q(1), Q()} : Pair2{Q(), Q(1)}; }
/// x⊙y : z ↦ ω(x,z)y + ω(y,z)x on C².
Pair2 sym2(const Pair2& x, const Pair2& y, const Pair2& z) {
  const Q a = omega2(x, z), b = omega2(y, z);
  return {a * y[0] + b * x[0], a * y[1] + b * x[1]};
}

Vec<Q> form_vec(const MaskIndex& idx, const Form& f) { return idx.coordinates(f); }

}  // namespace

std::vector<DerivedConstant> e6_special_constants() {
  const MaskIndex two(5, degree_basis(5, 2)), four(5, degree_basis(5, 4));
  ConstantSystem sys({"c1", "c2", "c3", "c4", "c5"});
  auto zeros = [](std::size_t n) { return std::vector<Vec<Q>>(5, Vec<Q>(n)); };
  // [α̃⊗a,[β⊗b,ξ]] = 0 with ω(a,b) = 1: −2c₂(ι_α̃β)ξ + c₃(α̃•β)·ξ − β∧ι_α̃ξ = 0.
  for (std::size_t x = 0; x < two.size(); ++x)
    for (std::size_t y = 0; y < two.size(); ++y)
      for (std::size_t z = 0; z < four.size(); ++z) {
        const Form at = two.form(x), b = two.form(y), xi = four.form(z);
        auto coeffs = zeros(four.size());
        coeffs[1] = form_vec(four, xi * (pairing(at, b) * Q(-2)));
        coeffs[2] = form_vec(four, act(bullet(at, b), xi, true));
        sys.add(coeffs, form_vec(four, -wedge(b, contract(at, xi))));
      }
  // [ξ̃,[β⊗b,ψ]] = 0: −ι_{ι_βξ̃}ψ − c₅(ξ̃•ψ)·β + c₄(ι_ξ̃ψ)β = 0.
  for (std::size_t x = 0; x < four.size(); ++x)
    for (std::size_t y = 0; y < four.size(); ++y)
      for (std::size_t z = 0; z < two.size(); ++z) {
        const Form xt = four.form(x), psi = four.form(y), b = two.form(z);
        auto coeffs = zeros(two.size());
        coeffs[3] = form_vec(two, b * pairing(xt, psi));
        coeffs[4] = form_vec(two, -act(bullet(xt, psi), b, true));
        sys.add(coeffs, form_vec(two, -contract(contract(b, xt), psi)));
      }
  // [α̃⊗a,[β⊗b,γ⊗c]] = [[α̃⊗a,β⊗b],γ⊗c] + [β⊗b,[α̃⊗a,γ⊗c]] on V.
  auto tensor = [&](const Form& f, const Pair2& v) {
    Vec<Q> out(2 * two.size());
    const Vec<Q> c = form_vec(two, f);
    for (std::size_t k = 0; k < c.size(); ++k)
      for (int p = 0; p < 2; ++p) out[2 * k + p] = c[k] * v[p];
    return out;
  };
  auto axpy_q = [](Vec<Q>& acc, const Q& s, const Vec<Q>& v) {
    if (s.is_zero()) return;
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += s * v[k];
  };
  for (std::size_t x = 0; x < two.size(); ++x)
    for (std::size_t y = 0; y < two.size(); ++y)
      for (std::size_t z = 0; z < two.size(); ++z)
        for (std::size_t qa = 0; qa < 2; ++qa)
          for (std::size_t qb = 0; qb < 2; ++qb)
            for (std::size_t qc = 0; qc < 2; ++qc) {
              const Form at = two.form(x), b = two.form(y), g = two.form(z);
              const Pair2 a = unit2(qa), vb = unit2(qb), vc = unit2(qc);
              const std::size_t dim = 2 * two.size();
              auto coeffs = zeros(dim);
              Vec<Q> constant(dim);
              // Left side ω(b,c) ι_α̃(β∧γ)⊗a, moved to the right with a minus sign.
              axpy_q(constant, omega2(vb, vc), tensor(contract(at, wedge(b, g)), a));
              const Q ib = pairing(at, b), ig = pairing(at, g);
              axpy_q(coeffs[0], -ib, tensor(g, sym2(a, vb, vc)));
              axpy_q(coeffs[1], ib * omega2(a, vb), tensor(g, vc));
              axpy_q(coeffs[2], -omega2(a, vb), tensor(act(bullet(at, b), g, true), vc));
              axpy_q(coeffs[0], ig, tensor(b, sym2(a, vc, vb)));
              axpy_q(coeffs[1], -ig * omega2(a, vc), tensor(b, vb));
              axpy_q(coeffs[2], omega2(a, vc), tensor(act(bullet(at, g), b, true), vb));
              sys.add(coeffs, constant);
            }
  return sys.solve();
}

TripleSystem e6_special() {
  static const auto c = [] {
    auto v = e6_special_constants();
    expect_constants("E6-special", v,
                     {Q(Rational(1, 2)), Q(Rational(-3, 10)), Q(-1), Q(Rational(3, 5)), Q(1)});
    return v;
  }();
  const Q c1 = c[0].value, c2 = c[1].value, c3 = c[2].value;
  const MaskIndex two(5, degree_basis(5, 2));
  const std::size_t dim = 2 * two.size();
  // (xyz) = [[α⊗a, β^♮⊗Jb], γ⊗c]
  //       = −c₁ι(ω(Jb,c)a + ω(a,c)Jb)⊗γ + c₂ι ω(Jb,a)γ⊗c − c₃ω(Jb,a)(β^♮•α)·γ⊗c, ι = ⟨β,α⟩.
  return system_from_pairs("E6-special", dim, [&, c1, c2, c3](std::size_t x, std::size_t y) {
    const Form alpha = two.form(x / 2), beta = two.form(y / 2);
    const Pair2 a = unit2(x % 2), jb = j2(unit2(y % 2));
    const Q iota = pairing(beta, alpha);
    const Q w = omega2(jb, a);
    const Matrix<Q> bl = bullet(beta, alpha);
    std::vector<SV> out;
    for (std::size_t z = 0; z < dim; ++z) {
      const std::size_t gk = z / 2;
      const Pair2 cvec = unit2(z % 2);
      Vec<Q> v(dim);
      const Pair2 s = sym2(jb, a, cvec);
      for (int p = 0; p < 2; ++p) v[2 * gk + p] += -c1 * iota * s[p] + c2 * iota * w * cvec[p];
      if (!w.is_zero()) {
        const Vec<Q> moved = two.coordinates(act(bl, two.form(gk), true));
        for (std::size_t k = 0; k < moved.size(); ++k)
          if (!moved[k].is_zero()) v[2 * k + z % 2] += -c3 * w * moved[k];
      }
      out.push_back(SV::from_dense(v));
    }
    return out;
  });
}

// ---------------------------------------------------------------------------
// E7 special: V = Λ³(C⁷)*, (αβγ) = 2/7 η(α,β)γ − (β^♮•α)·γ.

TripleSystem e7_special() {
  const MaskIndex three(7, degree_basis(7, 3));
  const std::size_t n = three.size();
  return system_from_pairs("E7-special", n, [&](std::size_t i, std::size_t j) {
    const Form alpha = three.form(i), beta = three.form(j);
    Matrix<Q> op = operator_matrix(n, [&](std::size_t k) {
      return three.coordinates(act(bullet(beta, alpha), three.form(k), true) * Q(-1));
    });
    const Q s = pairing(alpha, beta) * Q(Rational(2, 7));
    for (std::size_t k = 0; k < n; ++k) op(k, k) += s;
    return columns_of(op);
  });
}

// ---------------------------------------------------------------------------
// E8 contact, sl(8) model: V = Λ²C⁸ ⊕ Λ²(C⁸)*, coordinates (x, x*).

namespace {

constexpr Mask kAll8 = 0xff;

/// ξ^♯ = ι_ξ vol.
Form sharp8(const Form& xi) { return contract(xi, Form::basis(8, kAll8)); }
/// Inverse of ♯.
Form flat8(const Form& y) {
  Form out(8);
  for (const auto& [m, c] : y.terms()) {
    const Mask dual = kAll8 & ~m;
    out.add(dual, shuffle_sign(dual, m) > 0 ? c : -c);
  }
  return out;
}

}  // namespace

TripleSystem e8_contact_sl8() {
  const MaskIndex two(8, degree_basis(8, 2));
  const std::size_t half = two.size(), n = 2 * half;
  auto split = [&](std::size_t k) -> std::pair<Form, Form> {
    if (k < half) return {two.form(k), Form(8)};
    return {Form(8), two.form(k - half)};
  };
  auto join = [&](const Form& x, const Form& xs) {
    Vec<Q> v(n);
    const Vec<Q> a = two.coordinates(x), b = two.coordinates(xs);
    for (std::size_t k = 0; k < half; ++k) {
      v[k] = a[k];
      v[half + k] = b[k];
    }
    return v;
  };
  const Q i = Q::i();
  return system_from_pairs("E8-contact-sl8", n, [&](std::size_t xi, std::size_t yi) {
    const auto [x, xs] = split(xi);
    const auto [y0, ys0] = split(yi);
    // σY = \widehat{Y'} with Y' = (iy, −iy*); (XYZ) = −[[Ŷ', X], Z].
    const Form y = y0 * i, ys = ys0 * (-i);
    Matrix<Q> a(8, 8);
    if (!y.is_zero() && !xs.is_zero()) a = a + bullet(y, xs);
    if (!x.is_zero() && !ys.is_zero()) a = a + bullet(x, ys);
    const Form alpha = wedge(ys, xs) - flat8(wedge(y, x));
    const Q e = (pairing(ys, x) - pairing(xs, y)) * Q(Rational(-1, 2));
    std::vector<SV> out;
    for (std::size_t zi = 0; zi < n; ++zi) {
      const auto [z, zs] = split(zi);
      // g₀ acts by A, by [α,Z] = ((α∧z*)^♯, ι_z α) and by E = −1.
      const Form rz = -act(a, z, false) - sharp8(wedge(alpha, zs)) + z * e;
      const Form rzs = -act(a, zs, true) - contract(z, alpha) + zs * e;
      out.push_back(SV::from_dense(join(rz, rzs)));
    }
    return out;
  });
}

}  // namespace kantor::detail
