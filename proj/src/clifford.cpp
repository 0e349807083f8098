#include "kantor/clifford.hpp"

#include <string>

namespace kantor {

Zi Zi::from_q(const Q& z) {
  if (!z.re().is_integer() || !z.im().is_integer() || !z.re().is_small() || !z.im().is_small())
    throw std::domain_error("not a small Gaussian integer: " + z.to_string());
  return {z.re().small_num(), z.im().small_num()};
}

Vec<Q> to_q(const ZVec& v, long long den) {
  Vec<Q> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out[k] = v[k].over(den);
  return out;
}

ZVec to_zi(const Vec<Q>& v) {
  ZVec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = Zi::from_q(v[k]);
  return out;
}

Zi dot(const ZVec& a, const ZVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot");
  Zi s;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero() && !b[k].is_zero()) s += a[k] * b[k];
  return s;
}

ZVec scaled(const ZVec& v, Zi a) {
  ZVec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k] * a;
  return out;
}

void axpy(ZVec& a, Zi c, const ZVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("axpy");
  if (c.is_zero()) return;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!b[k].is_zero()) a[k] += c * b[k];
}

// ---------------------------------------------------------------------------
// Monomial matrices

Monomial Monomial::identity(std::size_t n) {
  Monomial m;
  m.target_.resize(n);
  m.phase_.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) m.target_[j] = static_cast<uint32_t>(j);
  return m;
}

Monomial Monomial::from_matrix(const Matrix<Q>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("Monomial::from_matrix: not square");
  const std::size_t n = a.rows();
  Monomial m;
  m.target_.resize(n);
  m.phase_.resize(n);
  std::vector<char> hit(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    int found = 0;
    for (std::size_t r = 0; r < n; ++r) {
      const Q& x = a(r, j);
      if (x.is_zero()) continue;
      int k = -1;
      for (int p = 0; p < 4; ++p)
        if (x == Zi::unit(p).over()) k = p;
      if (k < 0 || ++found > 1 || hit[r]) throw std::invalid_argument("Monomial::from_matrix: not monomial");
      hit[r] = 1;
      m.target_[j] = static_cast<uint32_t>(r);
      m.phase_[j] = static_cast<uint8_t>(k);
    }
    if (found != 1) throw std::invalid_argument("Monomial::from_matrix: empty column");
  }
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (size() != o.size()) throw DimensionMismatch("Monomial product");
  Monomial r;
  r.target_.resize(size());
  r.phase_.resize(size());
  for (std::size_t j = 0; j < size(); ++j) {
    const uint32_t mid = o.target_[j];
    r.target_[j] = target_[mid];
    r.phase_[j] = static_cast<uint8_t>((phase_[mid] + o.phase_[j]) & 3);
  }
  return r;
}

Monomial Monomial::rotated(int k) const {
  Monomial r = *this;
  for (auto& p : r.phase_) p = static_cast<uint8_t>((p + k + 4) & 3);
  return r;
}

Monomial Monomial::transpose() const {
  Monomial r;
  r.target_.resize(size());
  r.phase_.resize(size());
  for (std::size_t j = 0; j < size(); ++j) {
    r.target_[target_[j]] = static_cast<uint32_t>(j);
    r.phase_[target_[j]] = phase_[j];
  }
  return r;
}

Monomial Monomial::kron(const Monomial& o) const {
  const std::size_t n = size(), m = o.size();
  Monomial r;
  r.target_.resize(n * m);
  r.phase_.resize(n * m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      r.target_[a * m + b] = static_cast<uint32_t>(target_[a] * m + o.target_[b]);
      r.phase_[a * m + b] = static_cast<uint8_t>((phase_[a] + o.phase_[b]) & 3);
    }
  return r;
}

std::optional<int> Monomial::scalar_phase() const {
  if (size() == 0) return 0;
  for (std::size_t j = 0; j < size(); ++j)
    if (target_[j] != j || phase_[j] != phase_[0]) return std::nullopt;
  return phase_[0];
}

ZVec Monomial::apply(const ZVec& v) const {
  ZVec out(size());
  apply_add(v, Zi(1), out);
  return out;
}

void Monomial::apply_add(const ZVec& v, Zi c, ZVec& out) const {
  if (v.size() != size() || out.size() != size()) throw DimensionMismatch("Monomial::apply");
  for (std::size_t j = 0; j < size(); ++j)
    if (!v[j].is_zero()) out[target_[j]] += (c * v[j]).rotated(phase_[j]);
}

Matrix<Q> Monomial::to_matrix() const {
  Matrix<Q> m(size(), size());
  for (std::size_t j = 0; j < size(); ++j) m(target_[j], j) = Zi::unit(phase_[j]).over();
  return m;
}

// ---------------------------------------------------------------------------
// Clifford module

namespace {

Monomial two_by_two(uint32_t t0, int p0, uint32_t t1, int p1) {
  Matrix<Q> m(2, 2);
  m(t0, 0) = Zi::unit(p0).over();
  m(t1, 1) = Zi::unit(p1).over();
  return Monomial::from_matrix(m);
}

const Monomial& unit2() {
  static const Monomial m = Monomial::identity(2);
  return m;
}
const Monomial& t_matrix() {
  static const Monomial m = two_by_two(1, 1, 0, 3);
  return m;
}
const Monomial& g1_matrix() {
  static const Monomial m = two_by_two(0, 1, 1, 3);
  return m;
}
const Monomial& g2_matrix() {
  static const Monomial m = two_by_two(1, 1, 0, 1);
  return m;
}

Monomial kron_all(const std::vector<const Monomial*>& factors) {
  Monomial r = Monomial::identity(1);
  for (const auto* f : factors) r = r.kron(*f);
  return r;
}

}  // namespace

CliffordRep::CliffordRep(std::size_t dim_u) : dim_u_(dim_u), factors_(dim_u / 2) {
  if (dim_u < 2 || dim_u > 14) throw std::invalid_argument("CliffordRep: dim U must lie in [2, 14]");
  const std::size_t k = factors_;
  for (std::size_t j = 1; j <= 2 * k; ++j) {
    const std::size_t t = (j - 1) / 2;
    std::vector<const Monomial*> f;
    for (std::size_t p = 0; p + 1 + t < k; ++p) f.push_back(&unit2());
    f.push_back(j % 2 == 1 ? &g1_matrix() : &g2_matrix());
    for (std::size_t p = 0; p < t; ++p) f.push_back(&t_matrix());
    gammas_.push_back(kron_all(f));
  }
  Monomial even_volume = Monomial::identity(spinor_dim());
  for (const auto& g : gammas_) even_volume = even_volume * g;
  if (!even()) {
    // (e₁⋯e_{2k})² = (−1)^k, so c² = (−1)^{k+1}.
    const int c_phase = (k % 2 == 1) ? 2 : 1;
    gammas_.push_back(even_volume.rotated(c_phase));
  }
  pairs_.reserve(dim_u_ * dim_u_);
  for (std::size_t a = 0; a < dim_u_; ++a)
    for (std::size_t b = 0; b < dim_u_; ++b) pairs_.push_back(gammas_[a] * gammas_[b]);
  volume_ = Monomial::identity(spinor_dim());
  for (const auto& g : gammas_) volume_ = volume_ * g;
  if (even()) chirality_ = volume_.rotated(static_cast<int>(k % 4));
  verify();
}

Monomial CliffordRep::product(const std::vector<std::size_t>& indices) const {
  Monomial r = Monomial::identity(spinor_dim());
  for (auto a : indices) r = r * gamma(a);
  return r;
}

const Monomial& CliffordRep::chirality() const {
  if (!even()) throw std::logic_error("CliffordRep: no chirality in odd dimension");
  return chirality_;
}

void CliffordRep::verify() const {
  const Monomial minus_one = Monomial::identity(spinor_dim()).negated();
  for (std::size_t a = 0; a < dim_u_; ++a) {
    if (pair(a, a) != minus_one)
      throw CliffordRelationFailure("e_" + std::to_string(a + 1) + " does not square to -1");
    for (std::size_t b = a + 1; b < dim_u_; ++b)
      if (pair(a, b) != pair(b, a).negated())
        throw CliffordRelationFailure("e_" + std::to_string(a + 1) + " and e_" + std::to_string(b + 1) +
                                      " do not anticommute");
  }
  if (even()) {
    const auto sq = (chirality_ * chirality_).scalar_phase();
    if (!sq || *sq != 0) throw CliffordRelationFailure("chirality is not an involution");
  }
}

ZVec CliffordRep::semispinor_basis(int chirality_sign, std::size_t j) const {
  const std::size_t n = spinor_dim();
  if (j >= n / 2) throw std::out_of_range("semispinor_basis");
  ZVec v(n);
  v[j] = Zi(1);
  ZVec out = v;
  chirality().apply_add(v, Zi(chirality_sign), out);
  return out;
}

ZVec CliffordRep::semispinor_coordinates(int chirality_sign, const ZVec& s) const {
  const std::size_t n = spinor_dim();
  ZVec c(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n / 2));
  ZVec back(n);
  for (std::size_t j = 0; j < n / 2; ++j) axpy(back, c[j], semispinor_basis(chirality_sign, j));
  if (back != s) throw std::invalid_argument("spinor does not lie in the requested semispinor module");
  return c;
}

ZVec CliffordRep::act(const ZVec& u, const ZVec& s) const {
  ZVec out(spinor_dim());
  for (std::size_t a = 0; a < dim_u_; ++a)
    if (!u[a].is_zero()) gamma(a).apply_add(s, u[a], out);
  return out;
}

// ---------------------------------------------------------------------------
// Admissible forms

Zi AdmissibleForm::operator()(const ZVec& s, const ZVec& t) const {
  Zi r;
  for (std::size_t j = 0; j < matrix.size(); ++j) {
    if (t[j].is_zero()) continue;
    const Zi& x = s[matrix.target(j)];
    if (!x.is_zero()) r += (x * t[j]).rotated(matrix.phase(j));
  }
  return r;
}

AdmissibleForm kronecker_form(const CliffordRep& rep, std::string_view pattern, int normalization) {
  if (pattern.size() != rep.factors()) throw std::invalid_argument("kronecker_form: pattern length");
  static const Monomial omega = two_by_two(1, 2, 0, 0);
  std::vector<const Monomial*> f;
  for (char c : pattern) {
    if (c == 'g') f.push_back(&unit2());
    else if (c == 'w') f.push_back(&omega);
    else throw std::invalid_argument("kronecker_form: factors are 'g' or 'w'");
  }
  AdmissibleForm form;
  form.pattern = std::string(pattern);
  form.normalization = normalization;
  form.matrix = kron_all(f);
  if (normalization == -1) form.matrix = form.matrix.negated();
  else if (normalization != 1) throw std::invalid_argument("kronecker_form: normalization is ±1");

  const Monomial& b = form.matrix;
  for (std::size_t a = 0; a < rep.dim_u(); ++a) {
    const Monomial lhs = rep.gamma(a).transpose() * b;
    const Monomial rhs = b * rep.gamma(a);
    int tau = lhs == rhs ? 1 : (lhs == rhs.negated() ? -1 : 0);
    if (tau == 0 || (form.tau != 0 && tau != form.tau))
      throw std::invalid_argument("kronecker_form: " + form.pattern + " is not admissible");
    form.tau = tau;
  }
  const Monomial bt = b.transpose();
  form.sigma = bt == b ? 1 : (bt == b.negated() ? -1 : 0);
  if (form.sigma == 0) throw std::invalid_argument("kronecker_form: neither symmetric nor antisymmetric");
  if (rep.even()) {
    const Monomial conj = rep.chirality().transpose() * b * rep.chirality();
    form.iota = conj == b ? 1 : (conj == b.negated() ? -1 : 0);
    if (form.iota == 0) throw std::invalid_argument("kronecker_form: semispinors neither orthogonal nor isotropic");
  }
  return form;
}

AdmissibleForm admissible_form(const CliffordRep& rep, int tau, int sigma, int iota) {
  const std::size_t k = rep.factors();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::string p(k, 'g');
    for (std::size_t q = 0; q < k; ++q)
      if (mask >> (k - 1 - q) & 1) p[q] = 'w';
    try {
      auto f = kronecker_form(rep, p);
      if (f.tau == tau && f.sigma == sigma && (!rep.even() || f.iota == iota)) return f;
    } catch (const std::invalid_argument&) {
    }
  }
  throw UnrealizableInvariants("no admissible Kronecker form with invariants (" + std::to_string(tau) + "," +
                               std::to_string(sigma) + "," + std::to_string(iota) + ") in dimension " +
                               std::to_string(rep.dim_u()));
}

AdmissibleForm catalog_form(const CliffordRep& rep) {
  switch (rep.dim_u()) {
    case 7: return admissible_form(rep, -1, 1);
    case 8: return admissible_form(rep, 1, 1, 1);
    case 10: return kronecker_form(rep, "wgwgw", -1);
    case 12: return kronecker_form(rep, "gwgwgw");
    case 14: return admissible_form(rep, -1, 1, -1);
    default: throw UnrealizableInvariants("no catalog form in dimension " + std::to_string(rep.dim_u()));
  }
}

// ---------------------------------------------------------------------------
// Currents

Zi TwoForm::at(std::size_t a, std::size_t b) const {
  if (a == b) return Zi();
  if (a < b) return coeff[index(dim_u, a, b)];
  return -coeff[index(dim_u, b, a)];
}

bool TwoForm::is_zero() const {
  for (const auto& c : coeff)
    if (!c.is_zero()) return false;
  return true;
}

Matrix<Q> TwoForm::to_matrix() const {
  Matrix<Q> m(dim_u, dim_u);
  for (std::size_t a = 0; a < dim_u; ++a)
    for (std::size_t b = a + 1; b < dim_u; ++b) {
      const Zi c = coeff[index(dim_u, a, b)];
      if (c.is_zero()) continue;
      m(b, a) += c.over();
      m(a, b) -= c.over();
    }
  return m;
}

ZVec gamma_current(const CliffordRep& rep, const AdmissibleForm& beta, const ZVec& s, const ZVec& t) {
  ZVec out(rep.dim_u());
  for (std::size_t a = 0; a < rep.dim_u(); ++a) out[a] = beta(rep.gamma(a).apply(s), t);
  return out;
}

TwoForm gamma2(const CliffordRep& rep, const AdmissibleForm& beta, const ZVec& s, const ZVec& t) {
  const std::size_t n = rep.dim_u();
  TwoForm w(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) w.coeff[TwoForm::index(n, a, b)] = beta(rep.pair(a, b).apply(s), t);
  return w;
}

ZVec spin_action_doubled(const CliffordRep& rep, const TwoForm& w, const ZVec& t) {
  const std::size_t n = rep.dim_u();
  std::vector<uint32_t> support;
  for (std::size_t j = 0; j < t.size(); ++j)
    if (!t[j].is_zero()) support.push_back(static_cast<uint32_t>(j));
  ZVec out(rep.spinor_dim());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Zi c = w.coeff[TwoForm::index(n, a, b)];
      if (c.is_zero()) continue;
      const Monomial& p = rep.pair(a, b);
      for (uint32_t j : support) out[p.target(j)] += (c * t[j]).rotated(p.phase(j));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Volume elements

ZVec VolumeElement::apply_scaled(const ZVec& s) const {
  if (monomial) return monomial->apply(s);
  ZVec out(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    if (!s[j].is_zero()) axpy(out, s[j], columns[j]);
  return out;
}

Matrix<Q> VolumeElement::to_matrix() const {
  const std::size_t n = columns.size();
  Matrix<Q> m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < n; ++r)
      if (!columns[j][r].is_zero()) m(r, j) = columns[j][r].over(denominator);
  return m;
}

namespace {

std::vector<ZVec> columns_of(const Monomial& m) {
  std::vector<ZVec> cols(m.size(), ZVec(m.size()));
  for (std::size_t j = 0; j < m.size(); ++j) cols[j][m.target(j)] = Zi::unit(m.phase(j));
  return cols;
}

}  // namespace

VolumeElement volume_element(const CliffordRep& rep, const std::vector<std::size_t>& w) {
  std::vector<char> in_w(rep.dim_u(), 0);
  for (std::size_t q = 0; q < w.size(); ++q) {
    if (w[q] >= rep.dim_u() || in_w[w[q]] || (q > 0 && w[q] < w[q - 1]))
      throw std::invalid_argument("volume_element: W must be listed by increasing distinct indices");
    in_w[w[q]] = 1;
  }
  VolumeElement v;
  v.subspace = w;
  const Monomial i_op = rep.product(w);
  const auto sq = (i_op * i_op).scalar_phase();
  if (!sq || (*sq != 0 && *sq != 2)) throw SpecMismatch("vol_W does not square to ±1");
  v.square = *sq == 0 ? 1 : -1;
  // I⁻¹ = square·I; twisted adjoint (−1)^m I u I⁻¹.
  const int twist = (w.size() % 2 == 0) ? 0 : 2;
  const Monomial inverse = v.square == 1 ? i_op : i_op.negated();
  for (std::size_t a = 0; a < rep.dim_u(); ++a) {
    const Monomial adj = (i_op * rep.gamma(a) * inverse).rotated(twist);
    const Monomial expect = in_w[a] ? rep.gamma(a).negated() : rep.gamma(a);
    if (adj != expect) throw SpecMismatch("twisted adjoint of vol_W is not -r_W");
  }
  v.monomial = i_op;
  v.columns = columns_of(i_op);
  return v;
}

VolumeElement volume_element(const CliffordRep& rep, std::size_t m) {
  std::vector<std::size_t> w(m);
  for (std::size_t q = 0; q < m; ++q) w[q] = q;
  return volume_element(rep, w);
}

VolumeElement isotropic_exponential(const CliffordRep& rep) {
  if (!rep.even() || rep.factors() % 2 != 0)
    throw SpecMismatch("isotropic_exponential needs dim U = 2k with k even");
  const std::size_t n = rep.spinor_dim();
  const std::size_t k = rep.factors();
  // Columns of ∏_j (1 + e_{2j−1}e_{2j}), expanded monomial by monomial.
  std::vector<ZVec> cols = columns_of(Monomial::identity(n));
  for (std::size_t j = 0; j < k; ++j) {
    const Monomial& p = rep.pair(2 * j, 2 * j + 1);
    for (auto& c : cols) {
      ZVec next = c;
      p.apply_add(c, Zi(1), next);
      c = std::move(next);
    }
  }
  VolumeElement v;
  v.columns = std::move(cols);
  v.denominator = 1LL << (k / 2);
  v.square = 0;
  // I² = vol: (den·I)² = den²·vol.
  const long long den2 = v.denominator * v.denominator;
  for (std::size_t j = 0; j < n; ++j) {
    const ZVec sq = v.apply_scaled(v.columns[j]);
    ZVec unit(n);
    unit[j] = Zi(1);
    if (sq != scaled(rep.volume().apply(unit), Zi(den2))) throw SpecMismatch("exponential does not square to vol");
  }
  return v;
}

}  // namespace kantor
