#include "kantor/jordan.hpp"

#include <stdexcept>

namespace kantor {

namespace {

constexpr std::size_t kJ = AlbertElement::kDim;

Q rational(long long n, long long d = 1) { return Q(Rational(n, d)); }

}  // namespace

std::pair<int, std::size_t> octonion_table(std::size_t i, std::size_t j) {
  if (i < 1 || i > 7 || j < 1 || j > 7 || i == j) throw std::invalid_argument("octonion_table: bad index");
  auto wrap = [](std::size_t k) { return (k - 1) % 7 + 1; };
  for (std::size_t a = 1; a <= 7; ++a) {
    const std::size_t line[3] = {a, wrap(a + 1), wrap(a + 3)};
    for (int s = 0; s < 3; ++s) {
      const std::size_t p = line[s], q = line[(s + 1) % 3], r = line[(s + 2) % 3];
      if (p == i && q == j) return {1, r};
      if (q == i && p == j) return {-1, r};
    }
  }
  throw std::logic_error("octonion_table: pair not on a line");
}

Octonion Octonion::unit(std::size_t k) {
  Octonion o;
  o.c_.at(k) = Q(1);
  return o;
}

Octonion Octonion::scalar(const Q& a) {
  Octonion o;
  o.c_[0] = a;
  return o;
}

Octonion Octonion::operator+(const Octonion& o) const {
  Octonion r = *this;
  for (std::size_t k = 0; k < 8; ++k) r.c_[k] += o.c_[k];
  return r;
}

Octonion Octonion::operator-(const Octonion& o) const {
  Octonion r = *this;
  for (std::size_t k = 0; k < 8; ++k) r.c_[k] -= o.c_[k];
  return r;
}

Octonion Octonion::operator*(const Octonion& o) const {
  Octonion r;
  for (std::size_t i = 0; i < 8; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < 8; ++j) {
      if (o.c_[j].is_zero()) continue;
      const Q p = c_[i] * o.c_[j];
      if (i == 0) r.c_[j] += p;
      else if (j == 0) r.c_[i] += p;
      else if (i == j) r.c_[0] -= p;
      else {
        const auto [s, k] = octonion_table(i, j);
        if (s > 0) r.c_[k] += p;
        else r.c_[k] -= p;
      }
    }
  }
  return r;
}

Octonion Octonion::scaled(const Q& a) const {
  Octonion r = *this;
  for (auto& x : r.c_) x *= a;
  return r;
}

Octonion Octonion::conj() const {
  Octonion r = *this;
  for (std::size_t k = 1; k < 8; ++k) r.c_[k] = -r.c_[k];
  return r;
}

Q Octonion::norm() const {
  Q s;
  for (const auto& x : c_)
    if (!x.is_zero()) s += x * x;
  return s;
}

Q Octonion::trace() const { return c_[0] + c_[0]; }

AlbertElement::AlbertElement(Vec<Q> coords) : v_(std::move(coords)) {
  if (v_.size() != kDim) throw DimensionMismatch("AlbertElement");
}

AlbertElement AlbertElement::identity() {
  AlbertElement a;
  for (std::size_t i = 0; i < 3; ++i) a.v_[i] = Q(1);
  return a;
}

AlbertElement AlbertElement::unit(std::size_t k) {
  AlbertElement a;
  a.v_.at(k) = Q(1);
  return a;
}

AlbertElement AlbertElement::from_parts(const std::array<Q, 3>& diag, const std::array<Octonion, 3>& off) {
  AlbertElement a;
  for (std::size_t i = 0; i < 3; ++i) {
    a.v_[i] = diag[i];
    for (std::size_t k = 0; k < 8; ++k) a.v_[3 + 8 * i + k] = off[i][k];
  }
  return a;
}

Octonion AlbertElement::off(std::size_t i) const {
  Octonion o;
  for (std::size_t k = 0; k < 8; ++k) o[k] = v_.at(3 + 8 * i + k);
  return o;
}

AlbertElement AlbertElement::operator+(const AlbertElement& o) const {
  AlbertElement r = *this;
  for (std::size_t k = 0; k < kDim; ++k) r.v_[k] += o.v_[k];
  return r;
}

AlbertElement AlbertElement::operator-(const AlbertElement& o) const {
  AlbertElement r = *this;
  for (std::size_t k = 0; k < kDim; ++k) r.v_[k] -= o.v_[k];
  return r;
}

AlbertElement AlbertElement::scaled(const Q& a) const {
  AlbertElement r = *this;
  for (auto& x : r.v_) x *= a;
  return r;
}

const CubicData& CubicData::albert() {
  static const CubicData data;
  return data;
}

Q CubicData::norm(const AlbertElement& a) const {
  const Octonion c1 = a.off(0), c2 = a.off(1), c3 = a.off(2);
  return a.diag(0) * a.diag(1) * a.diag(2) - a.diag(0) * c1.norm() - a.diag(1) * c2.norm() -
         a.diag(2) * c3.norm() + ((c1 * c2) * c3).trace();
}

CubicData::CubicData() : trilinear_(kJ * kJ * kJ), gram_(kJ, kJ), gram_inverse_(kJ, kJ) {
  // Polarization: 6N(a,b,c) = N(a+b+c) − N(a+b) − N(a+c) − N(b+c) + N(a) + N(b) + N(c).
  const Q sixth = rational(1, 6);
  for (std::size_t i = 0; i < kJ; ++i)
    for (std::size_t j = i; j < kJ; ++j)
      for (std::size_t k = j; k < kJ; ++k) {
        const auto a = AlbertElement::unit(i), b = AlbertElement::unit(j), c = AlbertElement::unit(k);
        const Q v = (norm(a + b + c) - norm(a + b) - norm(a + c) - norm(b + c) + norm(a) + norm(b) + norm(c)) * sixth;
        if (v.is_zero()) continue;
        const std::size_t p[3] = {i, j, k};
        for (int s = 0; s < 6; ++s) {
          static constexpr int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
          trilinear_[(p[perm[s][0]] * kJ + p[perm[s][1]]) * kJ + p[perm[s][2]]] = v;
        }
      }
  for (std::size_t i = 0; i < kJ; ++i)
    for (std::size_t j = 0; j < kJ; ++j)
      gram_(i, j) = trace(AlbertElement::unit(i)) * trace(AlbertElement::unit(j)) -
                    s_form(AlbertElement::unit(i), AlbertElement::unit(j));
  std::vector<Vec<Q>> columns;
  for (std::size_t k = 0; k < kJ; ++k) {
    Vec<Q> e(kJ);
    e[k] = Q(1);
    auto x = solve_linear(gram_, e);
    if (!x) throw std::logic_error("CubicData: degenerate trace form");
    columns.push_back(*x);
  }
  for (std::size_t i = 0; i < kJ; ++i)
    for (std::size_t j = 0; j < kJ; ++j) gram_inverse_(i, j) = columns[j][i];
  cross_table_.assign(kJ, std::vector<SparseVector<Q>>(kJ));
  for (std::size_t i = 0; i < kJ; ++i)
    for (std::size_t j = 0; j < kJ; ++j) {
      Vec<Q> f(kJ);
      for (std::size_t k = 0; k < kJ; ++k) f[k] = trilinear_[(i * kJ + j) * kJ + k] * Q(6);
      cross_table_[i][j] = SparseVector<Q>::from_dense(from_functional(f).coords());
    }
}

AlbertElement CubicData::from_functional(const Vec<Q>& values) const { return AlbertElement(gram_inverse_ * values); }

Q CubicData::norm(const AlbertElement& a, const AlbertElement& b, const AlbertElement& c) const {
  Q s;
  for (std::size_t i = 0; i < kJ; ++i) {
    if (a.coords()[i].is_zero()) continue;
    for (std::size_t j = 0; j < kJ; ++j) {
      if (b.coords()[j].is_zero()) continue;
      const Q ab = a.coords()[i] * b.coords()[j];
      for (std::size_t k = 0; k < kJ; ++k) {
        const Q& t = trilinear_[(i * kJ + j) * kJ + k];
        if (!t.is_zero() && !c.coords()[k].is_zero()) s += ab * t * c.coords()[k];
      }
    }
  }
  return s;
}

Q CubicData::trace(const AlbertElement& a) const {
  const AlbertElement one = AlbertElement::identity();
  return norm(one, one, a) * Q(3);
}

Q CubicData::s_form(const AlbertElement& a, const AlbertElement& b) const {
  return norm(a, b, AlbertElement::identity()) * Q(6);
}

Q CubicData::pairing(const AlbertElement& a, const AlbertElement& b) const {
  Q s;
  for (std::size_t i = 0; i < kJ; ++i) {
    if (a.coords()[i].is_zero()) continue;
    for (std::size_t j = 0; j < kJ; ++j)
      if (!gram_(i, j).is_zero() && !b.coords()[j].is_zero()) s += a.coords()[i] * gram_(i, j) * b.coords()[j];
  }
  return s;
}

AlbertElement CubicData::cross(const AlbertElement& a, const AlbertElement& b) const {
  Vec<Q> out(kJ);
  for (std::size_t i = 0; i < kJ; ++i) {
    if (a.coords()[i].is_zero()) continue;
    for (std::size_t j = 0; j < kJ; ++j) {
      if (b.coords()[j].is_zero()) continue;
      const Q ab = a.coords()[i] * b.coords()[j];
      for (const auto& [k, v] : cross_table_[i][j]) out[k] += ab * v;
    }
  }
  return AlbertElement(std::move(out));
}

AlbertElement CubicData::sharp(const AlbertElement& a) const { return cross(a, a).scaled(rational(1, 2)); }

AlbertElement CubicData::jordan_product(const AlbertElement& a, const AlbertElement& b) const {
  return (cross(a, b) + b.scaled(trace(a)) + a.scaled(trace(b)) - AlbertElement::identity().scaled(s_form(a, b)))
      .scaled(rational(1, 2));
}

Matrix<Q> CubicData::adjoint(const Matrix<Q>& phi) const {
  // (φ*B, C) = (B, φC): φ* = G⁻¹ φᵗ G.
  return gram_inverse_ * phi.transpose() * gram_;
}

AlbertElement CubicData::adjoint_apply(const Matrix<Q>& phi, const AlbertElement& b) const {
  if (is_zero_vec(b.coords())) return AlbertElement();
  return AlbertElement(gram_inverse_ * (phi.transpose() * (gram_ * b.coords())));
}

const std::vector<Matrix<Q>>& CubicData::structure_algebra() const {
  static const std::vector<Matrix<Q>> basis = [this] {
    // Unknown φ(l, a) at l·27 + a; N(φe_i, e_j, e_k) + N(e_i, φe_j, e_k) + N(e_i, e_j, φe_k) = 0.
    Echelon<Q> eq(kJ * kJ);
    for (std::size_t i = 0; i < kJ; ++i)
      for (std::size_t j = i; j < kJ; ++j)
        for (std::size_t k = j; k < kJ; ++k) {
          Vec<Q> row(kJ * kJ);
          bool any = false;
          for (std::size_t l = 0; l < kJ; ++l) {
            const Q& t1 = trilinear_[(l * kJ + j) * kJ + k];
            const Q& t2 = trilinear_[(i * kJ + l) * kJ + k];
            const Q& t3 = trilinear_[(i * kJ + j) * kJ + l];
            if (!t1.is_zero()) row[l * kJ + i] += t1, any = true;
            if (!t2.is_zero()) row[l * kJ + j] += t2, any = true;
            if (!t3.is_zero()) row[l * kJ + k] += t3, any = true;
          }
          if (any) eq.insert(std::move(row));
        }
    std::vector<Matrix<Q>> out;
    for (const auto& v : eq.complement_kernel()) {
      Matrix<Q> phi(kJ, kJ);
      for (std::size_t l = 0; l < kJ; ++l)
        for (std::size_t a = 0; a < kJ; ++a) phi(l, a) = v[l * kJ + a];
      out.push_back(std::move(phi));
    }
    return out;
  }();
  return basis;
}

FreudenthalElement FreudenthalElement::from_coords(const Vec<Q>& v) {
  if (v.size() != kDim) throw DimensionMismatch("FreudenthalElement");
  FreudenthalElement x;
  x.alpha = v[0];
  x.a = AlbertElement(Vec<Q>(v.begin() + 1, v.begin() + 1 + kJ));
  x.b = AlbertElement(Vec<Q>(v.begin() + 1 + kJ, v.begin() + 1 + 2 * kJ));
  x.beta = v[kDim - 1];
  return x;
}

FreudenthalElement FreudenthalElement::unit(std::size_t k) {
  Vec<Q> v(kDim);
  v.at(k) = Q(1);
  return from_coords(v);
}

Vec<Q> FreudenthalElement::coords() const {
  Vec<Q> v;
  v.reserve(kDim);
  v.push_back(alpha);
  v.insert(v.end(), a.coords().begin(), a.coords().end());
  v.insert(v.end(), b.coords().begin(), b.coords().end());
  v.push_back(beta);
  return v;
}

FreudenthalElement FreudenthalElement::operator+(const FreudenthalElement& o) const {
  return {alpha + o.alpha, a + o.a, b + o.b, beta + o.beta};
}

FreudenthalElement FreudenthalElement::scaled(const Q& c) const {
  return {alpha * c, a.scaled(c), b.scaled(c), beta * c};
}

E7Element E7Element::operator+(const E7Element& o) const { return {phi + o.phi, x + o.x, y + o.y, nu + o.nu}; }

E7Element E7Element::scaled(const Q& c) const { return {phi.scaled(c), x.scaled(c), y.scaled(c), nu * c}; }

Q symplectic(const FreudenthalElement& x, const FreudenthalElement& y) {
  const auto& cd = CubicData::albert();
  return x.alpha * y.beta - x.beta * y.alpha + cd.pairing(x.a, y.b) - cd.pairing(x.b, y.a);
}

FreudenthalElement e7_act(const E7Element& g, const FreudenthalElement& x) {
  const auto& cd = CubicData::albert();
  const Q third_nu = g.nu * rational(1, 3);
  const AlbertElement phi_a(g.phi * x.a.coords());
  const AlbertElement phi_star_b = cd.adjoint_apply(g.phi, x.b);
  FreudenthalElement r;
  r.alpha = x.alpha * g.nu + cd.pairing(g.x, x.b);
  r.a = phi_a - x.a.scaled(third_nu) + cd.cross(g.y, x.b) + g.x.scaled(x.beta);
  r.b = x.b.scaled(third_nu) - phi_star_b + cd.cross(g.x, x.a) + g.y.scaled(x.alpha);
  r.beta = cd.pairing(g.y, x.a) - x.beta * g.nu;
  return r;
}

Matrix<Q> e7_matrix(const E7Element& g) {
  Matrix<Q> m(FreudenthalElement::kDim, FreudenthalElement::kDim);
  for (std::size_t c = 0; c < FreudenthalElement::kDim; ++c) {
    const Vec<Q> col = e7_act(g, FreudenthalElement::unit(c)).coords();
    for (std::size_t r = 0; r < FreudenthalElement::kDim; ++r) m(r, c) = col[r];
  }
  return m;
}

Matrix<Q> albert_vee(const AlbertElement& a, const AlbertElement& b) {
  const auto& cd = CubicData::albert();
  Matrix<Q> m(kJ, kJ);
  if (is_zero_vec(a.coords()) || is_zero_vec(b.coords())) return m;
  const Q ab = cd.pairing(a, b) * rational(1, 6);
  for (std::size_t c = 0; c < kJ; ++c) {
    const AlbertElement e = AlbertElement::unit(c);
    const AlbertElement col =
        a.scaled(cd.pairing(b, e) * rational(1, 2)) + e.scaled(ab) - cd.cross(b, cd.cross(a, e)).scaled(rational(1, 2));
    for (std::size_t r = 0; r < kJ; ++r) m(r, c) = col.coords()[r];
  }
  return m;
}

E7Element freudenthal_product(const FreudenthalElement& x, const FreudenthalElement& y) {
  // x = (α A; B β), y = (γ C; D δ).
  const auto& cd = CubicData::albert();
  E7Element g;
  g.phi = (albert_vee(x.a, y.b) + albert_vee(y.a, x.b)).scaled(rational(-1, 2));
  g.x = (cd.cross(x.b, y.b) - y.a.scaled(x.alpha) - x.a.scaled(y.alpha)).scaled(rational(-1, 4));
  g.y = (cd.cross(x.a, y.a) - y.b.scaled(x.beta) - x.b.scaled(y.beta)).scaled(rational(1, 4));
  g.nu = (cd.pairing(x.a, y.b) + cd.pairing(y.a, x.b) - (x.alpha * y.beta + x.beta * y.alpha) * Q(3)) *
         rational(1, 8);
  return g;
}

FreudenthalElement paracomplex(const FreudenthalElement& x) {
  return {x.alpha, x.a, x.b.scaled(Q(-1)), -x.beta};
}

FreudenthalElement e8_fts_product(const FreudenthalElement& x, const FreudenthalElement& y,
                                  const FreudenthalElement& z, const FreudenthalConstants& c) {
  const FreudenthalElement iy = paracomplex(y);
  return e7_act(freudenthal_product(x, iy), z).scaled(-c.c1) + z.scaled(-c.c2 * symplectic(x, iy));
}

}  // namespace kantor
