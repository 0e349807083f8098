#include "kantor/exterior.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace kantor {

int degree(Mask m) { return std::popcount(m); }

int shuffle_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Each element of a must pass the elements of b that are smaller than it.
  int swaps = 0;
  for (Mask rest = a; rest; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    swaps += std::popcount(b & ((Mask{1} << i) - 1));
  }
  return swaps % 2 == 0 ? 1 : -1;
}

Form Form::basis(std::size_t n, Mask m, Q c) {
  Form f(n);
  f.add(m, c);
  return f;
}

Form Form::scalar(std::size_t n, Q c) { return basis(n, 0, std::move(c)); }

Q Form::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Q() : it->second;
}

void Form::add(Mask m, const Q& c) {
  if (c.is_zero()) return;
  if (n_ < 32 && (m >> n_) != 0) throw std::invalid_argument("Form: index out of range");
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Form Form::component(int k) const {
  Form out(n_);
  for (const auto& [m, c] : terms_)
    if (degree(m) == k) out.terms_.emplace(m, c);
  return out;
}

int Form::homogeneous_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    if (d == -1) d = degree(m);
    else if (d != degree(m)) return -1;
  }
  return d;
}

Form& Form::operator+=(const Form& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Form Form::operator*(const Q& c) const {
  Form out(n_);
  if (c.is_zero()) return out;
  for (const auto& [m, x] : terms_) out.terms_.emplace(m, x * c);
  return out;
}

Form wedge(const Form& a, const Form& b) {
  Form out(std::max(a.n(), b.n()));
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const int s = shuffle_sign(ma, mb);
      if (s != 0) out.add(ma | mb, s > 0 ? ca * cb : -(ca * cb));
    }
  return out;
}

Form contract(const Form& by, const Form& target) {
  Form out(std::max(by.n(), target.n()));
  for (const auto& [mi, ci] : by.terms())
    for (const auto& [mj, cj] : target.terms()) {
      if ((mi & mj) != mi) continue;
      const int s = shuffle_sign(mi, mj & ~mi);
      out.add(mj & ~mi, s > 0 ? ci * cj : -(ci * cj));
    }
  return out;
}

Q pairing(const Form& a, const Form& b) {
  Q s;
  for (const auto& [m, c] : a.terms()) {
    auto it = b.terms().find(m);
    if (it != b.terms().end()) s += c * it->second;
  }
  return s;
}

namespace {

/// Replaces index `from` by index `to` in e_m, returning the sign, or 0.
int substitute(Mask m, int from, int to, Mask& result) {
  const Mask without = m & ~(Mask{1} << from);
  if (from != to && (without >> to & 1)) return 0;
  // e_m = s1 e_from ∧ e_rest and e_to ∧ e_rest = s2 e_result.
  const int s1 = shuffle_sign(Mask{1} << from, without);
  const int s2 = shuffle_sign(Mask{1} << to, without);
  result = without | (Mask{1} << to);
  return s1 * s2;
}

}  // namespace

Form act(const Matrix<Q>& a, const Form& x, bool dual) {
  const std::size_t n = a.rows();
  Form out(x.n());
  for (const auto& [m, c] : x.terms())
    for (Mask rest = m; rest; rest &= rest - 1) {
      const int j = std::countr_zero(rest);
      for (std::size_t i = 0; i < n; ++i) {
        // Polyvectors: e_j ↦ Σ_i A(i,j) e_i. Forms: e^j ↦ −Σ_i A(j,i) e^i.
        const Q& entry = dual ? a(j, i) : a(i, j);
        if (entry.is_zero()) continue;
        Mask r;
        const int s = substitute(m, j, static_cast<int>(i), r);
        if (s == 0) continue;
        Q v = entry * c;
        if ((s < 0) != dual) v = -v;
        out.add(r, v);
      }
    }
  return out;
}

Form transform(const Matrix<Q>& g, const Form& x) {
  const std::size_t n = g.rows();
  Form out(x.n());
  for (const auto& [m, c] : x.terms()) {
    Form image = Form::scalar(x.n(), c);
    for (Mask rest = m; rest; rest &= rest - 1) {
      const std::size_t j = std::countr_zero(rest);
      Form column(x.n());
      for (std::size_t i = 0; i < n; ++i) column.add(Mask{1} << i, g(i, j));
      image = wedge(image, column);
    }
    out += image;
  }
  return out;
}

Matrix<Q> bullet(const Form& x, const Form& xi) {
  const std::size_t n = std::max(x.n(), xi.n());
  const int k = x.homogeneous_degree();
  Matrix<Q> out(n, n);
  if (x.is_zero() || xi.is_zero()) return out;
  if (k < 0 || xi.homogeneous_degree() != k) throw std::invalid_argument("bullet: degrees must agree");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // E_ji sends e_i to e_j.
      Matrix<Q> e(n, n);
      e(j, i) = Q(1);
      out(i, j) = pairing(act(e, x, false), xi);
    }
  const Q trace_part = pairing(x, xi) * Q(Rational(k, static_cast<long long>(n)));
  for (std::size_t i = 0; i < n; ++i) out(i, i) -= trace_part;
  return out;
}

Form hodge(const Form& x, const std::vector<int>& signs) {
  const std::size_t n = signs.size();
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  Form out(n);
  for (const auto& [m, c] : x.terms()) {
    int s = shuffle_sign(m, all & ~m);
    for (Mask rest = m; rest; rest &= rest - 1) s *= signs[std::countr_zero(rest)];
    out.add(all & ~m, s > 0 ? c : -c);
  }
  return out;
}

Form hodge(const Form& x) { return hodge(x, std::vector<int>(x.n(), 1)); }

std::vector<Mask> degree_basis(std::size_t n, std::size_t k) {
  std::vector<Mask> out;
  std::vector<std::size_t> idx(k);
  for (std::size_t q = 0; q < k; ++q) idx[q] = q;
  if (k > n) return out;
  while (true) {
    Mask m = 0;
    for (auto i : idx) m |= Mask{1} << i;
    out.push_back(m);
    std::size_t q = k;
    while (q > 0 && idx[q - 1] == n - k + q - 1) --q;
    if (q == 0) break;
    ++idx[q - 1];
    for (std::size_t r = q; r < k; ++r) idx[r] = idx[r - 1] + 1;
  }
  return out;
}

std::vector<Mask> full_basis(std::size_t n) {
  std::vector<Mask> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto part = degree_basis(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

MaskIndex::MaskIndex(std::size_t n, std::vector<Mask> masks)
    : n_(n), masks_(std::move(masks)), position_(std::size_t{1} << n, -1) {
  for (std::size_t k = 0; k < masks_.size(); ++k) position_.at(masks_[k]) = static_cast<int>(k);
}

std::size_t MaskIndex::index(Mask m) const {
  if (m >= position_.size() || position_[m] < 0)
    throw std::invalid_argument("MaskIndex: mask " + std::to_string(m) + " outside the basis");
  return static_cast<std::size_t>(position_[m]);
}

Form MaskIndex::form(const Vec<Q>& coords) const {
  Form f(n_);
  for (std::size_t k = 0; k < coords.size(); ++k) f.add(masks_.at(k), coords[k]);
  return f;
}

Vec<Q> MaskIndex::coordinates(const Form& f) const {
  Vec<Q> out(masks_.size());
  for (const auto& [m, c] : f.terms()) out[index(m)] = c;
  return out;
}

}  // namespace kantor
