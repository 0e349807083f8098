#include "kantor/kts.hpp"

#include <array>
#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>
#include <sstream>

#include "kantor/parallel.hpp"

namespace kantor {

struct TripleSystem::Cache {
  BasisRule rule;
  std::once_flag once;
  Tensor tensor;
};

TripleSystem::TripleSystem() : cache_(std::make_shared<Cache>()) {
  std::call_once(cache_->once, [] {});
}

TripleSystem::TripleSystem(std::string id, std::size_t dim, BasisRule rule)
    : id_(std::move(id)), dim_(dim), cache_(std::make_shared<Cache>()) {
  cache_->rule = std::move(rule);
}

TripleSystem TripleSystem::from_tensor(std::string id, std::size_t dim, Tensor tensor) {
  if (tensor.size() != dim * dim * dim) throw DimensionMismatch("TripleSystem::from_tensor");
  for (const auto& t : tensor)
    if (t.dim() != dim) throw DimensionMismatch("TripleSystem::from_tensor entry");
  TripleSystem v;
  v.id_ = std::move(id);
  v.dim_ = dim;
  v.cache_ = std::make_shared<Cache>();
  auto shared = std::make_shared<Tensor>(std::move(tensor));
  v.cache_->rule = [shared, dim](std::size_t i, std::size_t j, std::size_t k) {
    return (*shared)[(i * dim + j) * dim + k];
  };
  return v;
}

TripleSystem TripleSystem::renamed(std::string id) const {
  TripleSystem v = *this;
  v.id_ = std::move(id);
  return v;
}

const Tensor& TripleSystem::tensor() const {
  std::call_once(cache_->once, [this] {
    const std::size_t n = dim_;
    Tensor t(n * n * n, SV(n));
    parallel_for(n, [&](std::size_t i) {
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          SV value = cache_->rule(i, j, k);
          if (value.dim() != n) throw DimensionMismatch("basis rule returned a vector of the wrong size");
          t[(i * n + j) * n + k] = std::move(value);
        }
    });
    cache_->tensor = std::move(t);
  });
  return cache_->tensor;
}

namespace {

template <class S>
std::vector<uint32_t> support(const Vec<S>& x) {
  std::vector<uint32_t> s;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!x[k].is_zero()) s.push_back(static_cast<uint32_t>(k));
  return s;
}

template <class S>
Vec<S> contract(const std::vector<SparseVector<S>>& t, std::size_t n, const Vec<S>& x, const Vec<S>& y,
                const Vec<S>& z) {
  Vec<S> out(n);
  auto sx = support(x), sy = support(y), sz = support(z);
  for (uint32_t i : sx)
    for (uint32_t j : sy) {
      S xy = x[i] * y[j];
      const std::size_t base = (i * n + j) * n;
      for (uint32_t k : sz) {
        const auto& e = t[base + k];
        if (e.is_zero()) continue;
        S c = xy * z[k];
        for (const auto& [l, w] : e) out[l] += c * w;
      }
    }
  return out;
}

template <class S>
Vec<S> sub(Vec<S> a, const Vec<S>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!b[k].is_zero()) a[k] -= b[k];
  return a;
}

template <class S>
Vec<S> add(Vec<S> a, const Vec<S>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!b[k].is_zero()) a[k] += b[k];
  return a;
}

/// 0 when both axioms hold at (u, v, x, y, z), else the failing axiom.
template <class S>
int axiom_failure(const std::vector<SparseVector<S>>& t, std::size_t n, const Vec<S>& u, const Vec<S>& v,
                  const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) {
  auto p = [&](const Vec<S>& a, const Vec<S>& b, const Vec<S>& c) { return contract(t, n, a, b, c); };
  Vec<S> lhs = p(u, v, p(x, y, z));
  Vec<S> rhs = sub(p(p(u, v, x), y, z), p(x, p(v, u, y), z));
  rhs = add(std::move(rhs), p(x, y, p(u, v, z)));
  if (lhs != rhs) return 1;
  Vec<S> w = sub(p(u, x, v), p(v, x, u));
  Vec<S> lhs2 = sub(p(w, z, y), p(y, z, w));
  Vec<S> a = p(y, x, u), b = p(y, x, v);
  Vec<S> rhs2 = sub(p(a, z, v), p(v, z, a));
  rhs2 = sub(std::move(rhs2), sub(p(b, z, u), p(u, z, b)));
  if (lhs2 != rhs2) return 2;
  return 0;
}

std::optional<std::vector<SparseVector<GaussInt>>> scaled_integer_tensor(const Tensor& t) {
  mpz_class l = 1;
  for (const auto& e : t)
    for (const auto& [k, c] : e) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), denominator_lcm(c).get_mpz_t());
  try {
    std::vector<SparseVector<GaussInt>> out;
    out.reserve(t.size());
    for (const auto& e : t) {
      SparseVector<GaussInt> v(e.dim());
      for (const auto& [k, c] : e) v.push(k, scaled_to_gauss_int(c, l));
      out.push_back(std::move(v));
    }
    return out;
  } catch (const IntegerOverflow&) {
    return std::nullopt;
  }
}

std::optional<std::vector<SparseVector<Fp>>> mod_p_tensor(const Tensor& t) {
  try {
    std::vector<SparseVector<Fp>> out;
    out.reserve(t.size());
    for (const auto& e : t) {
      SparseVector<Fp> v(e.dim());
      for (const auto& [k, c] : e) {
        Fp r = reduce_mod_p(c);
        if (!r.is_zero()) v.push(k, r);
      }
      out.push_back(std::move(v));
    }
    return out;
  } catch (const BadReduction&) {
    return std::nullopt;
  }
}

Vec<GaussInt> random_vector(Rng& rng, std::size_t n) {
  Vec<GaussInt> v(n);
  for (auto& x : v) {
    long long re = rng.uniform(-3, 3);
    long long im = rng.uniform(-3, 3);
    x = GaussInt(re, im);
  }
  return v;
}

Vec<Q> to_q(const Vec<GaussInt>& v) {
  Vec<Q> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].to_q();
  return out;
}

Vec<Q> unit_dense(std::size_t n, std::size_t k) {
  Vec<Q> v(n);
  v[k] = Q(1);
  return v;
}

std::string tuple_text(const std::vector<std::size_t>& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k];
  os << ")";
  return os.str();
}

}  // namespace

Vec<Q> TripleSystem::product(const Vec<Q>& x, const Vec<Q>& y, const Vec<Q>& z) const {
  if (x.size() != dim_ || y.size() != dim_ || z.size() != dim_) throw DimensionMismatch("TripleSystem::product");
  return contract(tensor(), dim_, x, y, z);
}

SV TripleSystem::product(const SV& x, const SV& y, const SV& z) const {
  if (x.dim() != dim_ || y.dim() != dim_ || z.dim() != dim_) throw DimensionMismatch("TripleSystem::product");
  const Tensor& t = tensor();
  Accumulator<Q> acc(dim_);
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      Q ab = a * b;
      for (const auto& [k, c] : z) {
        const auto& e = t[(i * dim_ + j) * dim_ + k];
        if (!e.is_zero()) acc.add_scaled(ab * c, e);
      }
    }
  return acc.take();
}

bool TripleSystem::same_tensor(const TripleSystem& o) const {
  return dim_ == o.dim_ && tensor() == o.tensor();
}

TripleSystem zero_system(std::size_t dim, std::string id) {
  return TripleSystem(std::move(id), dim, [dim](std::size_t, std::size_t, std::size_t) { return SV(dim); });
}

TripleSystem direct_sum(const TripleSystem& a, const TripleSystem& b) {
  const std::size_t na = a.dim(), n = a.dim() + b.dim();
  return TripleSystem(a.id() + "+" + b.id(), n, [a, b, na, n](std::size_t i, std::size_t j, std::size_t k) {
    SV out(n);
    if (i < na && j < na && k < na) {
      for (const auto& [l, c] : a.basis_product(i, j, k)) out.push(l, c);
    } else if (i >= na && j >= na && k >= na) {
      for (const auto& [l, c] : b.basis_product(i - na, j - na, k - na)) out.push(static_cast<uint32_t>(l + na), c);
    }
    return out;
  });
}

AxiomReport check_axioms(const TripleSystem& v, CheckMode mode, Sampling sampling) {
  const std::size_t n = v.dim();
  const Tensor& t = v.tensor();
  AxiomReport report;
  report.mode = mode;
  auto integer = scaled_integer_tensor(t);

  std::mutex mu;
  std::size_t first_bad = SIZE_MAX;
  int bad_axiom = 0;
  auto record = [&](std::size_t where, int axiom) {
    std::lock_guard<std::mutex> lock(mu);
    if (where < first_bad) {
      first_bad = where;
      bad_axiom = axiom;
    }
  };

  if (mode == CheckMode::Exhaustive) {
    const std::size_t total = n * n * n * n * n;
    report.tuples_checked = total;
    parallel_for(n, [&](std::size_t u) {
      Vec<Q> eu = unit_dense(n, u);
      for (std::size_t w = 0; w < n * n * n * n; ++w) {
        std::size_t vv = w / (n * n * n), x = (w / (n * n)) % n, y = (w / n) % n, z = w % n;
        int f = axiom_failure(t, n, eu, unit_dense(n, vv), unit_dense(n, x), unit_dense(n, y), unit_dense(n, z));
        if (f != 0) {
          record(u * n * n * n * n + w, f);
          return;
        }
      }
    });
    if (first_bad != SIZE_MAX) {
      std::vector<std::size_t> tuple(5);
      std::size_t rem = first_bad;
      for (int k = 4; k >= 0; --k) {
        tuple[k] = rem % n;
        rem /= n;
      }
      report.ok = false;
      report.failed_axiom = bad_axiom;
      report.witness = tuple;
      report.message = "axiom (" + std::string(bad_axiom == 1 ? "i" : "ii") + ") fails at basis tuple " +
                       tuple_text(tuple);
    }
    return report;
  }

  Rng rng(sampling.seed);
  std::vector<std::array<Vec<GaussInt>, 5>> samples(sampling.count);
  for (auto& s : samples)
    for (auto& vec : s) vec = random_vector(rng, n);
  report.tuples_checked = samples.size();
  parallel_for(samples.size(), [&](std::size_t k) {
    const auto& s = samples[k];
    int f = -1;
    if (integer) {
      try {
        f = axiom_failure(*integer, n, s[0], s[1], s[2], s[3], s[4]);
      } catch (const IntegerOverflow&) {
        f = -1;
      }
    }
    if (f < 0) f = axiom_failure(t, n, to_q(s[0]), to_q(s[1]), to_q(s[2]), to_q(s[3]), to_q(s[4]));
    if (f != 0) record(k, f);
  });
  if (first_bad != SIZE_MAX) {
    report.ok = false;
    report.failed_axiom = bad_axiom;
    report.witness = {first_bad};
    report.message = "axiom (" + std::string(bad_axiom == 1 ? "i" : "ii") + ") fails at sample " +
                     std::to_string(first_bad) + " (seed " + std::to_string(sampling.seed) + ")";
  }
  return report;
}

AxiomReport check_axioms(const TripleSystem& v, Sampling sampling) {
  return check_axioms(v, v.dim() <= 8 ? CheckMode::Exhaustive : CheckMode::Sampled, sampling);
}

void require_axioms(const TripleSystem& v, Sampling sampling) {
  auto r = check_axioms(v, sampling);
  if (!r.ok) throw AxiomViolation(r.failed_axiom, r.witness, v.id() + ": " + r.message);
}

Matrix<Q> kantor_tensor(const TripleSystem& v, const Vec<Q>& x, const Vec<Q>& y) {
  const std::size_t n = v.dim();
  Matrix<Q> m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Vec<Q> ek = unit_dense(n, k);
    Vec<Q> col = sub(v.product(x, ek, y), v.product(y, ek, x));
    for (std::size_t r = 0; r < n; ++r) m(r, k) = col[r];
  }
  return m;
}

bool is_jordan(const TripleSystem& v) {
  const std::size_t n = v.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t y = x + 1; y < n; ++y)
        if (v.basis_product(x, z, y) != v.basis_product(y, z, x)) return false;
  return true;
}

namespace {

/// Rows of the linear map w ↦ ((e_a w e_b))_{a,b}, one row per output coordinate.
template <class S>
bool insert_center_rows(const std::vector<SparseVector<S>>& t, std::size_t n, Echelon<S>& ech) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<Vec<S>> rows(n, Vec<S>(n));
      bool any = false;
      for (std::size_t w = 0; w < n; ++w)
        for (const auto& [l, c] : t[(a * n + w) * n + b]) {
          rows[l][w] = c;
          any = true;
        }
      if (!any) continue;
      for (auto& r : rows)
        if (!is_zero_vec(r)) {
          ech.insert(std::move(r));
          if (ech.full()) return true;
        }
    }
  return ech.full();
}

}  // namespace

Subspace center(const TripleSystem& v) {
  const std::size_t n = v.dim();
  Subspace z{n, {}};
  if (auto tp = mod_p_tensor(v.tensor())) {
    Echelon<Fp> ech(n);
    if (insert_center_rows(*tp, n, ech)) return z;
  }
  Echelon<Q> ech(n);
  if (insert_center_rows(v.tensor(), n, ech)) return z;
  z.basis = ech.complement_kernel();
  return z;
}

bool is_centerless(const TripleSystem& v) { return center(v).dim() == 0; }

namespace {

/// Products generated by w for the given kind, as (a, b) ranges over basis pairs.
template <class S, class F>
void for_each_generated(const std::vector<SparseVector<S>>& t, std::size_t n, const Vec<S>& w, IdealKind kind,
                        F&& emit) {
  auto sw = support(w);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // (e_a e_b w)
      {
        Vec<S> out(n);
        bool any = false;
        for (uint32_t k : sw)
          for (const auto& [l, c] : t[(a * n + b) * n + k]) {
            out[l] += w[k] * c;
            any = true;
          }
        if (any && !emit(std::move(out))) return;
      }
      if (kind == IdealKind::LeftIdeal) continue;
      // (w e_a e_b)
      {
        Vec<S> out(n);
        bool any = false;
        for (uint32_t k : sw)
          for (const auto& [l, c] : t[(k * n + a) * n + b]) {
            out[l] += w[k] * c;
            any = true;
          }
        if (any && !emit(std::move(out))) return;
      }
      if (kind == IdealKind::KIdeal) continue;
      // (e_a w e_b)
      {
        Vec<S> out(n);
        bool any = false;
        for (uint32_t k : sw)
          for (const auto& [l, c] : t[(a * n + k) * n + b]) {
            out[l] += w[k] * c;
            any = true;
          }
        if (any && !emit(std::move(out))) return;
      }
    }
}

template <class S>
void saturate(const std::vector<SparseVector<S>>& t, std::size_t n, Echelon<S>& ech, std::deque<Vec<S>> queue,
              IdealKind kind, bool stop_when_full) {
  while (!queue.empty() && !(stop_when_full && ech.full())) {
    Vec<S> w = std::move(queue.front());
    queue.pop_front();
    for_each_generated(t, n, w, kind, [&](Vec<S> out) {
      if (is_zero_vec(out)) return true;
      if (ech.insert(out)) queue.push_back(std::move(out));
      return !(stop_when_full && ech.full());
    });
  }
}

Echelon<Q> echelon_of(const Subspace& s) {
  Echelon<Q> e(s.ambient);
  for (const auto& b : s.basis) e.insert(b);
  return e;
}

}  // namespace

Subspace ideal_closure(const TripleSystem& v, const std::vector<Vec<Q>>& seeds, IdealKind kind) {
  const std::size_t n = v.dim();
  Echelon<Q> ech(n);
  std::deque<Vec<Q>> queue;
  for (const auto& s : seeds) {
    if (s.size() != n) throw DimensionMismatch("ideal_closure seed");
    if (ech.insert(s)) queue.push_back(s);
  }
  saturate(v.tensor(), n, ech, std::move(queue), kind, false);
  return Subspace{n, ech.rows()};
}

Subspace ideal_closure(const TripleSystem& v, const SV& seed, IdealKind kind) {
  return ideal_closure(v, std::vector<Vec<Q>>{seed.to_dense()}, kind);
}

bool closure_is_everything(const TripleSystem& v, const SV& seed, IdealKind kind) {
  const std::size_t n = v.dim();
  if (seed.is_zero()) return n == 0;
  if (auto tp = mod_p_tensor(v.tensor())) {
    try {
      Vec<Fp> s(n);
      for (const auto& [k, c] : seed) s[k] = reduce_mod_p(c);
      Echelon<Fp> ech(n);
      std::deque<Vec<Fp>> queue;
      if (ech.insert(s)) queue.push_back(s);
      saturate(*tp, n, ech, std::move(queue), kind, true);
      if (ech.full()) return true;
    } catch (const BadReduction&) {
    }
  }
  Echelon<Q> ech(n);
  std::deque<Vec<Q>> queue;
  Vec<Q> s = seed.to_dense();
  if (ech.insert(s)) queue.push_back(s);
  saturate(v.tensor(), n, ech, std::move(queue), kind, true);
  return ech.full();
}

bool is_ideal_of_kind(const TripleSystem& v, const Subspace& s, IdealKind kind) {
  Echelon<Q> e = echelon_of(s);
  bool ok = true;
  for (const auto& w : s.basis) {
    for_each_generated(v.tensor(), v.dim(), w, kind, [&](Vec<Q> out) {
      if (!e.contains(std::move(out))) ok = false;
      return ok;
    });
    if (!ok) return false;
  }
  return true;
}

namespace {

bool all_closures_full(const TripleSystem& v, IdealKind kind) {
  const std::size_t n = v.dim();
  if (n == 0) return false;
  std::vector<char> full(n, 0);
  parallel_for(n, [&](std::size_t i) { full[i] = closure_is_everything(v, v.unit(i), kind) ? 1 : 0; });
  for (char f : full)
    if (!f) return false;
  return true;
}

}  // namespace

bool is_simple(const TripleSystem& v) { return all_closures_full(v, IdealKind::Ideal); }
bool is_k_simple(const TripleSystem& v) { return all_closures_full(v, IdealKind::KIdeal); }
bool is_irreducible(const TripleSystem& v) { return all_closures_full(v, IdealKind::LeftIdeal); }

bool is_p_ideal(const TripleSystem& v, const PIdeal& p) {
  const std::size_t n = v.dim();
  const Tensor& t = v.tensor();
  Echelon<Q> plus = echelon_of(p.plus), minus = echelon_of(p.minus);
  // (I^e V V) + (V V I^e) ⊂ I^e and (V I^{-e} V) ⊂ I^e.
  auto check = [&](const Subspace& same, const Subspace& other, const Echelon<Q>& target) {
    for (const auto& w : same.basis) {
      bool ok = true;
      for_each_generated(t, n, w, IdealKind::KIdeal, [&](Vec<Q> out) {
        ok = target.contains(std::move(out));
        return ok;
      });
      if (!ok) return false;
    }
    for (const auto& w : other.basis)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (!target.contains(v.product(unit_dense(n, a), w, unit_dense(n, b)))) return false;
    return true;
  };
  return check(p.plus, p.minus, plus) && check(p.minus, p.plus, minus);
}

PIdeal p_ideal_from_K_ideal(const TripleSystem& v, const Subspace& ideal) {
  if (!is_ideal_of_kind(v, ideal, IdealKind::KIdeal)) throw NotAKIdeal("subspace is not a K-ideal");
  const std::size_t n = v.dim();
  Echelon<Q> in = echelon_of(ideal);
  // v ∈ I^- iff the class of (e_a v e_b) modulo I vanishes for all a, b.
  Echelon<Q> rows(n);
  for (std::size_t a = 0; a < n && !rows.full(); ++a)
    for (std::size_t b = 0; b < n && !rows.full(); ++b) {
      std::vector<Vec<Q>> reduced(n);
      for (std::size_t j = 0; j < n; ++j) {
        Vec<Q> r = v.basis_product(a, j, b).to_dense();
        in.reduce(r);
        reduced[j] = std::move(r);
      }
      for (std::size_t l = 0; l < n && !rows.full(); ++l) {
        Vec<Q> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = reduced[j][l];
        if (!is_zero_vec(row)) rows.insert(std::move(row));
      }
    }
  PIdeal p{Subspace{n, in.rows()}, Subspace{n, rows.complement_kernel()}};
  if (!is_p_ideal(v, p)) throw std::logic_error("associated pair fails the P-ideal inclusions");
  return p;
}

namespace {

SV apply_matrix(const Matrix<Q>& m, const SV& x) {
  Accumulator<Q> acc(m.rows());
  for (const auto& [j, c] : x)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m(r, j).is_zero()) acc.add(static_cast<uint32_t>(r), c * m(r, j));
  return acc.take();
}

}  // namespace

bool is_automorphism(const TripleSystem& v, const Matrix<Q>& phi) {
  const std::size_t n = v.dim();
  if (phi.rows() != n || phi.cols() != n) throw DimensionMismatch("is_automorphism");
  std::vector<SV> images(n);
  for (std::size_t j = 0; j < n; ++j) images[j] = apply_matrix(phi, v.unit(j));
  std::vector<char> ok(n, 1);
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n && ok[i]; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (apply_matrix(phi, v.basis_product(i, j, k)) != v.product(images[i], images[j], images[k])) {
          ok[i] = 0;
          break;
        }
  });
  for (char f : ok)
    if (!f) return false;
  return true;
}

TripleSystem modify(const TripleSystem& v, const Matrix<Q>& phi, std::string id) {
  const std::size_t n = v.dim();
  if (phi.rows() != n || phi.cols() != n) throw DimensionMismatch("modify");
  if (phi * phi != Matrix<Q>::identity(n)) throw NotInvolutive("endomorphism does not square to the identity");
  if (!is_automorphism(v, phi)) throw NotAnAutomorphism("endomorphism does not preserve the product");
  std::vector<SV> images(n);
  for (std::size_t j = 0; j < n; ++j) images[j] = apply_matrix(phi, v.unit(j));
  if (id.empty()) id = v.id() + "-modified";
  return TripleSystem(std::move(id), n, [v, images, n](std::size_t i, std::size_t j, std::size_t k) {
    Accumulator<Q> acc(n);
    for (const auto& [m, c] : images[j]) acc.add_scaled(c, v.basis_product(i, m, k));
    return acc.take();
  });
}

TripleSystem lts_of(const GradedLieAlgebra& g, const Involution& sigma) {
  if (sigma.dim() != g.dim()) throw DimensionMismatch("lts_of");
  std::vector<std::size_t> idx = g.indices_of_degree(-1);
  for (std::size_t k : g.indices_of_degree(1)) idx.push_back(k);
  const std::size_t n = idx.size();
  std::vector<long> local(g.dim(), -1);
  for (std::size_t a = 0; a < n; ++a) local[idx[a]] = static_cast<long>(a);
  return TripleSystem("lts", n, [g, idx, local, n](std::size_t a, std::size_t b, std::size_t c) {
    SV r = g.bracket(g.bracket_basis(idx[a], idx[b]), g.unit(idx[c]));
    Accumulator<Q> out(n);
    for (const auto& [k, x] : r) {
      if (local[k] < 0) throw DegreeViolation("bracket leaves g_{-1} + g_1");
      out.add(static_cast<uint32_t>(local[k]), x);
    }
    return out.take();
  });
}

CheckReport check_lts_axioms(const TripleSystem& t, Sampling sampling) {
  const std::size_t n = t.dim();
  CheckReport rep;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (t.basis_product(x, y, z) != -t.basis_product(y, x, z))
          return {false, "antisymmetry fails", {x, y, z}};
        if (!(t.basis_product(x, y, z) + t.basis_product(y, z, x) + t.basis_product(z, x, y)).is_zero())
          return {false, "cyclic identity fails", {x, y, z}};
      }
  const Tensor& tt = t.tensor();
  auto derivation_ok = [&](const Vec<Q>& x, const Vec<Q>& y, const Vec<Q>& z, const Vec<Q>& w, const Vec<Q>& u) {
    auto p = [&](const Vec<Q>& a, const Vec<Q>& b, const Vec<Q>& c) { return contract(tt, n, a, b, c); };
    Vec<Q> lhs = p(x, y, p(z, w, u));
    Vec<Q> rhs = add(add(p(p(x, y, z), w, u), p(z, p(x, y, w), u)), p(z, w, p(x, y, u)));
    return lhs == rhs;
  };
  if (n <= 8) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t d = 0; d < n; ++d)
            for (std::size_t e = 0; e < n; ++e)
              if (!derivation_ok(unit_dense(n, a), unit_dense(n, b), unit_dense(n, c), unit_dense(n, d),
                                 unit_dense(n, e)))
                return {false, "derivation identity fails", {a, b, c, d, e}};
    return rep;
  }
  Rng rng(sampling.seed);
  for (std::size_t k = 0; k < sampling.count; ++k) {
    std::array<Vec<Q>, 5> s;
    for (auto& vec : s) vec = to_q(random_vector(rng, n));
    if (!derivation_ok(s[0], s[1], s[2], s[3], s[4])) return {false, "derivation identity fails at sample", {k}};
  }
  return rep;
}

}  // namespace kantor
