#include "kantor/lie.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <mutex>

#include "kantor/parallel.hpp"

namespace kantor {

GradedLieAlgebra::GradedLieAlgebra(std::vector<LieBasisElement> basis)
    : basis_(std::move(basis)), table_(basis_.size()) {}

std::vector<std::size_t> GradedLieAlgebra::indices_of_degree(int p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].degree == p) out.push_back(i);
  return out;
}

std::vector<std::size_t> GradedLieAlgebra::graded_dims() const {
  std::vector<std::size_t> d(5, 0);
  for (const auto& b : basis_)
    if (b.degree >= -2 && b.degree <= 2) ++d[b.degree + 2];
  return d;
}

void GradedLieAlgebra::set_bracket(std::size_t i, std::size_t j, const SV& value) {
  if (value.dim() != dim()) throw DimensionMismatch("set_bracket");
  if (i == j) {
    if (!value.is_zero()) throw std::invalid_argument("[x,x] must vanish");
    return;
  }
  const int d = degree(i) + degree(j);
  for (const auto& [k, c] : value)
    if (degree(k) != d)
      throw DegreeViolation("bracket [" + basis_[i].label + "," + basis_[j].label + "] has a component " +
                            basis_[k].label + " of the wrong degree");
  if (i < j) {
    table_.mutable_upper(i, j) = value;
  } else {
    table_.mutable_upper(j, i) = -value;
  }
}

SV GradedLieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i == j) return SV(dim());
  return i < j ? table_.upper(i, j) : -table_.upper(j, i);
}

SV GradedLieAlgebra::ad(std::size_t a, const SV& v) const {
  Accumulator<Q> acc(dim());
  for (const auto& [b, x] : v) {
    const SV* c;
    int s = table_.lookup(a, b, &c);
    if (s == 0) continue;
    acc.add_scaled(s > 0 ? x : -x, *c);
  }
  return acc.take();
}

SV GradedLieAlgebra::bracket(const SV& x, const SV& y) const {
  Accumulator<Q> acc(dim());
  for (const auto& [a, xa] : x)
    for (const auto& [b, yb] : y) {
      const SV* c;
      int s = table_.lookup(a, b, &c);
      if (s == 0) continue;
      Q coef = xa * yb;
      acc.add_scaled(s > 0 ? coef : -coef, *c);
    }
  return acc.take();
}

SV Involution::apply(const SV& v) const {
  if (v.dim() != dim()) throw DimensionMismatch("Involution::apply");
  Accumulator<Q> acc(dim());
  for (const auto& [j, c] : v) acc.add_scaled(c, images_[j]);
  return acc.take();
}

SparseMatrix<Q> Involution::matrix() const {
  SparseMatrix<Q> cols(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) cols.set_row(j, images_[j]);
  return cols.transpose();
}

bool Subspace::contains(const Vec<Q>& v) const {
  Echelon<Q> e(ambient);
  for (const auto& b : basis) e.insert(b);
  return e.contains(v);
}

namespace {

/// Common denominator of all structure constants (1 if none).
mpz_class table_denominator(const BracketTable<Q>& t) {
  mpz_class l = 1;
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i + 1; j < t.dim(); ++j)
      for (const auto& [k, c] : t.upper(i, j)) {
        mpz_class d = denominator_lcm(c);
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      }
  return l;
}

std::optional<BracketTable<GaussInt>> scaled_integer_table(const BracketTable<Q>& t) {
  try {
    mpz_class d = table_denominator(t);
    return t.convert<GaussInt>([&](const Q& c) { return scaled_to_gauss_int(c, d); });
  } catch (const IntegerOverflow&) {
    return std::nullopt;
  }
}

std::optional<BracketTable<Fp>> mod_p_table(const BracketTable<Q>& t) {
  try {
    return t.convert<Fp>([](const Q& c) { return reduce_mod_p(c); });
  } catch (const BadReduction&) {
    return std::nullopt;
  }
}

template <class S>
bool jacobi_vanishes_at_basis(const BracketTable<S>& t, std::size_t i, std::size_t j, std::size_t k,
                              Accumulator<S>& acc) {
  auto term = [&](std::size_t a, std::size_t b, std::size_t c) {
    const SparseVector<S>* ab;
    int s = t.lookup(a, b, &ab);
    if (s == 0) return;
    for (const auto& [m, v] : *ab) {
      const SparseVector<S>* mc;
      int s2 = t.lookup(m, c, &mc);
      if (s2 == 0) continue;
      acc.add_scaled(s * s2 > 0 ? v : -v, *mc);
    }
  };
  term(i, j, k);
  term(j, k, i);
  term(k, i, j);
  return acc.take().is_zero();
}

template <class S>
Vec<S> jacobiator(const BracketTable<S>& t, const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) {
  Vec<S> a = dense_bracket(t, dense_bracket(t, x, y), z);
  Vec<S> b = dense_bracket(t, dense_bracket(t, y, z), x);
  Vec<S> c = dense_bracket(t, dense_bracket(t, z, x), y);
  for (std::size_t k = 0; k < a.size(); ++k) {
    a[k] += b[k];
    a[k] += c[k];
  }
  return a;
}

Vec<GaussInt> random_gauss_vector(Rng& rng, std::size_t n, long long bound) {
  Vec<GaussInt> v(n);
  for (auto& x : v) {
    long long re = rng.uniform(-bound, bound);
    long long im = rng.uniform(-bound, bound);
    x = GaussInt(re, im);
  }
  return v;
}

Vec<Q> to_q(const Vec<GaussInt>& v) {
  Vec<Q> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].to_q();
  return out;
}

}  // namespace

CheckReport check_jacobi(const GradedLieAlgebra& g, CheckMode mode, Sampling sampling) {
  const std::size_t n = g.dim();
  const auto& tq = g.table();
  auto ti = scaled_integer_table(tq);
  CheckReport report;
  int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
  for (const auto& b : g.basis()) {
    lo = std::min(lo, b.degree);
    hi = std::max(hi, b.degree);
  }

  if (mode == CheckMode::Exhaustive) {
    std::vector<std::vector<std::size_t>> first(n);
    parallel_for(n, [&](std::size_t i) {
      Accumulator<GaussInt> acc_i(n);
      Accumulator<Q> acc_q(n);
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          int d = g.degree(i) + g.degree(j) + g.degree(k);
          if (d < lo || d > hi) continue;
          bool ok;
          bool done = false;
          if (ti) {
            try {
              ok = jacobi_vanishes_at_basis(*ti, i, j, k, acc_i);
              done = true;
            } catch (const IntegerOverflow&) {
              acc_i = Accumulator<GaussInt>(n);
            }
          }
          if (!done) ok = jacobi_vanishes_at_basis(tq, i, j, k, acc_q);
          if (!ok) {
            first[i] = {i, j, k};
            return;
          }
        }
    });
    for (std::size_t i = 0; i < n; ++i)
      if (!first[i].empty()) {
        report.ok = false;
        report.witness = first[i];
        const auto& b = g.basis();
        report.message = "Jacobi fails on (" + b[first[i][0]].label + ", " + b[first[i][1]].label + ", " +
                         b[first[i][2]].label + ")";
        return report;
      }
    return report;
  }

  Rng rng(sampling.seed);
  std::vector<std::array<Vec<GaussInt>, 3>> samples(sampling.count);
  for (auto& s : samples)
    for (auto& v : s) v = random_gauss_vector(rng, n, 3);
  std::vector<char> bad(sampling.count, 0);
  parallel_for(sampling.count, [&](std::size_t s) {
    const auto& [x, y, z] = samples[s];
    if (ti) {
      try {
        bad[s] = !is_zero_vec(jacobiator(*ti, x, y, z));
        return;
      } catch (const IntegerOverflow&) {
      }
    }
    bad[s] = !is_zero_vec(jacobiator(tq, to_q(x), to_q(y), to_q(z)));
  });
  for (std::size_t s = 0; s < sampling.count; ++s)
    if (bad[s]) {
      report.ok = false;
      report.witness = {s};
      report.message = "Jacobi fails on random sample " + std::to_string(s) + " (seed " +
                       std::to_string(sampling.seed) + ")";
      return report;
    }
  return report;
}

void require_jacobi(const GradedLieAlgebra& g, CheckMode mode, Sampling sampling) {
  auto r = check_jacobi(g, mode, sampling);
  if (!r.ok) throw JacobiViolation(r.message, r.witness);
}

CheckReport check_degree_additivity(const GradedLieAlgebra& g) {
  CheckReport r;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      for (const auto& [k, c] : g.table().upper(i, j))
        if (g.degree(k) != g.degree(i) + g.degree(j)) {
          r.ok = false;
          r.witness = {i, j, k};
          r.message = "degree additivity fails for [" + g.basis()[i].label + "," + g.basis()[j].label + "]";
          return r;
        }
  return r;
}

CheckReport check_grading_element(const GradedLieAlgebra& g) {
  CheckReport r;
  if (!g.grading_element()) {
    r.ok = false;
    r.message = "no grading element stored";
    return r;
  }
  const SV& e = *g.grading_element();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    SV lhs = g.bracket(e, g.unit(i));
    SV rhs = SV::unit(g.dim(), static_cast<uint32_t>(i), Q(g.degree(i)));
    if (lhs != rhs) {
      r.ok = false;
      r.witness = {i};
      r.message = "[E,x] != deg(x) x for x = " + g.basis()[i].label;
      return r;
    }
  }
  return r;
}

namespace {

/// Whether the given sparse vectors are linearly independent (mod-p certificate, exact fallback).
bool independent(const std::vector<SV>& vs) {
  if (vs.empty()) return true;
  const std::size_t dim = vs.front().dim();
  bool reducible = true;
  try {
    SparseEchelon<Fp> e(dim);
    for (const auto& v : vs) {
      SparseVector<Fp> w(dim);
      for (const auto& [k, c] : v) w.push(k, reduce_mod_p(c));
      if (!e.insert(w).accepted) {
        reducible = false;
        break;
      }
    }
    if (reducible) return true;
  } catch (const BadReduction&) {
  }
  SparseEchelon<Q> e(dim);
  for (const auto& v : vs)
    if (!e.insert(v).accepted) return false;
  return true;
}

std::size_t span_rank(const std::vector<SV>& vs, std::size_t dim) {
  SparseEchelon<Q> e(dim);
  for (const auto& v : vs) e.insert(v);
  return e.rank();
}

}  // namespace

TransitivityReport check_transitive_fundamental(const GradedLieAlgebra& g) {
  TransitivityReport r;
  auto m1 = g.indices_of_degree(-1);
  auto m2 = g.indices_of_degree(-2);
  std::vector<SV> brackets;
  for (std::size_t a = 0; a < m1.size(); ++a)
    for (std::size_t b = a + 1; b < m1.size(); ++b) {
      SV v = g.bracket_basis(m1[a], m1[b]);
      if (!v.is_zero()) brackets.push_back(std::move(v));
    }
  r.fundamental = span_rank(brackets, g.dim()) == m2.size();

  r.transitive = true;
  const std::size_t n = g.dim();
  int hi = 0;
  for (const auto& b : g.basis()) hi = std::max(hi, b.degree);
  for (int p = 0; p <= hi && r.transitive; ++p) {
    auto gp = g.indices_of_degree(p);
    std::vector<SV> restricted;
    for (std::size_t x : gp) {
      std::vector<typename SV::Entry> entries;
      for (std::size_t b = 0; b < m1.size(); ++b) {
        SV v = g.bracket_basis(x, m1[b]);
        for (const auto& [k, c] : v) entries.emplace_back(static_cast<uint32_t>(b * n + k), c);
      }
      restricted.emplace_back(m1.size() * n, std::move(entries));
    }
    r.transitive = independent(restricted);
  }
  return r;
}

namespace {

template <class S>
std::size_t closure_rank(const BracketTable<S>& t, const Vec<S>& seed, bool stop_when_full, Echelon<S>* out) {
  const std::size_t n = t.dim();
  Echelon<S> ech(n);
  std::deque<Vec<S>> queue;
  if (ech.insert(seed)) queue.push_back(seed);
  while (!queue.empty() && !(stop_when_full && ech.full())) {
    Vec<S> v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t a = 0; a < n; ++a) {
      Vec<S> w = dense_ad(t, a, v);
      if (is_zero_vec(w)) continue;
      if (ech.insert(w)) queue.push_back(std::move(w));
      if (stop_when_full && ech.full()) break;
    }
  }
  std::size_t r = ech.rank();
  if (out) *out = std::move(ech);
  return r;
}

struct ClosureContext {
  const GradedLieAlgebra& g;
  std::optional<BracketTable<Fp>> tp;
  explicit ClosureContext(const GradedLieAlgebra& alg) : g(alg), tp(mod_p_table(alg.table())) {}

  bool full_from(const Vec<Q>& seed) const {
    if (tp) {
      try {
        Vec<Fp> s(seed.size());
        for (std::size_t k = 0; k < seed.size(); ++k) s[k] = reduce_mod_p(seed[k]);
        if (closure_rank<Fp>(*tp, s, true, nullptr) == g.dim()) return true;
      } catch (const BadReduction&) {
      }
    }
    return closure_rank<Q>(g.table(), seed, true, nullptr) == g.dim();
  }
};

}  // namespace

Subspace ideal_closure(const GradedLieAlgebra& g, const SV& seed) {
  Echelon<Q> ech(g.dim());
  closure_rank(g.table(), seed.to_dense(), false, &ech);
  return {g.dim(), ech.rows()};
}

bool ideal_closure_is_everything(const GradedLieAlgebra& g, const SV& seed) {
  return ClosureContext(g).full_from(seed.to_dense());
}

bool is_simple(const GradedLieAlgebra& g, CheckMode mode, SimplicityOptions opt) {
  if (g.dim() == 0) return false;
  ClosureContext ctx(g);
  std::vector<Vec<Q>> seeds;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    int d = g.degree(i);
    if (mode == CheckMode::Exhaustive || d == -2 || d == -1) seeds.push_back(g.unit(i).to_dense());
  }
  if (mode == CheckMode::Sampled) {
    Rng rng(opt.seed);
    for (std::size_t s = 0; s < opt.random_seeds; ++s) seeds.push_back(to_q(random_gauss_vector(rng, g.dim(), 3)));
  }
  std::vector<char> full(seeds.size(), 0);
  parallel_for(seeds.size(), [&](std::size_t s) { full[s] = ctx.full_from(seeds[s]); });
  return std::all_of(full.begin(), full.end(), [](char c) { return c != 0; });
}

std::vector<SV> center_of_degree_zero(const GradedLieAlgebra& g) {
  auto g0 = g.indices_of_degree(0);
  const std::size_t n0 = g0.size();
  std::vector<long> pos(g.dim(), -1);
  for (std::size_t a = 0; a < n0; ++a) pos[g0[a]] = static_cast<long>(a);

  // Row (b, k): coefficient of e_k in [e_a, e_b] as a function of a.
  auto rows_for = [&](std::size_t b) {
    std::vector<Vec<Q>> rows(n0, Vec<Q>(n0));
    for (std::size_t a = 0; a < n0; ++a) {
      SV v = g.bracket_basis(g0[a], g0[b]);
      for (const auto& [k, c] : v) rows[pos[k]][a] = c;
    }
    return rows;
  };

  // Target rank from a mod-p pass; the exact pass stops once it is reached and
  // the remaining annihilator is verified directly.
  std::size_t target = n0;
  bool have_target = false;
  try {
    Echelon<Fp> ep(n0);
    for (std::size_t b = 0; b < n0 && !ep.full(); ++b)
      for (auto& row : rows_for(b)) {
        Vec<Fp> r(n0);
        for (std::size_t a = 0; a < n0; ++a) r[a] = reduce_mod_p(row[a]);
        ep.insert(std::move(r));
      }
    target = ep.rank();
    have_target = true;
    if (target == n0) return {};
  } catch (const BadReduction&) {
  }

  Echelon<Q> eq(n0);
  auto verified = [&](const std::vector<Vec<Q>>& cand) {
    for (const auto& z : cand) {
      SV zs(g.dim());
      for (std::size_t a = 0; a < n0; ++a) zs.push(static_cast<uint32_t>(g0[a]), z[a]);
      if (zs.is_zero()) continue;
      for (std::size_t b = 0; b < n0; ++b)
        if (!g.bracket(zs, g.unit(g0[b])).is_zero()) return false;
    }
    return true;
  };
  std::vector<Vec<Q>> kernel_basis;
  bool done = false;
  for (std::size_t b = 0; b < n0 && !done; ++b) {
    for (auto& row : rows_for(b)) {
      if (is_zero_vec(row)) continue;
      eq.insert(std::move(row));
      if (have_target && eq.rank() == target) {
        kernel_basis = eq.complement_kernel();
        if (verified(kernel_basis)) {
          done = true;
          break;
        }
        have_target = false;
      }
    }
  }
  if (!done) kernel_basis = eq.complement_kernel();
  std::vector<SV> out;
  for (const auto& z : kernel_basis) {
    SV zs(g.dim());
    for (std::size_t a = 0; a < n0; ++a) zs.push(static_cast<uint32_t>(g0[a]), z[a]);
    out.push_back(std::move(zs));
  }
  return out;
}

DerivationReport derivations_commuting_with(const GradedLieAlgebra& g, const Involution& sigma) {
  auto g0 = g.indices_of_degree(0);
  const std::size_t n0 = g0.size();
  std::vector<long> pos(g.dim(), -1);
  for (std::size_t a = 0; a < n0; ++a) pos[g0[a]] = static_cast<long>(a);
  Matrix<Q> m(n0, n0);
  for (std::size_t j = 0; j < n0; ++j) {
    for (const auto& [k, c] : sigma.image(g0[j])) {
      if (pos[k] < 0) throw InvolutionViolation("σ does not preserve degree 0", {g0[j]});
      m(pos[k], j) = c;
    }
    m(j, j) -= Q(1);
  }
  DerivationReport rep;
  for (const auto& v : kernel(m)) {
    SV s(g.dim());
    for (std::size_t a = 0; a < n0; ++a) s.push(static_cast<uint32_t>(g0[a]), v[a]);
    rep.basis.push_back(std::move(s));
  }
  auto center = center_of_degree_zero(g);
  std::vector<SV> both = rep.basis;
  both.insert(both.end(), center.begin(), center.end());
  std::size_t sum_dim = span_rank(both, g.dim());
  rep.central_dim = rep.basis.size() + center.size() - sum_dim;
  return rep;
}

CheckReport check_involution(const GradedLieAlgebra& g, const Involution& sigma) {
  CheckReport r;
  const std::size_t n = g.dim();
  if (sigma.dim() != n) {
    r.ok = false;
    r.message = "involution has the wrong dimension";
    return r;
  }
  const auto& b = g.basis();
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [k, c] : sigma.image(i))
      if (g.degree(k) != -g.degree(i)) {
        r.ok = false;
        r.witness = {i};
        r.message = "σ is not grade-reversing on " + b[i].label;
        return r;
      }
    if (sigma.apply(sigma.image(i)) != g.unit(i)) {
      r.ok = false;
      r.witness = {i};
      r.message = "σ² != id on " + b[i].label;
      return r;
    }
  }
  std::vector<std::vector<std::size_t>> failure(n);
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      SV lhs = sigma.apply(g.table().upper(i, j));
      SV rhs = g.bracket(sigma.image(i), sigma.image(j));
      if (lhs != rhs) {
        failure[i] = {i, j};
        return;
      }
    }
  });
  for (std::size_t i = 0; i < n; ++i)
    if (!failure[i].empty()) {
      r.ok = false;
      r.witness = failure[i];
      r.message = "σ is not a morphism on (" + b[failure[i][0]].label + ", " + b[failure[i][1]].label + ")";
      return r;
    }
  return r;
}

}  // namespace kantor
