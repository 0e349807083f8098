#include "kantor/tkk.hpp"

#include <string>

namespace kantor {

SpanBasis::SpanBasis(const std::vector<SV>& candidates, std::size_t dim) : dim_(dim) {
  for (const auto& c : candidates)
    if (c.dim() != dim) throw DimensionMismatch("SpanBasis candidate");
  if (!build_modular(candidates)) build_exact(candidates);
}

namespace {

/// Inverse of the kept vectors restricted to the pivot coordinates.
std::optional<Matrix<Q>> restricted_inverse(const std::vector<SV>& basis, const std::vector<std::size_t>& pivots) {
  const std::size_t r = basis.size();
  Matrix<Q> aug(r, 2 * r);
  for (std::size_t b = 0; b < r; ++b) {
    for (std::size_t t = 0; t < r; ++t) aug(b, t) = basis[b].get(static_cast<uint32_t>(pivots[t]));
    aug(b, r + b) = Q(1);
  }
  auto piv = rref(aug);
  if (piv.size() < r || (r > 0 && piv[r - 1] >= r)) return std::nullopt;
  Matrix<Q> inv(r, r);
  for (std::size_t t = 0; t < r; ++t)
    for (std::size_t b = 0; b < r; ++b) inv(t, b) = aug(t, r + b);
  return inv;
}

}  // namespace

bool SpanBasis::build_modular(const std::vector<SV>& candidates) {
  accepted_.clear();
  basis_.clear();
  coords_.clear();
  try {
    Echelon<Fp> ech(dim_);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (candidates[c].is_zero() || ech.full()) continue;
      Vec<Fp> d(dim_);
      for (const auto& [k, x] : candidates[c]) d[k] = reduce_mod_p(x);
      if (ech.insert(std::move(d))) {
        accepted_.push_back(c);
        basis_.push_back(candidates[c]);
      }
    }
    pivots_ = ech.pivots();
  } catch (const BadReduction&) {
    return false;
  }
  auto inv = restricted_inverse(basis_, pivots_);
  if (!inv) return false;
  inverse_ = std::move(*inv);
  coords_.reserve(candidates.size());
  std::vector<char> kept(candidates.size(), 0);
  for (std::size_t b = 0; b < accepted_.size(); ++b) kept[accepted_[b]] = 1;
  std::size_t next = 0;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (kept[c]) {
      coords_.push_back(SV::unit(rank(), static_cast<uint32_t>(next++)));
      continue;
    }
    auto x = express(candidates[c]);
    if (!x) return false;
    coords_.push_back(std::move(*x));
  }
  return true;
}

void SpanBasis::build_exact(const std::vector<SV>& candidates) {
  accepted_.clear();
  basis_.clear();
  coords_.clear();
  SparseEchelon<Q> ech(dim_);
  std::vector<SV> raw;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    auto res = ech.insert(candidates[c]);
    if (res.accepted) {
      accepted_.push_back(c);
      basis_.push_back(candidates[c]);
      raw.push_back(SV::unit(SparseEchelon<Q>::kMaxRank, static_cast<uint32_t>(res.index)));
    } else {
      raw.push_back(std::move(res.coordinates));
    }
  }
  for (auto& x : raw) coords_.emplace_back(rank(), x.entries());
  Echelon<Q> exact(dim_);
  for (const auto& b : basis_) exact.insert(b.to_dense());
  pivots_ = exact.pivots();
  auto inv = restricted_inverse(basis_, pivots_);
  if (!inv) throw InternalInconsistency("exact span basis is not independent");
  inverse_ = std::move(*inv);
}

std::optional<SV> SpanBasis::express(const SV& v) const {
  const std::size_t r = rank();
  Vec<Q> vp(r);
  for (std::size_t t = 0; t < r; ++t) vp[t] = v.get(static_cast<uint32_t>(pivots_[t]));
  SV c(r);
  for (std::size_t b = 0; b < r; ++b) {
    Q s;
    for (std::size_t t = 0; t < r; ++t)
      if (!vp[t].is_zero() && !inverse_(t, b).is_zero()) s += vp[t] * inverse_(t, b);
    if (!s.is_zero()) c.push(static_cast<uint32_t>(b), s);
  }
  Accumulator<Q> acc(dim_);
  for (const auto& [b, x] : c) acc.add_scaled(x, basis_[b]);
  acc.add_scaled(Q(-1), v);
  if (!acc.take().is_zero()) return std::nullopt;
  return c;
}

namespace {

/// K_xy as an operator on V: entry k*n + l is the e_l coefficient of K_xy(e_k).
SV kantor_operator(const TripleSystem& v, std::size_t p, std::size_t q) {
  const std::size_t n = v.dim();
  Accumulator<Q> acc(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& [l, c] : v.basis_product(p, k, q)) acc.add(static_cast<uint32_t>(k * n + l), c);
    for (const auto& [l, c] : v.basis_product(q, k, p)) acc.add(static_cast<uint32_t>(k * n + l), -c);
  }
  return acc.take();
}

/// L_{e_i e_j}: entry k*n + l is the e_l coefficient of (e_i e_j e_k).
SV left_operator(const TripleSystem& v, std::size_t i, std::size_t j) {
  const std::size_t n = v.dim();
  std::vector<SV::Entry> entries;
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [l, c] : v.basis_product(i, j, k)) entries.emplace_back(static_cast<uint32_t>(k * n + l), c);
  return SV(n * n, std::move(entries));
}

enum class Part { K = 0, V = 1, L = 2, Phi = 3, D = 4 };

class Builder {
 public:
  explicit Builder(const TripleSystem& v) : v_(v), n_(v.dim()) {}

  TKKPair build() {
    const std::size_t n = n_;
    std::vector<SV> kc;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        kc.push_back(kantor_operator(v_, p, q));
        kpair_index_.emplace_back(p, q);
      }
    SpanBasis kb(kc, n * n);
    coord_k_.assign(n * n, SV(kb.rank()));
    for (std::size_t c = 0; c < kc.size(); ++c) {
      auto [p, q] = kpair_index_[c];
      coord_k_[p * n + q] = kb.coordinates(c);
      coord_k_[q * n + p] = -kb.coordinates(c);
    }
    for (std::size_t c : kb.accepted()) k_pairs_.push_back(kpair_index_[c]);

    std::vector<SV> lc;
    std::vector<std::pair<std::size_t, std::size_t>> lpairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        lc.push_back(left_operator(v_, i, j));
        lpairs.emplace_back(i, j);
      }
    SpanBasis lb(lc, n * n);
    coord_l_.resize(n * n);
    for (std::size_t c = 0; c < lc.size(); ++c) coord_l_[c] = lb.coordinates(c);
    for (std::size_t c : lb.accepted()) l_pairs_.push_back(lpairs[c]);

    mk_ = k_pairs_.size();
    m0_ = l_pairs_.size();
    off_[0] = 0;
    off_[1] = mk_;
    off_[2] = mk_ + n;
    off_[3] = mk_ + n + m0_;
    off_[4] = mk_ + 2 * n + m0_;
    total_ = 2 * mk_ + 2 * n + m0_;

    std::vector<LieBasisElement> basis;
    auto pair_label = [](const char* head, std::pair<std::size_t, std::size_t> pq) {
      return std::string(head) + "[" + std::to_string(pq.first) + "," + std::to_string(pq.second) + "]";
    };
    for (auto pq : k_pairs_) basis.push_back({pair_label("K", pq), -2});
    for (std::size_t i = 0; i < n; ++i) basis.push_back({"e[" + std::to_string(i) + "]", -1});
    for (auto ij : l_pairs_) basis.push_back({pair_label("L", ij), 0});
    for (std::size_t i = 0; i < n; ++i) basis.push_back({"phi[" + std::to_string(i) + "]", 1});
    for (auto pq : k_pairs_) basis.push_back({pair_label("D", pq), 2});

    TKKPair out;
    out.algebra = GradedLieAlgebra(basis);
    for (std::size_t a = 0; a < total_; ++a)
      for (std::size_t b = a + 1; b < total_; ++b) {
        SV r = bracket(a, b);
        if (r.is_zero()) continue;
        try {
          out.algebra.set_bracket(a, b, r);
        } catch (const DegreeViolation& e) {
          throw InternalInconsistency(std::string("bracket of wrong degree: ") + e.what());
        }
      }

    std::vector<SV> images(total_);
    for (std::size_t a = 0; a < mk_; ++a) {
      images[off_[0] + a] = unit(Part::D, a);
      images[off_[4] + a] = unit(Part::K, a);
    }
    for (std::size_t i = 0; i < n; ++i) {
      images[off_[1] + i] = -unit(Part::Phi, i);
      images[off_[3] + i] = -unit(Part::V, i);
    }
    for (std::size_t b = 0; b < m0_; ++b) {
      auto [i, j] = l_pairs_[b];
      images[off_[2] + b] = -place(Part::L, coord_l_[j * n + i]);
    }
    out.sigma = Involution(std::move(images));

    for (std::size_t i = 0; i < n; ++i) out.embedding.push_back(off_[1] + i);
    out.k_pairs = k_pairs_;
    out.l_pairs = l_pairs_;

    // grading element: the member of g_0 acting as -1 on V
    std::vector<SV::Entry> minus_id;
    for (std::size_t k = 0; k < n; ++k) minus_id.emplace_back(static_cast<uint32_t>(k * n + k), Q(-1));
    if (auto e = lb.express(SV(n * n, std::move(minus_id)))) out.algebra.set_grading_element(place(Part::L, *e));
    return out;
  }

 private:
  SV unit(Part part, std::size_t k) const {
    return SV::unit(total_, static_cast<uint32_t>(off_[static_cast<int>(part)] + k));
  }
  /// Embeds a coordinate vector of one graded piece into the whole algebra.
  SV place(Part part, const SV& local) const {
    std::vector<SV::Entry> e;
    const std::size_t o = off_[static_cast<int>(part)];
    for (const auto& [k, c] : local) e.emplace_back(static_cast<uint32_t>(o + k), c);
    return SV(total_, std::move(e));
  }

  SV e(std::size_t i) const { return v_.unit(i); }
  SV prod(const SV& x, const SV& y, const SV& z) const { return v_.product(x, y, z); }
  /// K_{e_p e_q}(z) for the kept pair a.
  SV kop(std::size_t a, const SV& z) const {
    auto [p, q] = k_pairs_[a];
    return prod(e(p), z, e(q)) - prod(e(q), z, e(p));
  }
  /// Coordinates of K_xy (or D_xy) over the kept pairs.
  SV k_coords(const SV& x, const SV& y) const {
    Accumulator<Q> acc(mk_);
    for (const auto& [p, a] : x)
      for (const auto& [q, b] : y) acc.add_scaled(a * b, coord_k_[p * n_ + q]);
    return acc.take();
  }
  SV l_coords(const SV& x, const SV& y) const {
    Accumulator<Q> acc(m0_);
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y) acc.add_scaled(a * b, coord_l_[i * n_ + j]);
    return acc.take();
  }

  std::pair<Part, std::size_t> locate(std::size_t g) const {
    for (int p = 4; p >= 0; --p)
      if (g >= off_[p]) return {static_cast<Part>(p), g - off_[p]};
    return {Part::K, g};
  }

  SV bracket(std::size_t ga, std::size_t gb) const {
    auto [pa, a] = locate(ga);
    auto [pb, b] = locate(gb);
    if (static_cast<int>(pa) < static_cast<int>(pb)) return -ordered(pb, b, pa, a);
    return ordered(pa, a, pb, b);
  }

  /// [x, y] with part(x) >= part(y).
  SV ordered(Part pa, std::size_t a, Part pb, std::size_t b) const {
    const SV zero(total_);
    switch (pa) {
      case Part::K:
        return zero;
      case Part::V:
        if (pb == Part::V) return place(Part::K, k_coords(e(a), e(b)));
        return zero;
      case Part::L: {
        auto [u, v] = l_pairs_[a];
        switch (pb) {
          case Part::K:
            return place(Part::K, k_coords(kop(b, e(v)), e(u)));
          case Part::V:
            return place(Part::V, prod(e(u), e(v), e(b)));
          case Part::L: {
            auto [x, y] = l_pairs_[b];
            return place(Part::L, l_coords(prod(e(u), e(v), e(x)), e(y)) - l_coords(e(x), prod(e(v), e(u), e(y))));
          }
          default:
            return zero;
        }
      }
      case Part::Phi:
        switch (pb) {
          case Part::K:
            return place(Part::V, kop(b, e(a)));
          case Part::V:
            return place(Part::L, l_coords(e(b), e(a)));
          case Part::L: {
            auto [u, v] = l_pairs_[b];
            return place(Part::Phi, prod(e(v), e(u), e(a)));
          }
          case Part::Phi:
            return place(Part::D, k_coords(e(a), e(b)));
          default:
            return zero;
        }
      case Part::D: {
        auto [x, y] = k_pairs_[a];
        switch (pb) {
          case Part::K:
            return place(Part::L, l_coords(kop(b, e(y)), e(x)) - l_coords(kop(b, e(x)), e(y)));
          case Part::V:
            return -place(Part::Phi, kop(a, e(b)));
          case Part::L: {
            auto [u, v] = l_pairs_[b];
            return place(Part::D, k_coords(prod(e(v), e(u), e(x)), e(y)) + k_coords(e(x), prod(e(v), e(u), e(y))));
          }
          default:
            return zero;
        }
      }
    }
    return zero;
  }

  const TripleSystem& v_;
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> kpair_index_;
  std::vector<std::pair<std::size_t, std::size_t>> k_pairs_, l_pairs_;
  std::vector<SV> coord_k_, coord_l_;
  std::size_t mk_ = 0, m0_ = 0, total_ = 0;
  std::size_t off_[5] = {0, 0, 0, 0, 0};
};

}  // namespace

TKKPair tkk_build(const TripleSystem& v) {
  if (!is_centerless(v)) throw NotCenterless(v.id() + " has a nonzero center");
  return Builder(v).build();
}

TripleSystem kts_from_pair(const TKKPair& p, std::string id) {
  const std::size_t n = p.embedding.size();
  std::vector<long> local(p.algebra.dim(), -1);
  for (std::size_t i = 0; i < n; ++i) local[p.embedding[i]] = static_cast<long>(i);
  const GradedLieAlgebra& g = p.algebra;
  const Involution& sigma = p.sigma;
  const std::vector<std::size_t>& emb = p.embedding;
  // the rule runs before this function returns, so the references stay valid
  TripleSystem out(std::move(id), n, [&g, &sigma, &emb, local, n](std::size_t i, std::size_t j, std::size_t k) {
    SV r = g.bracket(g.bracket(g.unit(emb[i]), sigma.image(emb[j])), g.unit(emb[k]));
    Accumulator<Q> acc(n);
    for (const auto& [l, c] : r) {
      if (local[l] < 0) throw InternalInconsistency("triple product leaves the degree -1 part");
      acc.add(static_cast<uint32_t>(local[l]), c);
    }
    return acc.take();
  });
  return TripleSystem::from_tensor(out.id(), n, out.tensor());
}

bool roundtrip_check(const TripleSystem& v) { return kts_from_pair(tkk_build(v)).same_tensor(v); }

}  // namespace kantor
