#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kantor/kts.hpp"
#include "kantor/lie.hpp"

namespace kantor {

/// 5-graded Lie algebra with a grade-reversing involution, plus the map
/// identifying basis vector i of the triple system with an index of degree -1.
struct TKKPair {
  GradedLieAlgebra algebra;
  Involution sigma;
  std::vector<std::size_t> embedding;
  /// Basis pairs (p, q) whose K_{e_p e_q} (and D_{e_p e_q}) were kept.
  std::vector<std::pair<std::size_t, std::size_t>> k_pairs;
  /// Basis pairs (i, j) whose L_{e_i e_j} were kept.
  std::vector<std::pair<std::size_t, std::size_t>> l_pairs;
};

class NotCenterless : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// g_{-2} = <K_xy>, g_{-1} = V, g_0 = <L_xy>, g_1 = <phi_x>, g_2 = <D_xy>.
/// Bases are chosen greedily over basis pairs in lexicographic order; the
/// degree-0 and degree-(-2) operators are compared through their action on V.
TKKPair tkk_build(const TripleSystem& v);

/// (x y z) = [[x, sigma(y)], z] on the degree -1 part, in embedding order.
TripleSystem kts_from_pair(const TKKPair& p, std::string id = "from-pair");

/// Structure tensor of kts_from_pair(tkk_build(v)) equals that of v.
bool roundtrip_check(const TripleSystem& v);

/// Coordinates over a greedily chosen basis of the span of a list of sparse
/// vectors. Independence is screened modulo p and all coordinates are exact
/// and verified; a failed verification falls back to exact elimination.
class SpanBasis {
 public:
  SpanBasis(const std::vector<SV>& candidates, std::size_t dim);

  std::size_t rank() const noexcept { return accepted_.size(); }
  /// Candidate indices kept as basis vectors, in order.
  const std::vector<std::size_t>& accepted() const noexcept { return accepted_; }
  /// Coordinates of candidate c over the kept vectors.
  const SV& coordinates(std::size_t c) const { return coords_[c]; }
  /// Exact coordinates of v, or nothing when v is outside the span.
  std::optional<SV> express(const SV& v) const;

 private:
  void build_exact(const std::vector<SV>& candidates);
  bool build_modular(const std::vector<SV>& candidates);

  std::size_t dim_;
  std::vector<std::size_t> accepted_;
  std::vector<SV> basis_;
  std::vector<SV> coords_;
  std::vector<std::size_t> pivots_;
  Matrix<Q> inverse_;  // inverse of the kept vectors restricted to the pivots
};

}  // namespace kantor
