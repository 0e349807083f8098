#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kantor/fastfield.hpp"
#include "kantor/linalg.hpp"
#include "kantor/scalar.hpp"

namespace kantor {

using SV = SparseVector<Q>;

/// Upper-triangular table of brackets of basis vectors, [e_i, e_j] for i < j.
template <class S>
class BracketTable {
 public:
  BracketTable() = default;
  explicit BracketTable(std::size_t n) : n_(n), upper_(n * n, SparseVector<S>(n)) {}

  std::size_t dim() const noexcept { return n_; }
  const SparseVector<S>& upper(std::size_t i, std::size_t j) const { return upper_[i * n_ + j]; }
  SparseVector<S>& mutable_upper(std::size_t i, std::size_t j) { return upper_[i * n_ + j]; }

  /// [e_i, e_j] with antisymmetry applied; the returned flag is the sign (+1/−1/0).
  int lookup(std::size_t i, std::size_t j, const SparseVector<S>** out) const {
    if (i == j) return 0;
    if (i < j) {
      *out = &upper_[i * n_ + j];
      return 1;
    }
    *out = &upper_[j * n_ + i];
    return -1;
  }

  template <class T, class F>
  BracketTable<T> convert(F f) const {
    BracketTable<T> t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        SparseVector<T> v(n_);
        for (const auto& [k, c] : upper(i, j)) v.push(k, f(c));
        t.mutable_upper(i, j) = std::move(v);
      }
    return t;
  }

 private:
  std::size_t n_ = 0;
  std::vector<SparseVector<S>> upper_;
};

/// [x, y] for dense coordinate vectors.
template <class S>
Vec<S> dense_bracket(const BracketTable<S>& t, const Vec<S>& x, const Vec<S>& y) {
  const std::size_t n = t.dim();
  Vec<S> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool xi = !x[i].is_zero(), yi = !y[i].is_zero();
    if (!xi && !yi) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& c = t.upper(i, j);
      if (c.is_zero()) continue;
      S coef;
      if (xi && !y[j].is_zero()) coef += x[i] * y[j];
      if (yi && !x[j].is_zero()) coef -= x[j] * y[i];
      if (coef.is_zero()) continue;
      for (const auto& [k, v] : c) out[k] += coef * v;
    }
  }
  return out;
}

/// [e_a, v] for a dense coordinate vector v.
template <class S>
Vec<S> dense_ad(const BracketTable<S>& t, std::size_t a, const Vec<S>& v) {
  const std::size_t n = t.dim();
  Vec<S> out(n);
  for (std::size_t b = 0; b < n; ++b) {
    if (v[b].is_zero() || b == a) continue;
    const SparseVector<S>* c;
    int sign = t.lookup(a, b, &c);
    if (c->is_zero()) continue;
    S coef = sign > 0 ? v[b] : -v[b];
    for (const auto& [k, w] : *c) out[k] += coef * w;
  }
  return out;
}

struct LieBasisElement {
  std::string label;
  int degree = 0;
};

class DegreeViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// ℤ-graded Lie algebra given by the brackets of its basis vectors.
class GradedLieAlgebra {
 public:
  GradedLieAlgebra() = default;
  explicit GradedLieAlgebra(std::vector<LieBasisElement> basis);

  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<LieBasisElement>& basis() const noexcept { return basis_; }
  int degree(std::size_t i) const { return basis_[i].degree; }
  std::vector<std::size_t> indices_of_degree(int p) const;
  std::size_t dim_of_degree(int p) const { return indices_of_degree(p).size(); }
  /// Dimensions of the degrees −2, −1, 0, 1, 2.
  std::vector<std::size_t> graded_dims() const;

  /// Sets [e_i, e_j]; rejects values violating degree additivity.
  void set_bracket(std::size_t i, std::size_t j, const SV& value);
  SV bracket_basis(std::size_t i, std::size_t j) const;
  SV bracket(const SV& x, const SV& y) const;
  Vec<Q> bracket(const Vec<Q>& x, const Vec<Q>& y) const { return dense_bracket(table_, x, y); }
  /// [e_a, v].
  SV ad(std::size_t a, const SV& v) const;

  const BracketTable<Q>& table() const noexcept { return table_; }

  void set_grading_element(SV e) { grading_ = std::move(e); }
  const std::optional<SV>& grading_element() const noexcept { return grading_; }

  SV unit(std::size_t i) const { return SV::unit(dim(), static_cast<uint32_t>(i)); }

 private:
  std::vector<LieBasisElement> basis_;
  BracketTable<Q> table_;
  std::optional<SV> grading_;
};

/// Linear map on the basis, σ(e_j) = image(j).
class Involution {
 public:
  Involution() = default;
  explicit Involution(std::vector<SV> images) : images_(std::move(images)) {}
  std::size_t dim() const noexcept { return images_.size(); }
  const SV& image(std::size_t j) const { return images_[j]; }
  const std::vector<SV>& images() const noexcept { return images_; }
  SV apply(const SV& v) const;
  /// Column convention: matrix(i, j) is the e_i coefficient of σ(e_j).
  SparseMatrix<Q> matrix() const;

 private:
  std::vector<SV> images_;
};

struct CheckReport {
  bool ok = true;
  std::string message;
  std::vector<std::size_t> witness;
};

class JacobiViolation : public std::runtime_error {
 public:
  JacobiViolation(const std::string& what, std::vector<std::size_t> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

class InvolutionViolation : public std::runtime_error {
 public:
  InvolutionViolation(const std::string& what, std::vector<std::size_t> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

enum class CheckMode { Exhaustive, Sampled };

struct Sampling {
  std::size_t count = 200;
  uint64_t seed = 0;
};

/// Exhaustive mode checks every basis triple; sampled mode checks random
/// Gaussian-integer vectors (multilinearity makes integer points as good as
/// arbitrary rational ones). The witness is the basis triple, or the sample index.
CheckReport check_jacobi(const GradedLieAlgebra& g, CheckMode mode, Sampling sampling = {});
void require_jacobi(const GradedLieAlgebra& g, CheckMode mode, Sampling sampling = {});

CheckReport check_degree_additivity(const GradedLieAlgebra& g);
/// [E, x] = p·x on g_p for the stored grading element.
CheckReport check_grading_element(const GradedLieAlgebra& g);

struct TransitivityReport {
  bool transitive = false;
  bool fundamental = false;
};
TransitivityReport check_transitive_fundamental(const GradedLieAlgebra& g);

/// Subspace of coordinate space spanned by reduced basis vectors.
struct Subspace {
  std::size_t ambient = 0;
  std::vector<Vec<Q>> basis;
  std::size_t dim() const noexcept { return basis.size(); }
  bool contains(const Vec<Q>& v) const;
};

Subspace ideal_closure(const GradedLieAlgebra& g, const SV& seed);
/// Whether the ideal generated by seed is all of g. A full closure observed
/// modulo p certifies fullness over ℚ(i); otherwise the exact closure decides.
bool ideal_closure_is_everything(const GradedLieAlgebra& g, const SV& seed);

struct SimplicityOptions {
  std::size_t random_seeds = 20;
  uint64_t seed = 0;
};
/// Exhaustive: closure from every basis vector. Sampled: closure from every
/// basis vector of degrees −2 and −1 plus random vectors.
bool is_simple(const GradedLieAlgebra& g, CheckMode mode, SimplicityOptions opt = {});

struct DerivationReport {
  std::vector<SV> basis;           // σ-fixed part of g_0
  std::size_t central_dim = 0;     // dimension of its intersection with the center of g_0
  std::size_t dim() const noexcept { return basis.size(); }
  std::size_t dim_without_center() const noexcept { return basis.size() - central_dim; }
};
DerivationReport derivations_commuting_with(const GradedLieAlgebra& g, const Involution& sigma);

/// Center of the degree-0 part, as vectors in the full coordinate space.
std::vector<SV> center_of_degree_zero(const GradedLieAlgebra& g);

/// σ² = id, σ(g_p) ⊂ g_{−p} and σ[e_i, e_j] = [σe_i, σe_j], all exact.
CheckReport check_involution(const GradedLieAlgebra& g, const Involution& sigma);

}  // namespace kantor
