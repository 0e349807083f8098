#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "kantor/linalg.hpp"
#include "kantor/scalar.hpp"

namespace kantor {

/// Subset of {0, ..., n-1} naming the basis element e_{i1}∧⋯∧e_{ik}, i1 < ⋯ < ik.
using Mask = uint32_t;

int degree(Mask m);
/// ε with e_a∧e_b = ε e_{a∪b}; 0 when a and b meet.
int shuffle_sign(Mask a, Mask b);

/// Element of Λ(ℂ^n) or Λ(ℂ^n)*, sparse in the monomial basis.
class Form {
 public:
  Form() = default;
  explicit Form(std::size_t n) : n_(n) {}
  static Form basis(std::size_t n, Mask m, Q c = Q(1));
  /// Scalar c·1 in degree 0.
  static Form scalar(std::size_t n, Q c);

  std::size_t n() const noexcept { return n_; }
  const std::map<Mask, Q>& terms() const noexcept { return terms_; }
  Q coeff(Mask m) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  void add(Mask m, const Q& c);
  /// Part of degree k.
  Form component(int k) const;
  /// The common degree of every term; -1 for the zero form or mixed degrees.
  int homogeneous_degree() const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form operator+(const Form& o) const { return Form(*this) += o; }
  Form operator-(const Form& o) const { return Form(*this) -= o; }
  Form operator*(const Q& c) const;
  Form operator-() const { return *this * Q(-1); }
  friend bool operator==(const Form& a, const Form& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

 private:
  std::size_t n_ = 0;
  std::map<Mask, Q> terms_;
};

Form wedge(const Form& a, const Form& b);
/// Contraction of `target` by `by` from the left: for I ⊆ J,
/// ι_{e_I} e_J = ε e_{J∖I} with e_J = ε e_I∧e_{J∖I}, and zero otherwise.
/// Applies equally to a polyvector contracting a form and vice versa.
Form contract(const Form& by, const Form& target);
/// Σ_I a_I b_I: the duality pairing, or the extension of the standard scalar product.
Q pairing(const Form& a, const Form& b);

/// Derivation action of A ∈ gl(n) (A e_j = Σ_i A(i,j) e_i): on polyvectors
/// by A, on forms by the dual action −Aᵗ.
Form act(const Matrix<Q>& a, const Form& x, bool dual);
/// Group action of g ∈ GL(n) on polyvectors, g∧⋯∧g.
Form transform(const Matrix<Q>& g, const Form& x);

/// The sl(n)-equivariant map Λ^k ⊗ (Λ^k)* → sl(n) normalized by
/// e_{1⋯k}•e^{1⋯k} = (n−k)/n Σ_{i≤k} e_i⊗e^i − k/n Σ_{j>k} e_j⊗e^j:
/// (x•ξ)(i,j) = ⟨E_ji x, ξ⟩ − δ_ij (k/n)⟨x, ξ⟩.
Matrix<Q> bullet(const Form& x, const Form& xi);

/// Hodge star for the diagonal scalar product with entries `signs` and volume
/// e_{0⋯n−1}: α∧⋆β = η(α,β) vol on basis elements.
Form hodge(const Form& x, const std::vector<int>& signs);
/// ⋆ for the standard Euclidean product.
Form hodge(const Form& x);

/// Basis masks of Λ^k(ℂ^n), lexicographic in the sorted index tuples.
std::vector<Mask> degree_basis(std::size_t n, std::size_t k);
/// Masks of every degree in order of degree, lexicographic within each degree.
std::vector<Mask> full_basis(std::size_t n);

/// Coordinates with respect to an ordered list of masks; throws
/// std::invalid_argument if a term falls outside the list.
class MaskIndex {
 public:
  MaskIndex(std::size_t n, std::vector<Mask> masks);
  std::size_t size() const noexcept { return masks_.size(); }
  Mask mask(std::size_t k) const { return masks_.at(k); }
  std::size_t index(Mask m) const;
  Form form(std::size_t k, Q c = Q(1)) const { return Form::basis(n_, masks_.at(k), c); }
  Form form(const Vec<Q>& coords) const;
  Vec<Q> coordinates(const Form& f) const;

 private:
  std::size_t n_;
  std::vector<Mask> masks_;
  std::vector<int> position_;
};

}  // namespace kantor
