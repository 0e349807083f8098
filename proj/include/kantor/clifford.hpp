#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kantor/linalg.hpp"
#include "kantor/scalar.hpp"

namespace kantor {

/// Gaussian integer with 64-bit parts. Spinor arithmetic stays integral after
/// clearing the few powers of two that occur, so this is the fast exact path.
struct Zi {
  long long re = 0;
  long long im = 0;

  constexpr Zi() = default;
  constexpr Zi(long long r) : re(r) {}
  constexpr Zi(long long r, long long i) : re(r), im(i) {}
  /// i^k.
  static constexpr Zi unit(int k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }

  constexpr bool is_zero() const { return re == 0 && im == 0; }
  constexpr Zi operator+(Zi o) const { return {re + o.re, im + o.im}; }
  constexpr Zi operator-(Zi o) const { return {re - o.re, im - o.im}; }
  constexpr Zi operator-() const { return {-re, -im}; }
  constexpr Zi operator*(Zi o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Zi& operator+=(Zi o) { return *this = *this + o; }
  Zi& operator-=(Zi o) { return *this = *this - o; }
  Zi& operator*=(Zi o) { return *this = *this * o; }
  /// Multiplication by i^k.
  constexpr Zi rotated(int k) const {
    switch (((k % 4) + 4) % 4) {
      case 0: return *this;
      case 1: return {-im, re};
      case 2: return {-re, -im};
      default: return {im, -re};
    }
  }
  friend constexpr bool operator==(Zi a, Zi b) { return a.re == b.re && a.im == b.im; }
  friend constexpr bool operator!=(Zi a, Zi b) { return !(a == b); }

  /// this / den in ℚ(i).
  Q over(long long den = 1) const { return Q(Rational(re, den), Rational(im, den)); }
  /// Exact conversion; throws std::domain_error for non-integral input.
  static Zi from_q(const Q& z);
};

using ZVec = std::vector<Zi>;

Vec<Q> to_q(const ZVec& v, long long den = 1);
/// Requires every entry to be a Gaussian integer.
ZVec to_zi(const Vec<Q>& v);
Zi dot(const ZVec& a, const ZVec& b);
ZVec scaled(const ZVec& v, Zi a);
/// a += c·b.
void axpy(ZVec& a, Zi c, const ZVec& b);

/// Square matrix with exactly one nonzero entry i^k per column:
/// column j sends e_j to i^phase(j) e_target(j).
class Monomial {
 public:
  Monomial() = default;
  static Monomial identity(std::size_t n);
  /// Throws std::invalid_argument unless m is a monomial matrix with entries in {±1, ±i}.
  static Monomial from_matrix(const Matrix<Q>& m);

  std::size_t size() const noexcept { return target_.size(); }
  uint32_t target(std::size_t j) const { return target_[j]; }
  int phase(std::size_t j) const { return phase_[j]; }

  /// Composition: (a * b)(v) = a(b(v)).
  Monomial operator*(const Monomial& o) const;
  /// Multiplication by i^k.
  Monomial rotated(int k) const;
  Monomial negated() const { return rotated(2); }
  Monomial transpose() const;
  Monomial kron(const Monomial& o) const;
  /// Some k with this = i^k·id, if any.
  std::optional<int> scalar_phase() const;

  ZVec apply(const ZVec& v) const;
  /// Accumulates c·M(v) into out.
  void apply_add(const ZVec& v, Zi c, ZVec& out) const;
  Matrix<Q> to_matrix() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.target_ == b.target_ && a.phase_ == b.phase_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  std::vector<uint32_t> target_;
  std::vector<uint8_t> phase_;
};

class CliffordRelationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Clifford module of ℂ^n with the standard form, uv + vu = −2η(u,v).
///
/// Even n = 2k: e_j = E⊗⋯⊗E⊗g_{α(j)}⊗T^{⊗⌊(j−1)/2⌋} on (ℂ²)^{⊗k} with
/// E = 1, T = [[0,−i],[i,0]], g₁ = diag(i,−i), g₂ = [[0,i],[i,0]] and α(j) = 1
/// for odd j, 2 for even j. Odd n = 2k+1: the first 2k generators as above and
/// e_{2k+1} = c·e₁⋯e_{2k}, with c chosen so e_{2k+1}² = −1 and, when k is odd,
/// e₁⋯e_{2k+1} = +1.
class CliffordRep {
 public:
  explicit CliffordRep(std::size_t dim_u);

  std::size_t dim_u() const noexcept { return dim_u_; }
  std::size_t factors() const noexcept { return factors_; }
  std::size_t spinor_dim() const noexcept { return std::size_t{1} << factors_; }
  bool even() const noexcept { return dim_u_ % 2 == 0; }

  /// Generator e_{a+1}.
  const Monomial& gamma(std::size_t a) const { return gammas_.at(a); }
  /// e_{a+1} e_{b+1}.
  const Monomial& pair(std::size_t a, std::size_t b) const { return pairs_.at(a * dim_u_ + b); }
  /// Ordered Clifford product of the listed generators.
  Monomial product(const std::vector<std::size_t>& indices) const;
  const Monomial& volume() const noexcept { return volume_; }
  /// i^k vol in even dimension; throws std::logic_error in odd dimension.
  const Monomial& chirality() const;

  /// Checks e_a e_b + e_b e_a = −2δ_ab over all pairs.
  void verify() const;

  /// Semispinors S^± occupy the ±1 eigenspaces of the chirality, which swaps
  /// index j with its bitwise complement. Basis vector j (j < N/2) is
  /// e_j ± (chirality)e_j, so coordinates are read off the first half.
  std::size_t semispinor_dim() const noexcept { return spinor_dim() / 2; }
  ZVec semispinor_basis(int chirality_sign, std::size_t j) const;
  /// Coordinates of s in the basis of S^±; throws std::invalid_argument if s lies outside.
  ZVec semispinor_coordinates(int chirality_sign, const ZVec& s) const;

  /// u∘s for u given by coordinates in the orthonormal basis.
  ZVec act(const ZVec& u, const ZVec& s) const;

 private:
  std::size_t dim_u_;
  std::size_t factors_;
  std::vector<Monomial> gammas_;
  std::vector<Monomial> pairs_;
  Monomial volume_;
  Monomial chirality_;
};

class UnrealizableInvariants : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Nondegenerate β with β(u∘s,t) = τ β(s,u∘t), β(s,t) = σ β(t,s); in even
/// dimension ι = −1 when S^± are isotropic and +1 when they are orthogonal.
/// β(s,t) = sᵗ B t with B monomial.
struct AdmissibleForm {
  /// Kronecker factors, leftmost first: 'g' is the standard product <,>,
  /// 'w' the symplectic form ω(x,y) = x₁y₂ − x₂y₁.
  std::string pattern;
  int normalization = 1;  // ±1, multiplies the Kronecker product
  Monomial matrix;
  int tau = 0;
  int sigma = 0;
  int iota = 0;  // 0 in odd dimension

  Zi operator()(const ZVec& s, const ZVec& t) const;
  Matrix<Q> to_matrix() const { return matrix.to_matrix(); }
};

/// β given by a pattern; invariants are computed, and std::invalid_argument is
/// thrown if the result is not admissible.
AdmissibleForm kronecker_form(const CliffordRep& rep, std::string_view pattern, int normalization = 1);
/// First pattern in the order g < w (leftmost factor most significant) with
/// the requested invariants; iota is ignored in odd dimension.
AdmissibleForm admissible_form(const CliffordRep& rep, int tau, int sigma, int iota = 0);
/// The forms used by the spinor systems of the catalog (dim U = 7, 8, 10, 12, 14):
/// dim 7 (−1,1), dim 8 (1,1,1), dim 10 −(ωgωgω) with (−1,−1,−1),
/// dim 12 gωgωgω with (−1,−1,1), dim 14 (−1,1,−1).
AdmissibleForm catalog_form(const CliffordRep& rep);

/// Element Σ_{a<b} c_ab e_a∧e_b of Λ²U ≅ so(U), where
/// (u∧v)(w) = η(u,w)v − η(v,w)u.
struct TwoForm {
  std::size_t dim_u = 0;
  std::vector<Zi> coeff;  // pair order (0,1), (0,2), ..., (n−2,n−1)

  explicit TwoForm(std::size_t n = 0) : dim_u(n), coeff(n * (n - 1) / 2) {}
  static std::size_t index(std::size_t n, std::size_t a, std::size_t b) {
    return a * (2 * n - a - 1) / 2 + (b - a - 1);
  }
  /// Antisymmetric coefficient c_ab.
  Zi at(std::size_t a, std::size_t b) const;
  bool is_zero() const;
  /// Column convention matrix on U; always antisymmetric.
  Matrix<Q> to_matrix() const;
};

/// Γ(s,t) with η(Γ(s,t),u) = β(u∘s,t), as coordinates in the orthonormal basis.
ZVec gamma_current(const CliffordRep& rep, const AdmissibleForm& beta, const ZVec& s, const ZVec& t);
/// Γ⁽²⁾(s,t) with η(Γ⁽²⁾(s,t)u,v) = β(u∧v∘s,t).
TwoForm gamma2(const CliffordRep& rep, const AdmissibleForm& beta, const ZVec& s, const ZVec& t);
/// Twice the spin action: 2(ω·t) = ω∘t = Σ c_ab e_a e_b∘t.
ZVec spin_action_doubled(const CliffordRep& rep, const TwoForm& w, const ZVec& t);

class SpecMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Operator I on S, stored as the integral columns of denominator·I.
struct VolumeElement {
  std::vector<std::size_t> subspace;  // orthonormal basis indices spanning W; empty for the exponential
  std::vector<ZVec> columns;
  long long denominator = 1;
  std::optional<Monomial> monomial;  // set for coordinate volumes
  /// I² = square·id for coordinate volumes; 0 for the exponential, where I² = vol.
  int square = 0;

  /// denominator·I(s).
  ZVec apply_scaled(const ZVec& s) const;
  Matrix<Q> to_matrix() const;
};

/// vol_W = e_{w₁}⋯e_{w_m}; verifies I² = ±1 and that the twisted adjoint
/// u ↦ (−1)^m I u I⁻¹ equals −1 on W and +1 on W^⊥.
VolumeElement volume_element(const CliffordRep& rep, const std::vector<std::size_t>& w);
/// Coordinate subspace spanned by the first m basis vectors.
VolumeElement volume_element(const CliffordRep& rep, std::size_t m);
/// exp(iπ/2·X) for X = ½Σ_j e_{2j−1}e_{2j} ∈ spin(U), dim U = 2k:
/// I = 2^{−k/2}∏_j (1 + e_{2j−1}e_{2j}) for even k. Verifies I² = vol in the
/// Clifford algebra.
VolumeElement isotropic_exponential(const CliffordRep& rep);

}  // namespace kantor
