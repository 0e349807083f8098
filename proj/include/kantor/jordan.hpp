#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "kantor/linalg.hpp"
#include "kantor/scalar.hpp"

namespace kantor {

/// Complex octonion c₀ + Σ c_k e_k with e_k² = −1 and e_i e_{i+1} = e_{i+3}
/// along the lines {i, i+1, i+3} (indices mod 7 in 1..7).
class Octonion {
 public:
  Octonion() = default;
  explicit Octonion(const std::array<Q, 8>& c) : c_(c) {}
  static Octonion unit(std::size_t k);
  static Octonion scalar(const Q& a);

  const Q& operator[](std::size_t k) const { return c_[k]; }
  Q& operator[](std::size_t k) { return c_[k]; }

  Octonion operator+(const Octonion& o) const;
  Octonion operator-(const Octonion& o) const;
  Octonion operator*(const Octonion& o) const;
  Octonion scaled(const Q& a) const;
  Octonion conj() const;
  /// x x̄ = Σ c_k².
  Q norm() const;
  /// x + x̄ = 2c₀.
  Q trace() const;
  friend bool operator==(const Octonion& a, const Octonion& b) { return a.c_ == b.c_; }

 private:
  std::array<Q, 8> c_{};
};

/// Index ±(k) with e_i e_j = sign·e_k for imaginary units 1 ≤ i, j ≤ 7, i ≠ j.
std::pair<int, std::size_t> octonion_table(std::size_t i, std::size_t j);

/// Hermitian 3×3 matrix over the octonions:
///   [[a₁, c₃, c̄₂], [c̄₃, a₂, c₁], [c₂, c̄₁, a₃]].
/// Coordinates: a₁, a₂, a₃, then the eight components of c₁, c₂, c₃.
class AlbertElement {
 public:
  static constexpr std::size_t kDim = 27;

  AlbertElement() : v_(kDim) {}
  explicit AlbertElement(Vec<Q> coords);
  static AlbertElement identity();
  static AlbertElement unit(std::size_t k);
  static AlbertElement from_parts(const std::array<Q, 3>& diag, const std::array<Octonion, 3>& off);

  const Vec<Q>& coords() const noexcept { return v_; }
  const Q& diag(std::size_t i) const { return v_[i]; }
  Octonion off(std::size_t i) const;

  AlbertElement operator+(const AlbertElement& o) const;
  AlbertElement operator-(const AlbertElement& o) const;
  AlbertElement scaled(const Q& a) const;
  friend bool operator==(const AlbertElement& a, const AlbertElement& b) { return a.v_ == b.v_; }

 private:
  Vec<Q> v_;
};

/// Cubic norm N(A) = a₁a₂a₃ − Σ a_i n(c_i) + t(c₁c₂c₃) with base point 1,
/// and the structures derived from it.
class CubicData {
 public:
  /// The shared instance.
  static const CubicData& albert();

  Q norm(const AlbertElement& a) const;
  /// Full symmetrization, trilinear.
  Q norm(const AlbertElement& a, const AlbertElement& b, const AlbertElement& c) const;
  /// Tr(A) = 3N(1,1,A).
  Q trace(const AlbertElement& a) const;
  /// S(A,B) = 6N(A,B,1).
  Q s_form(const AlbertElement& a, const AlbertElement& b) const;
  /// (A,B) = Tr(A)Tr(B) − S(A,B).
  Q pairing(const AlbertElement& a, const AlbertElement& b) const;
  /// (A♯, B) = 3N(A,A,B).
  AlbertElement sharp(const AlbertElement& a) const;
  /// A×B = (A+B)♯ − A♯ − B♯.
  AlbertElement cross(const AlbertElement& a, const AlbertElement& b) const;
  /// ½(A×B + Tr(A)B + Tr(B)A − S(A,B)1).
  AlbertElement jordan_product(const AlbertElement& a, const AlbertElement& b) const;

  /// Gram matrix of (·,·) in the coordinate basis.
  const Matrix<Q>& gram() const noexcept { return gram_; }
  /// Transpose of φ relative to (·,·).
  Matrix<Q> adjoint(const Matrix<Q>& phi) const;
  /// φ*B without forming φ*.
  AlbertElement adjoint_apply(const Matrix<Q>& phi, const AlbertElement& b) const;
  /// Basis of {φ : N(φA, A, A) = 0 for all A}, the Lie algebra of the reduced
  /// structure group (dimension 78), computed as a null space.
  const std::vector<Matrix<Q>>& structure_algebra() const;

 private:
  CubicData();
  std::vector<Q> trilinear_;  // N(e_i, e_j, e_k), dense 27³
  Matrix<Q> gram_;
  Matrix<Q> gram_inverse_;
  std::vector<std::vector<SparseVector<Q>>> cross_table_;  // e_i × e_j
  AlbertElement from_functional(const Vec<Q>& values) const;
};

/// x = (α A; B β) ∈ ℂ ⊕ J ⊕ J* ⊕ ℂ; coordinates α, A, B, β.
struct FreudenthalElement {
  static constexpr std::size_t kDim = 56;
  Q alpha;
  AlbertElement a;
  AlbertElement b;
  Q beta;

  static FreudenthalElement from_coords(const Vec<Q>& v);
  static FreudenthalElement unit(std::size_t k);
  Vec<Q> coords() const;
  FreudenthalElement operator+(const FreudenthalElement& o) const;
  FreudenthalElement scaled(const Q& c) const;
  friend bool operator==(const FreudenthalElement& x, const FreudenthalElement& y) {
    return x.alpha == y.alpha && x.beta == y.beta && x.a == y.a && x.b == y.b;
  }
};

/// Φ(φ, X, Y, ν) ∈ E7 = J ⊕ (E6 ⊕ ℂG) ⊕ J*.
struct E7Element {
  Matrix<Q> phi{AlbertElement::kDim, AlbertElement::kDim};
  AlbertElement x;
  AlbertElement y;
  Q nu;

  E7Element operator+(const E7Element& o) const;
  E7Element scaled(const Q& c) const;
};

/// {x,y} = αδ − βγ + (A,D) − (B,C).
Q symplectic(const FreudenthalElement& x, const FreudenthalElement& y);
/// Φ(α A; B β) = (αν + (X,B), φA − ⅓νA + Y×B + βX; −φ*B + ⅓νB + X×A + αY, −βν + (Y,A)).
FreudenthalElement e7_act(const E7Element& g, const FreudenthalElement& x);
/// The 56×56 matrix of e7_act(g, ·).
Matrix<Q> e7_matrix(const E7Element& g);
/// (A∨B)C = ½(B,C)A + ⅙(A,B)C − ½B×(A×C).
Matrix<Q> albert_vee(const AlbertElement& a, const AlbertElement& b);
/// x×y = Φ(−½(A∨D + C∨B), −¼(B×D − αC − γA), ¼(A×C − βD − δB),
/// ⅛((A,D) + (C,B) − 3(αδ + βγ))) for x = (α A; B β), y = (γ C; D δ).
E7Element freudenthal_product(const FreudenthalElement& x, const FreudenthalElement& y);
/// I(α A; B β) = (α A; −B −β).
FreudenthalElement paracomplex(const FreudenthalElement& x);

/// Bracket constants c₁, c₂, c₃ of the E8 contact grading in
/// [x̂, y] = c₁ x×y + c₂{x,y}E and [𝟙̂, 𝟙] = c₃E.
struct FreudenthalConstants {
  Q c1, c2, c3;
};
/// (xyz) = [[x, σy], z] = −c₁(x×Iy)(z) − c₂{x,Iy}z.
FreudenthalElement e8_fts_product(const FreudenthalElement& x, const FreudenthalElement& y,
                                  const FreudenthalElement& z, const FreudenthalConstants& c);

}  // namespace kantor
