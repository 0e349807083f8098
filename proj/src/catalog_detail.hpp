#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "kantor/catalog.hpp"
#include "kantor/kts.hpp"

namespace kantor::detail {

/// Unknown constants pinned down by stacked vector equations
/// Σ_k c_k·coeffs[k] + constant = 0.
class ConstantSystem {
 public:
  explicit ConstantSystem(std::vector<std::string> names) : names_(std::move(names)) {}

  void add(const std::vector<Vec<Q>>& coeffs, const Vec<Q>& constant);
  /// Unique solution; throws InternalInconsistency when the system is
  /// inconsistent or underdetermined.
  std::vector<DerivedConstant> solve() const;

 private:
  std::vector<std::string> names_;
  std::vector<Vec<Q>> rows_;
  Vec<Q> rhs_;
};

/// Throws InternalInconsistency unless the derived values match.
void expect_constants(const std::string& family, const std::vector<DerivedConstant>& got,
                      const std::vector<Q>& expected);

/// Fills the structure tensor from the operators z ↦ (e_i e_j z), computed
/// once per pair (i, j) in parallel.
using PairProducts = std::function<std::vector<SV>(std::size_t i, std::size_t j)>;
TripleSystem system_from_pairs(std::string id, std::size_t dim, const PairProducts& products);

// Constant families.
std::vector<DerivedConstant> f4_poincare_constants();
std::vector<DerivedConstant> e7_poincare_constants();
std::vector<DerivedConstant> e7_contact_constants();
std::vector<DerivedConstant> f4_contact_constants();
std::vector<DerivedConstant> e6_special_constants();
std::vector<DerivedConstant> e8_fts_constants();

// Spinor systems.
TripleSystem f4_poincare(std::size_t dim_w);
TripleSystem e7_poincare(std::size_t dim_w);
TripleSystem e8_poincare(std::size_t dim_w);
TripleSystem e7_contact_volume(std::size_t dim_w);
TripleSystem e7_contact_exponential();

// Exterior-form systems.
TripleSystem g2_system();
TripleSystem f4_contact();
TripleSystem e6_poincare();
/// Matrix of the involutive automorphism producing the EI, EII, EIII systems from EIV.
Matrix<Q> e6_poincare_modification(const std::string& real_form);
TripleSystem e6_contact(const std::string& real_form);
TripleSystem e6_special();
TripleSystem e7_special();
TripleSystem e8_contact_sl8();

// Freudenthal triple system.
TripleSystem e8_contact_fts();

}  // namespace kantor::detail
