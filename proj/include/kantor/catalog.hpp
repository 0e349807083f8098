#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kantor/kts.hpp"

namespace kantor {

class UnknownId : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class ParameterOutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Expectation {
  std::array<std::size_t, 5> tkk_dims{};  // degrees -2, -1, 0, 1, 2
  std::optional<std::size_t> derivation_dim;
  /// The measured derivation dimension may exceed the expected one by the
  /// central element of g_0 (two crossed nodes).
  bool derivation_center_allowance = false;
  std::string real_form;

  std::size_t tkk_total() const {
    std::size_t s = 0;
    for (auto d : tkk_dims) s += d;
    return s;
  }
};

struct CatalogEntry {
  std::string id;
  std::string algebra;  // "G2", "F4", ..., or "sl(5)", "so(10)", "sp(6)" for classical entries
  std::string kind;     // "classical", "extended-poincare", "contact", "special"
  std::size_t dim = 0;
  Expectation expected;
  std::function<TripleSystem()> build;
};

// Classical families. Parameters follow the matrix sizes of each construction.

/// M_{m,n} ⊕ M_{r,m} with the transpose.
TripleSystem ksl_transpose(std::size_t m, std::size_t n, std::size_t r);
/// M_{2h,2k} ⊕ M_{2l,2h} with the symplectic transpose.
TripleSystem ksl_symplectic(std::size_t h, std::size_t k, std::size_t l);
/// M_{m,n} ⊕ M_{n,m} with A = Id, B = diag(-Id_k, Id_{m-k}).
TripleSystem ksl_split(std::size_t m, std::size_t n, std::size_t k);
/// M_{m,n} with A = Id and B the reflexive matrix with k antidiagonal pairs.
TripleSystem kso_reflexive(std::size_t m, std::size_t n, std::size_t k);
/// M_{2l,2j} with A = J S, B = i J S.
TripleSystem kso_antireflexive(std::size_t l, std::size_t j);
/// M_{2m,n} with A = Id, B = J_{2m}.
TripleSystem ksp_symplectic(std::size_t m, std::size_t n);
/// M_{2m,2l} with A = J S, B = diag(-Id_k, Id_{2m-2k}, -Id_k).
TripleSystem ksp_split(std::size_t m, std::size_t l, std::size_t k);
/// ℂ^n ⊕ antireflexive n×n matrices.
TripleSystem kar(std::size_t n);

/// Every classical system admitted by the classification ranges with dim V <= max_dim.
std::vector<CatalogEntry> classical_grid(std::size_t max_dim = 12);
/// Builds a classical system from its identifier, e.g. "Ksl(1,1,1;t)" or "Kar(4)".
CatalogEntry classical_entry(const std::string& id);

/// Bracket constant fixed by a consistency equation of the graded Lie algebra.
struct DerivedConstant {
  std::string name;
  Q value;
};
/// Solves the consistency equations of a family: "F4-eP" (lambda, mu),
/// "F4-contact" (lambda, mu), "E6-special" (c1..c5), "E7-eP" (c1..c5),
/// "E7-contact" (lambda, mu), "E8-FTS" (c1, c2, c3). Throws UnknownId.
std::vector<DerivedConstant> derived_constants(const std::string& family);

/// The 23 exceptional systems, grouped by algebra G2, F4, E6, E7, E8.
const std::vector<CatalogEntry>& exceptional_catalog();
/// Involutive automorphism of the E6 EIV system whose modification gives the
/// "EI", "EII" or "EIII" system. Throws UnknownId.
Matrix<Q> e6_poincare_modification(const std::string& real_form);
/// Exceptional or classical entry by identifier.
CatalogEntry find_entry(const std::string& id);

}  // namespace kantor
