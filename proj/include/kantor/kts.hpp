#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "kantor/lie.hpp"

namespace kantor {

/// Structure tensor: entry (i*n + j)*n + k holds the product (e_i e_j e_k).
using Tensor = std::vector<SV>;

/// Finite-dimensional space with an exact trilinear product.
///
/// The basis rule is the source of truth; the structure tensor is built from
/// it on first use and shared between copies.
class TripleSystem {
 public:
  using BasisRule = std::function<SV(std::size_t, std::size_t, std::size_t)>;

  TripleSystem();
  TripleSystem(std::string id, std::size_t dim, BasisRule rule);
  static TripleSystem from_tensor(std::string id, std::size_t dim, Tensor tensor);

  const std::string& id() const noexcept { return id_; }
  std::size_t dim() const noexcept { return dim_; }
  TripleSystem renamed(std::string id) const;

  const Tensor& tensor() const;
  const SV& basis_product(std::size_t i, std::size_t j, std::size_t k) const {
    return tensor()[(i * dim_ + j) * dim_ + k];
  }
  Vec<Q> product(const Vec<Q>& x, const Vec<Q>& y, const Vec<Q>& z) const;
  SV product(const SV& x, const SV& y, const SV& z) const;
  SV unit(std::size_t i) const { return SV::unit(dim_, static_cast<uint32_t>(i)); }

  /// Exact equality of the structure tensors.
  bool same_tensor(const TripleSystem& o) const;

 private:
  struct Cache;
  std::string id_;
  std::size_t dim_ = 0;
  std::shared_ptr<Cache> cache_;
};

/// (x y z) = 0 for all x, y, z.
TripleSystem zero_system(std::size_t dim, std::string id = "zero");
/// Block sum with the second summand on the trailing coordinates.
TripleSystem direct_sum(const TripleSystem& a, const TripleSystem& b);

class AxiomViolation : public std::runtime_error {
 public:
  AxiomViolation(int axiom, std::vector<std::size_t> witness, const std::string& what)
      : std::runtime_error(what), axiom_(axiom), witness_(std::move(witness)) {}
  int axiom() const noexcept { return axiom_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  int axiom_;
  std::vector<std::size_t> witness_;
};

struct AxiomReport {
  bool ok = true;
  int failed_axiom = 0;               // 1 or 2 when !ok
  std::vector<std::size_t> witness;   // basis 5-tuple, or the sample index
  std::size_t tuples_checked = 0;
  CheckMode mode = CheckMode::Exhaustive;
  std::string message;
};

/// Axioms (i) and (ii) on 5-tuples (u, v, x, y, z); axiom (ii) is tested on
/// K_{K_uv(x) y}(z). Exhaustive over basis tuples or sampled on random vectors.
AxiomReport check_axioms(const TripleSystem& v, CheckMode mode, Sampling sampling = {});
/// Exhaustive for dim <= 8, sampled otherwise.
AxiomReport check_axioms(const TripleSystem& v, Sampling sampling = {});
void require_axioms(const TripleSystem& v, Sampling sampling = {});

/// Column k is K_xy(e_k) = (x e_k y) - (y e_k x).
Matrix<Q> kantor_tensor(const TripleSystem& v, const Vec<Q>& x, const Vec<Q>& y);
/// Whether every Kantor tensor vanishes.
bool is_jordan(const TripleSystem& v);

Subspace center(const TripleSystem& v);
bool is_centerless(const TripleSystem& v);

enum class IdealKind { Ideal, KIdeal, LeftIdeal };

/// Smallest subspace of the given kind containing the seeds.
Subspace ideal_closure(const TripleSystem& v, const std::vector<Vec<Q>>& seeds, IdealKind kind);
Subspace ideal_closure(const TripleSystem& v, const SV& seed, IdealKind kind);
/// Whether the closure of seed is all of V. Decided modulo p when that
/// already gives everything, exactly otherwise.
bool closure_is_everything(const TripleSystem& v, const SV& seed, IdealKind kind);
/// Whether the subspace is closed under the products of the given kind.
bool is_ideal_of_kind(const TripleSystem& v, const Subspace& s, IdealKind kind);

/// Closure from every basis vector is everything.
bool is_simple(const TripleSystem& v);
bool is_k_simple(const TripleSystem& v);
bool is_irreducible(const TripleSystem& v);

class NotAKIdeal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PIdeal {
  Subspace plus;
  Subspace minus;
};

/// (I, {v : (V v V) ⊂ I}) for a K-ideal I; the result is verified.
PIdeal p_ideal_from_K_ideal(const TripleSystem& v, const Subspace& ideal);
/// (I^e V V) + (V I^{-e} V) + (V V I^e) ⊂ I^e for e = ±1.
bool is_p_ideal(const TripleSystem& v, const PIdeal& p);

class NotAnAutomorphism : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NotInvolutive : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Whether phi (column convention) preserves the product on all basis triples.
bool is_automorphism(const TripleSystem& v, const Matrix<Q>& phi);
/// Product (x, phi(y), z) for an involutive automorphism phi.
TripleSystem modify(const TripleSystem& v, const Matrix<Q>& phi, std::string id = {});

/// g_{-1} ⊕ g_1 with [x y z] = [[x, y], z]; degree -1 basis vectors come first.
TripleSystem lts_of(const GradedLieAlgebra& g, const Involution& sigma);
/// Lie triple system axioms (i)-(iii); exhaustive for dim <= 8, sampled otherwise.
CheckReport check_lts_axioms(const TripleSystem& t, Sampling sampling = {});

}  // namespace kantor
