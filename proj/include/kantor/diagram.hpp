#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kantor {

class UnknownRealForm : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nodes are 0-based internally; names and data files use 1-based numbering.
/// Numbering: Bourbaki for A–D, F4, E7, E8; for G2 node 1 is short; for E6 the
/// chain is 1–2–3–4–5 with node 6 attached to node 3.
struct DynkinEdge {
  std::size_t long_end;
  std::size_t short_end;
  int multiplicity = 1;
};

struct DynkinDiagram {
  char series = 'A';
  std::size_t rank = 0;
  std::vector<DynkinEdge> edges;
  /// Coefficients m_i of the maximal root.
  std::vector<int> labels;
  /// Diagram automorphisms as node permutations, identity included.
  std::vector<std::vector<std::size_t>> automorphisms;

  std::string name() const;  // "A5", "E6", ...
  /// a_ij = ⟨α_i, α_j^∨⟩.
  std::vector<std::vector<int>> cartan() const;
};

/// Standard diagram; throws std::invalid_argument outside A≥1, B≥2, C≥3, D≥4, G2, F4, E6–E8.
DynkinDiagram dynkin(char series, std::size_t rank);
/// Parses "E6", "A4", "G2", or "sl(n)", "so(n)", "sp(2n)".
DynkinDiagram dynkin(const std::string& algebra);

/// Positive roots as coefficient vectors in the simple roots, by height.
std::vector<std::vector<int>> positive_roots(const DynkinDiagram& d);
std::vector<int> highest_root(const DynkinDiagram& d);
std::size_t algebra_dim(const DynkinDiagram& d);

struct GradingMark {
  std::vector<std::size_t> crossed;  // sorted
  friend bool operator==(const GradingMark&, const GradingMark&) = default;
};

/// Degree of the maximal root.
int grading_depth(const DynkinDiagram& d, const GradingMark& m);
/// dim g_p for p = −2..2; throws std::invalid_argument if the depth exceeds 2.
std::array<std::size_t, 5> graded_dims(const DynkinDiagram& d, const GradingMark& m);
/// Marks with one node of label 2 or two nodes of label 1, up to diagram automorphism.
std::vector<GradingMark> enumerate_admissible(const DynkinDiagram& d);
/// Every fundamental mark of depth at most max_depth, up to diagram automorphism.
std::vector<GradingMark> enumerate_fundamental(const DynkinDiagram& d, int max_depth);

struct SatakeDiagram {
  DynkinDiagram diagram;
  std::vector<std::size_t> painted;  // sorted
  std::vector<std::size_t> epsilon;  // involution of the nodes, identity on painted ones
  std::string real_form;
  /// Complexified maximal compact subalgebra.
  std::string max_compact;
  std::size_t max_compact_dim = 0;
  bool compact = false;

  std::size_t white_nodes() const { return diagram.rank - painted.size(); }
};

/// ε agrees on the white nodes with a diagram automorphism.
bool arrows_extend_to_automorphism(const SatakeDiagram& s);
/// Real forms of the diagram's algebra, non-compact first and the compact form last.
std::vector<SatakeDiagram> real_forms(const DynkinDiagram& d);
/// Real form by name, e.g. "EVII", "su(2,4)", "so(3,8)"; throws UnknownRealForm.
SatakeDiagram find_real_form(const DynkinDiagram& d, const std::string& name);
/// Φ ∩ painted = ∅ and ε(Φ) = Φ; the compact form never qualifies.
bool compatible(const SatakeDiagram& s, const GradingMark& m);
/// Non-compact real forms compatible with some image of the mark under a diagram automorphism.
std::vector<SatakeDiagram> compatible_real_forms(const DynkinDiagram& d, const GradingMark& m);
/// Admissible marks compatible with s, up to the automorphisms preserving s.
std::vector<GradingMark> admissible_marks(const SatakeDiagram& s);
/// Number of K-simple KTS with Tits–Kantor–Koecher algebra of this type:
/// Σ over real forms of |admissible_marks|.
std::size_t count_kts(const DynkinDiagram& d);
/// Closed formulas for the same count, per series and rank.
std::size_t kts_count_formula(char series, std::size_t rank);

struct DerivationPrediction {
  std::string name;  // e.g. "so(5)⊕so(5)⊕so(2)"
  std::size_t dim = 0;
  /// Two crossed nodes: a 1-dimensional center may be added.
  bool center_possible = false;
  std::vector<std::size_t> candidate_dims;
};
/// Complexified maximal compact subalgebra of the semisimple part of g₀°;
/// throws UnknownRealForm if a component cannot be identified.
DerivationPrediction predict_derivations(const SatakeDiagram& s, const GradingMark& m);

/// The grading of each exceptional catalog kind: "contact", "extended-poincare", "special".
GradingMark standard_mark(const std::string& algebra, const std::string& kind);

/// The exceptional data records, as shipped.
const std::string& exceptional_diagram_data();

}  // namespace kantor
