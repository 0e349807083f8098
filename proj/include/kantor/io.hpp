#pragma once

#include <string>

#include "json.hpp"
#include "kantor/catalog.hpp"
#include "kantor/diagram.hpp"
#include "kantor/tkk.hpp"

namespace kantor {

/// Insertion-ordered, so serialized output is stable.
using Json = nlohmann::ordered_json;

class ImportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scalars are strings in the form of Q::to_string ("1/2+1/3 i").
Json to_json(const Q& q);
Q q_from_json(const Json& j);

/// {"dim": n, "entries": [[k, "c"], ...]}
Json to_json(const SV& v);
SV sv_from_json(const Json& j);

/// {"id", "dim", "products": [[i, j, k, entries], ...]} over nonzero basis products.
Json to_json(const TripleSystem& v);
TripleSystem triple_system_from_json(const Json& j);

/// {"basis": [{"label", "degree"}], "brackets": [[i, j, entries], ...] for i < j, "grading_element"}
Json to_json(const GradedLieAlgebra& g);
GradedLieAlgebra graded_lie_from_json(const Json& j);

Json to_json(const Involution& s);
Involution involution_from_json(const Json& j);

Json to_json(const TKKPair& p);
TKKPair tkk_pair_from_json(const Json& j);

Json to_json(const Expectation& e);
Expectation expectation_from_json(const Json& j);

/// Entry metadata together with its structure tensor.
Json entry_to_json(const CatalogEntry& e, const TripleSystem& v);
struct ImportedEntry {
  CatalogEntry entry;  // build() returns the imported system
  TripleSystem system;
};
ImportedEntry entry_from_json(const Json& j);

// Diagram objects use 1-based node numbers.
Json to_json(const GradingMark& m);
GradingMark grading_mark_from_json(const Json& j);
Json to_json(const DynkinDiagram& d);
Json to_json(const SatakeDiagram& s);
Json to_json(const DerivationPrediction& p);

}  // namespace kantor
