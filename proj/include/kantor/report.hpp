#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kantor/io.hpp"

namespace kantor {

std::string mode_name(CheckMode m);
CheckMode parse_mode(const std::string& s);  // "exhaustive" | "sampled"

struct VerifyReport {
  std::string id;
  std::size_t dim = 0;
  Sampling sampling;
  AxiomReport axioms;
  bool ok() const { return axioms.ok; }
};
/// Without a mode: exhaustive for dim <= 8, sampled otherwise.
VerifyReport verify_entry(const CatalogEntry& e, std::optional<CheckMode> mode = {}, Sampling sampling = {});

struct TKKReport {
  std::string id;
  std::array<std::size_t, 5> dims{};
  std::size_t total = 0;
  /// Algebra name when the dimensions match the entry's expectation, else empty.
  std::string named_type;
  bool dims_match = false;
  CheckMode jacobi_mode = CheckMode::Exhaustive;
  Sampling jacobi_sampling{500, 0};
  CheckReport jacobi;
  CheckReport involution;
  CheckReport grading;
  CheckMode simplicity_mode = CheckMode::Exhaustive;
  bool simple = false;
  bool ok() const { return dims_match && jacobi.ok && involution.ok && grading.ok && simple; }
};
/// Without a mode: Jacobi exhaustive for total dim <= 100; simplicity exhaustive for total dim <= 78.
TKKReport tkk_report(const CatalogEntry& e, const TKKPair& p, std::optional<CheckMode> jacobi = {},
                     Sampling sampling = {500, 0});
TKKReport tkk_report(const CatalogEntry& e, std::optional<CheckMode> jacobi = {}, Sampling sampling = {500, 0});

struct DerivationsReport {
  std::string id;
  std::size_t measured = 0;
  std::size_t central = 0;
  std::optional<std::size_t> expected;
  bool center_allowance = false;
  std::optional<DerivationPrediction> prediction;
  bool ok() const;
};
DerivationsReport derivations_report(const CatalogEntry& e, const TKKPair& p);
DerivationsReport derivations_report(const CatalogEntry& e);

struct GradingRow {
  GradingMark mark;
  int depth = 0;
  std::array<std::size_t, 5> dims{};
  bool admissible = false;
  std::vector<std::string> real_forms;  // compatible non-compact forms, admissible marks only
};
struct GradingTable {
  std::string algebra;
  std::vector<GradingRow> rows;  // fundamental marks of depth at most 2
  std::size_t admissible = 0;
};
GradingTable grading_table(const std::string& algebra);

struct KTSCountRow {
  std::string real_form;
  std::vector<GradingMark> marks;
};
struct KTSCount {
  std::string algebra;
  std::vector<KTSCountRow> rows;
  std::size_t total = 0;
  std::size_t formula = 0;
  bool ok() const { return total == formula; }
};
KTSCount kts_count(const std::string& algebra);

struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  double seconds = 0;
};
struct AcceptanceOptions {
  std::size_t classical_max_dim = 12;
  std::size_t axiom_samples = 200;
  std::size_t jacobi_samples = 500;
  uint64_t seed = 0;
};
/// Criteria 1 through 10 in order; progress is invoked as each one completes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {},
                                            const std::function<void(const CriterionResult&)>& progress = {});

Json to_json(const CheckReport& r);
CheckReport check_report_from_json(const Json& j);
Json to_json(const AxiomReport& r);
AxiomReport axiom_report_from_json(const Json& j);
Json to_json(const VerifyReport& r);
VerifyReport verify_report_from_json(const Json& j);
Json to_json(const TKKReport& r);
TKKReport tkk_report_from_json(const Json& j);
Json to_json(const DerivationsReport& r);
DerivationsReport derivations_report_from_json(const Json& j);
Json to_json(const GradingTable& t);
Json to_json(const KTSCount& c);
/// seconds is omitted so that the record is deterministic.
Json to_json(const CriterionResult& c);

}  // namespace kantor
