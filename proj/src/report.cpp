#include "kantor/report.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "kantor/clifford.hpp"
#include "kantor/parallel.hpp"

namespace kantor {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::array<std::size_t, 5> dims_of(const GradedLieAlgebra& g) {
  const auto d = g.graded_dims();
  return {d[0], d[1], d[2], d[3], d[4]};
}

std::optional<DerivationPrediction> predict_for(const CatalogEntry& e) {
  if (e.kind == "classical" || e.expected.real_form.empty()) return std::nullopt;
  const DynkinDiagram d = dynkin(e.algebra);
  return predict_derivations(find_real_form(d, e.expected.real_form), standard_mark(e.algebra, e.kind));
}

Json sampling_json(const Sampling& s) { return Json{{"count", s.count}, {"seed", s.seed}}; }
Sampling sampling_from_json(const Json& j) { return {j.at("count").get<std::size_t>(), j.at("seed").get<uint64_t>()}; }

std::string dims_string(const std::array<std::size_t, 5>& d) {
  std::string s = "(";
  for (std::size_t k = 0; k < 5; ++k) s += (k ? "," : "") + std::to_string(d[k]);
  return s + ")";
}

ZVec tensor_power(Zi x0, Zi x1, std::size_t k) {
  ZVec v{Zi(1)};
  for (std::size_t q = 0; q < k; ++q) {
    ZVec next(v.size() * 2);
    for (std::size_t j = 0; j < v.size(); ++j) {
      next[2 * j] = v[j] * x0;
      next[2 * j + 1] = v[j] * x1;
    }
    v = std::move(next);
  }
  return v;
}

// Every per-entry measurement used by criteria 1-5, 7 and 8.
struct Audit {
  std::string id;
  std::size_t dim = 0;
  /// (criterion, message) for exceptions; criterion 0 fails every per-entry criterion.
  std::vector<std::pair<int, std::string>> errors;
  std::optional<VerifyReport> axioms;
  std::optional<std::array<std::size_t, 5>> dims;
  std::optional<std::array<std::size_t, 5>> diagram_dims;
  std::optional<std::size_t> algebra_dim;
  std::optional<CheckReport> jacobi;
  CheckMode jacobi_mode = CheckMode::Exhaustive;
  std::optional<CheckReport> involution;
  std::optional<DerivationsReport> derivations;
  std::optional<bool> roundtrip;
  std::optional<bool> simple;
  std::optional<bool> k_simple;
  std::array<double, 11> seconds{};
};

Audit audit_entry(const CatalogEntry& e, const AcceptanceOptions& opt) {
  Audit a;
  a.id = e.id;
  a.dim = e.dim;
  auto stage = [&](int criterion, const char* name, auto&& f) {
    const auto t0 = Clock::now();
    try {
      f();
    } catch (const std::exception& ex) {
      a.errors.emplace_back(criterion, std::string(name) + ": " + ex.what());
    }
    a.seconds[criterion] += since(t0);
  };
  TripleSystem v;
  std::optional<TKKPair> pair;
  stage(0, "build", [&] { v = e.build(); });
  if (!a.errors.empty()) return a;
  stage(1, "axioms", [&] {
    VerifyReport r;
    r.id = e.id;
    r.dim = e.dim;
    r.sampling = Sampling{opt.axiom_samples, opt.seed};
    r.axioms = check_axioms(v, r.sampling);
    a.axioms = std::move(r);
  });
  stage(2, "tkk", [&] {
    pair = tkk_build(v);
    a.dims = dims_of(pair->algebra);
    a.algebra_dim = algebra_dim(dynkin(e.algebra));
    if (e.kind != "classical") a.diagram_dims = graded_dims(dynkin(e.algebra), standard_mark(e.algebra, e.kind));
  });
  if (!pair) return a;
  const std::size_t total = pair->algebra.dim();
  stage(3, "jacobi", [&] {
    a.jacobi_mode = total <= 100 ? CheckMode::Exhaustive : CheckMode::Sampled;
    a.jacobi = check_jacobi(pair->algebra, a.jacobi_mode, Sampling{opt.jacobi_samples, opt.seed});
  });
  stage(4, "involution", [&] { a.involution = check_involution(pair->algebra, pair->sigma); });
  stage(5, "derivations", [&] { a.derivations = derivations_report(e, *pair); });
  if (v.dim() <= 35)
    stage(7, "roundtrip", [&] { a.roundtrip = kts_from_pair(*pair).same_tensor(v); });
  stage(8, "simplicity", [&] {
    a.simple = is_simple(pair->algebra, total <= 78 ? CheckMode::Exhaustive : CheckMode::Sampled,
                         SimplicityOptions{20, opt.seed});
    a.k_simple = is_k_simple(v);
  });
  return a;
}

class Criterion {
 public:
  Criterion(int n, std::string title) { r_.number = n, r_.title = std::move(title); }
  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok) {
      r_.pass = false;
      r_.failures.push_back(what);
    }
  }
  void add_seconds(double s) { r_.seconds += s; }
  CriterionResult result() const { return r_; }

 private:
  CriterionResult r_;
};

void expect_constants(Criterion& c, const std::string& family, const std::vector<Q>& expected) {
  try {
    const auto got = derived_constants(family);
    bool ok = got.size() == expected.size();
    std::string values;
    for (std::size_t k = 0; k < got.size(); ++k) {
      values += (k ? "," : "") + got[k].value.to_string();
      if (ok && got[k].value != expected[k]) ok = false;
    }
    c.check(ok, family + " constants (" + values + ")");
  } catch (const std::exception& ex) {
    c.check(false, family + ": " + ex.what());
  }
}

Q rq(long long n, long long d = 1) { return Q(Rational(n, d)); }

}  // namespace

std::string mode_name(CheckMode m) { return m == CheckMode::Exhaustive ? "exhaustive" : "sampled"; }

CheckMode parse_mode(const std::string& s) {
  if (s == "exhaustive") return CheckMode::Exhaustive;
  if (s == "sampled") return CheckMode::Sampled;
  throw std::invalid_argument("mode must be exhaustive or sampled: " + s);
}

VerifyReport verify_entry(const CatalogEntry& e, std::optional<CheckMode> mode, Sampling sampling) {
  VerifyReport r;
  r.id = e.id;
  r.dim = e.dim;
  r.sampling = sampling;
  const TripleSystem v = e.build();
  r.axioms = mode ? check_axioms(v, *mode, sampling) : check_axioms(v, sampling);
  return r;
}

TKKReport tkk_report(const CatalogEntry& e, const TKKPair& p, std::optional<CheckMode> jacobi, Sampling sampling) {
  TKKReport r;
  r.id = e.id;
  r.dims = dims_of(p.algebra);
  r.total = p.algebra.dim();
  r.dims_match = r.dims == e.expected.tkk_dims;
  if (r.dims_match) r.named_type = e.algebra;
  r.jacobi_mode = jacobi.value_or(r.total <= 100 ? CheckMode::Exhaustive : CheckMode::Sampled);
  r.jacobi_sampling = sampling;
  r.jacobi = check_jacobi(p.algebra, r.jacobi_mode, sampling);
  r.involution = check_involution(p.algebra, p.sigma);
  r.grading = check_grading_element(p.algebra);
  r.simplicity_mode = r.total <= 78 ? CheckMode::Exhaustive : CheckMode::Sampled;
  r.simple = is_simple(p.algebra, r.simplicity_mode, SimplicityOptions{20, sampling.seed});
  return r;
}

TKKReport tkk_report(const CatalogEntry& e, std::optional<CheckMode> jacobi, Sampling sampling) {
  return tkk_report(e, tkk_build(e.build()), jacobi, sampling);
}

bool DerivationsReport::ok() const {
  if (expected && !(measured == *expected || (center_allowance && measured == *expected + 1))) return false;
  if (prediction) {
    const auto& c = prediction->candidate_dims;
    if (std::find(c.begin(), c.end(), measured) == c.end()) return false;
  }
  return true;
}

DerivationsReport derivations_report(const CatalogEntry& e, const TKKPair& p) {
  DerivationsReport r;
  r.id = e.id;
  const auto der = derivations_commuting_with(p.algebra, p.sigma);
  r.measured = der.dim();
  r.central = der.central_dim;
  r.expected = e.expected.derivation_dim;
  r.center_allowance = e.expected.derivation_center_allowance;
  r.prediction = predict_for(e);
  return r;
}

DerivationsReport derivations_report(const CatalogEntry& e) { return derivations_report(e, tkk_build(e.build())); }

GradingTable grading_table(const std::string& algebra) {
  const DynkinDiagram d = dynkin(algebra);
  GradingTable t;
  t.algebra = algebra;
  const auto admissible = enumerate_admissible(d);
  for (const auto& m : enumerate_fundamental(d, 2)) {
    GradingRow row;
    row.mark = m;
    row.depth = grading_depth(d, m);
    row.dims = graded_dims(d, m);
    row.admissible = std::find(admissible.begin(), admissible.end(), m) != admissible.end();
    if (row.admissible)
      for (const auto& s : compatible_real_forms(d, m)) row.real_forms.push_back(s.real_form);
    t.rows.push_back(std::move(row));
  }
  t.admissible = admissible.size();
  return t;
}

KTSCount kts_count(const std::string& algebra) {
  const DynkinDiagram d = dynkin(algebra);
  KTSCount c;
  c.algebra = algebra;
  for (const auto& s : real_forms(d)) {
    if (s.compact) continue;
    KTSCountRow row{s.real_form, admissible_marks(s)};
    c.total += row.marks.size();
    c.rows.push_back(std::move(row));
  }
  c.formula = kts_count_formula(d.series, d.rank);
  return c;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& progress) {
  std::vector<CatalogEntry> entries = exceptional_catalog();
  for (auto& e : classical_grid(opt.classical_max_dim)) entries.push_back(std::move(e));
  std::vector<Audit> audits(entries.size());
  parallel_for(entries.size(), [&](std::size_t k) { audits[k] = audit_entry(entries[k], opt); });

  std::vector<CriterionResult> out;
  auto finish = [&](const Criterion& c) {
    out.push_back(c.result());
    if (progress) progress(out.back());
  };
  auto per_entry = [&](int n, const std::string& title, auto&& body) {
    Criterion c(n, title);
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const Audit& a = audits[k];
      c.add_seconds(a.seconds[n]);
      for (const auto& [tag, err] : a.errors)
        if (tag == 0 || tag == n) c.check(false, a.id + " " + err);
      body(c, entries[k], a);
    }
    finish(c);
  };

  per_entry(1, "axioms (i),(ii) on every entry: exhaustive dim<=8, sampled otherwise",
            [&](Criterion& c, const CatalogEntry&, const Audit& a) {
              if (a.axioms) c.check(a.axioms->ok(), a.id + " " + a.axioms->axioms.message);
            });
  per_entry(2, "TKK graded dimensions", [&](Criterion& c, const CatalogEntry& e, const Audit& a) {
    if (!a.dims) return;
    c.check(*a.dims == e.expected.tkk_dims, a.id + " dims " + dims_string(*a.dims) + " expected " +
                                                dims_string(e.expected.tkk_dims));
    if (a.diagram_dims) c.check(*a.diagram_dims == *a.dims, a.id + " diagram dims " + dims_string(*a.diagram_dims));
    if (a.algebra_dim) {
      std::size_t total = 0;
      for (auto x : *a.dims) total += x;
      c.check(total == *a.algebra_dim, a.id + " total " + std::to_string(total) + " vs dim " + e.algebra);
    }
  });
  per_entry(3, "Jacobi: exhaustive for total dim<=100, sampled above", [&](Criterion& c, const CatalogEntry&, const Audit& a) {
    if (a.jacobi) c.check(a.jacobi->ok, a.id + " " + a.jacobi->message);
  });
  per_entry(4, "grade-reversing involution", [&](Criterion& c, const CatalogEntry&, const Audit& a) {
    if (a.involution) c.check(a.involution->ok, a.id + " " + a.involution->message);
  });
  per_entry(5, "derivation dimensions", [&](Criterion& c, const CatalogEntry& e, const Audit& a) {
    if (!a.derivations || e.kind == "classical") return;
    const auto& d = *a.derivations;
    std::string what = a.id + " measured " + std::to_string(d.measured);
    if (d.expected) what += " expected " + std::to_string(*d.expected);
    if (d.prediction) what += " predicted " + d.prediction->name;
    c.check(d.expected.has_value() && d.prediction.has_value() && d.ok(), what);
  });

  {
    Criterion c(6, "classification counts");
    const auto t0 = Clock::now();
    const std::map<std::string, std::pair<std::size_t, std::size_t>> exceptional{
        {"G2", {1, 1}}, {"F4", {2, 3}}, {"E6", {3, 8}}, {"E7", {3, 7}}, {"E8", {2, 4}}};
    std::map<std::string, std::size_t> inventory;
    for (const auto& e : exceptional_catalog()) ++inventory[e.algebra];
    for (const auto& [name, counts] : exceptional) {
      const DynkinDiagram d = dynkin(name);
      c.check(enumerate_admissible(d).size() == counts.first, name + " admissible gradings");
      c.check(count_kts(d) == counts.second, name + " K(g)");
      c.check(kts_count_formula(d.series, d.rank) == counts.second, name + " K(g) formula");
      c.check(inventory[name] == counts.second, name + " catalog entries");
    }
    for (std::size_t l = 1; l <= 12; ++l) {
      const std::vector<std::pair<char, std::size_t>> admissible{
          {'A', l % 2 ? (l * l - 1) / 4 : l * l / 4}, {'B', l - 1}, {'C', l - 1}, {'D', l == 4 ? 2 : l - 1}};
      for (auto [series, expected] : admissible) {
        const std::size_t min_rank = series == 'A' ? 1 : series == 'B' ? 2 : series == 'C' ? 3 : 4;
        if (l < min_rank) continue;
        const DynkinDiagram d = dynkin(series, l);
        c.check(enumerate_admissible(d).size() == expected, d.name() + " admissible gradings");
        c.check(count_kts(d) == kts_count_formula(series, l),
                d.name() + " K(g) " + std::to_string(count_kts(d)) + " vs formula " +
                    std::to_string(kts_count_formula(series, l)));
      }
    }
    c.add_seconds(since(t0));
    finish(c);
  }

  per_entry(7, "round trip kts_from_pair(tkk_build(v)) = v for dim<=35", [&](Criterion& c, const CatalogEntry&, const Audit& a) {
    if (a.dim <= 35) c.check(a.roundtrip.value_or(false), a.id + " round trip");
  });
  per_entry(8, "simplicity of every TKK algebra and K-simplicity of every entry",
            [&](Criterion& c, const CatalogEntry&, const Audit& a) {
              c.check(a.simple.value_or(false), a.id + " TKK algebra simple");
              c.check(a.k_simple.value_or(false), a.id + " K-simple");
            });

  {
    Criterion c(9, "derived constants and spinor spot values");
    const auto t0 = Clock::now();
    expect_constants(c, "F4-eP", {rq(2), rq(-1)});
    expect_constants(c, "F4-contact", {rq(-1, 2), rq(-1, 2)});
    expect_constants(c, "E7-contact", {rq(1, 2), rq(-1, 2)});
    expect_constants(c, "E7-eP", {rq(-1), rq(1, 2), rq(-1), rq(2), rq(-1)});
    expect_constants(c, "E6-special", {rq(1, 2), rq(-3, 10), rq(-1), rq(3, 5), rq(1)});
    expect_constants(c, "E8-FTS", {rq(4), rq(-1, 2), rq(-1)});
    try {
      CliffordRep rep10(10);
      const auto beta10 = catalog_form(rep10);
      const ZVec t = tensor_power(1, Zi(0, 1), 5), r = tensor_power(1, Zi(0, -1), 5);
      c.check(beta10(r, t) == Zi(0, 32), "dim 10 beta(r,t) = 32i");
      const auto w = gamma2(rep10, beta10, r, t);
      c.check(spin_action_doubled(rep10, w, t) == scaled(t, Zi(0, 160)), "dim 10 Gamma2(r,t).t = 80i t");
      CliffordRep rep12(12);
      const auto beta12 = catalog_form(rep12);
      const ZVec s12 = tensor_power(1, Zi(0, 1), 6), t12 = tensor_power(1, Zi(0, -1), 6);
      c.check(beta12(s12, t12) == Zi(0, 64), "dim 12 beta(s,t) = 64i");
    } catch (const std::exception& ex) {
      c.check(false, std::string("spot values: ") + ex.what());
    }
    c.add_seconds(since(t0));
    finish(c);
  }

  {
    Criterion c(10, "E6 extended-Poincaré modifications");
    const auto t0 = Clock::now();
    try {
      const TripleSystem base = find_entry("E6-eP-EIV").build();
      const std::size_t n = base.dim();
      for (const std::string rf : {"EI", "EII", "EIII"}) {
        const Matrix<Q> phi = e6_poincare_modification(rf);
        c.check(phi * phi == Matrix<Q>::identity(n), rf + " involutive");
        c.check(is_automorphism(base, phi), rf + " automorphism of EIV");
        const TripleSystem m = modify(base, phi);
        c.check(check_axioms(m, Sampling{opt.axiom_samples, opt.seed}).ok, rf + " axioms");
        c.check(m.same_tensor(find_entry("E6-eP-" + rf).build()), rf + " equals the catalog entry");
        c.check(modify(m, phi).same_tensor(base), rf + " modify twice is the identity");
      }
    } catch (const std::exception& ex) {
      c.check(false, ex.what());
    }
    c.add_seconds(since(t0));
    finish(c);
  }
  return out;
}

Json to_json(const CheckReport& r) { return Json{{"ok", r.ok}, {"message", r.message}, {"witness", r.witness}}; }

CheckReport check_report_from_json(const Json& j) {
  return CheckReport{j.at("ok").get<bool>(), j.at("message").get<std::string>(),
                     j.at("witness").get<std::vector<std::size_t>>()};
}

Json to_json(const AxiomReport& r) {
  Json out;
  out["ok"] = r.ok;
  out["failed_axiom"] = r.failed_axiom;
  out["witness"] = r.witness;
  out["tuples_checked"] = r.tuples_checked;
  out["mode"] = mode_name(r.mode);
  out["message"] = r.message;
  return out;
}

AxiomReport axiom_report_from_json(const Json& j) {
  AxiomReport r;
  r.ok = j.at("ok").get<bool>();
  r.failed_axiom = j.at("failed_axiom").get<int>();
  r.witness = j.at("witness").get<std::vector<std::size_t>>();
  r.tuples_checked = j.at("tuples_checked").get<std::size_t>();
  r.mode = parse_mode(j.at("mode").get<std::string>());
  r.message = j.at("message").get<std::string>();
  return r;
}

Json to_json(const VerifyReport& r) {
  Json out;
  out["command"] = "verify";
  out["id"] = r.id;
  out["dim"] = r.dim;
  out["sampling"] = sampling_json(r.sampling);
  out["axioms"] = to_json(r.axioms);
  out["ok"] = r.ok();
  return out;
}

VerifyReport verify_report_from_json(const Json& j) {
  VerifyReport r;
  r.id = j.at("id").get<std::string>();
  r.dim = j.at("dim").get<std::size_t>();
  r.sampling = sampling_from_json(j.at("sampling"));
  r.axioms = axiom_report_from_json(j.at("axioms"));
  return r;
}

Json to_json(const TKKReport& r) {
  Json out;
  out["command"] = "tkk";
  out["id"] = r.id;
  out["dims"] = r.dims;
  out["total"] = r.total;
  out["named_type"] = r.named_type;
  out["dims_match"] = r.dims_match;
  out["jacobi_mode"] = mode_name(r.jacobi_mode);
  out["jacobi_sampling"] = sampling_json(r.jacobi_sampling);
  out["jacobi"] = to_json(r.jacobi);
  out["involution"] = to_json(r.involution);
  out["grading"] = to_json(r.grading);
  out["simplicity_mode"] = mode_name(r.simplicity_mode);
  out["simple"] = r.simple;
  out["ok"] = r.ok();
  return out;
}

TKKReport tkk_report_from_json(const Json& j) {
  TKKReport r;
  r.id = j.at("id").get<std::string>();
  r.dims = j.at("dims").get<std::array<std::size_t, 5>>();
  r.total = j.at("total").get<std::size_t>();
  r.named_type = j.at("named_type").get<std::string>();
  r.dims_match = j.at("dims_match").get<bool>();
  r.jacobi_mode = parse_mode(j.at("jacobi_mode").get<std::string>());
  r.jacobi_sampling = sampling_from_json(j.at("jacobi_sampling"));
  r.jacobi = check_report_from_json(j.at("jacobi"));
  r.involution = check_report_from_json(j.at("involution"));
  r.grading = check_report_from_json(j.at("grading"));
  r.simplicity_mode = parse_mode(j.at("simplicity_mode").get<std::string>());
  r.simple = j.at("simple").get<bool>();
  return r;
}

Json to_json(const DerivationsReport& r) {
  Json out;
  out["command"] = "derivations";
  out["id"] = r.id;
  out["measured"] = r.measured;
  out["central"] = r.central;
  out["expected"] = r.expected ? Json(*r.expected) : Json();
  out["center_allowance"] = r.center_allowance;
  out["prediction"] = r.prediction ? to_json(*r.prediction) : Json();
  out["ok"] = r.ok();
  return out;
}

DerivationsReport derivations_report_from_json(const Json& j) {
  DerivationsReport r;
  r.id = j.at("id").get<std::string>();
  r.measured = j.at("measured").get<std::size_t>();
  r.central = j.at("central").get<std::size_t>();
  if (!j.at("expected").is_null()) r.expected = j.at("expected").get<std::size_t>();
  r.center_allowance = j.at("center_allowance").get<bool>();
  if (const auto& p = j.at("prediction"); !p.is_null()) {
    DerivationPrediction d;
    d.name = p.at("name").get<std::string>();
    d.dim = p.at("dim").get<std::size_t>();
    d.center_possible = p.at("center_possible").get<bool>();
    d.candidate_dims = p.at("candidate_dims").get<std::vector<std::size_t>>();
    r.prediction = d;
  }
  return r;
}

Json to_json(const GradingTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row;
    row["mark"] = to_json(r.mark);
    row["depth"] = r.depth;
    row["dims"] = r.dims;
    row["admissible"] = r.admissible;
    row["real_forms"] = r.real_forms;
    rows.push_back(std::move(row));
  }
  Json out;
  out["command"] = "enumerate-gradings";
  out["algebra"] = t.algebra;
  out["admissible"] = t.admissible;
  out["rows"] = std::move(rows);
  return out;
}

Json to_json(const KTSCount& c) {
  Json rows = Json::array();
  for (const auto& r : c.rows) {
    Json marks = Json::array();
    for (const auto& m : r.marks) marks.push_back(to_json(m));
    rows.push_back(Json{{"real_form", r.real_form}, {"marks", std::move(marks)}, {"count", r.marks.size()}});
  }
  Json out;
  out["command"] = "count-kts";
  out["algebra"] = c.algebra;
  out["rows"] = std::move(rows);
  out["total"] = c.total;
  out["formula"] = c.formula;
  out["ok"] = c.ok();
  return out;
}

Json to_json(const CriterionResult& c) {
  Json out;
  out["criterion"] = c.number;
  out["title"] = c.title;
  out["pass"] = c.pass;
  out["checks"] = c.checks;
  out["failures"] = c.failures;
  return out;
}

}  // namespace kantor
