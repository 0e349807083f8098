// Command-line front end: catalog listing, verification, TKK construction,
// derivations, grading enumeration, KTS counts, export and the acceptance suite.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kantor/report.hpp"

using namespace kantor;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (width.size() <= c) width.push_back(0);
        width[c] = std::max(width[c], display_width(r[c]));
      }
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const auto& r = rows_[k];
      std::string line;
      for (std::size_t c = 0; c < r.size(); ++c) {
        line += r[c];
        if (c + 1 < r.size()) line += std::string(width[c] - display_width(r[c]) + 2, ' ');
      }
      os << line << '\n';
      if (k == 0) {
        std::size_t total = 0;
        for (auto w : width) total += w + 2;
        os << std::string(total - 2, '-') << '\n';
      }
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string dims_text(const std::array<std::size_t, 5>& d) {
  std::ostringstream os;
  os << '(' << d[0] << ',' << d[1] << ',' << d[2] << ',' << d[3] << ',' << d[4] << ')';
  return os.str();
}

std::string mark_text(const GradingMark& m) {
  std::string s = "{";
  for (std::size_t k = 0; k < m.crossed.size(); ++k) s += (k ? "," : "") + std::to_string(m.crossed[k] + 1);
  return s + "}";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + v[k];
  return s;
}

const char* verdict(bool ok) { return ok ? "pass" : "FAIL"; }

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_list(bool json, bool classical) {
  std::vector<CatalogEntry> entries = exceptional_catalog();
  if (classical)
    for (auto& e : classical_grid()) entries.push_back(std::move(e));
  if (json) {
    Json out = Json::array();
    for (const auto& e : entries)
      out.push_back(Json{{"id", e.id}, {"algebra", e.algebra}, {"kind", e.kind}, {"dim", e.dim},
                         {"expected", to_json(e.expected)}});
    emit(Json{{"command", "list"}, {"entries", out}});
    return kPass;
  }
  Table t({"id", "algebra", "kind", "dim", "tkk dims", "der", "real form"});
  for (const auto& e : entries)
    t.add({e.id, e.algebra, e.kind, std::to_string(e.dim), dims_text(e.expected.tkk_dims),
           e.expected.derivation_dim ? std::to_string(*e.expected.derivation_dim) +
                                           (e.expected.derivation_center_allowance ? "(+1)" : "")
                                     : "-",
           e.expected.real_form.empty() ? "-" : e.expected.real_form});
  t.print(std::cout);
  return kPass;
}

int cmd_verify(const std::string& id, std::size_t samples, uint64_t seed, bool exhaustive, bool json) {
  const CatalogEntry e = find_entry(id);
  const VerifyReport r = verify_entry(e, exhaustive ? std::optional(CheckMode::Exhaustive) : std::nullopt,
                                      Sampling{samples, seed});
  if (json) {
    emit(to_json(r));
  } else {
    std::cout << r.id << " (dim " << r.dim << "): axioms " << verdict(r.ok()) << ", " << mode_name(r.axioms.mode) << ", "
              << r.axioms.tuples_checked << " tuples";
    if (r.axioms.mode == CheckMode::Sampled) std::cout << ", seed " << seed;
    std::cout << '\n';
    if (!r.ok()) std::cout << "  axiom " << r.axioms.failed_axiom << ": " << r.axioms.message << '\n';
  }
  return r.ok() ? kPass : kFail;
}

int cmd_tkk(const std::string& id, const std::string& jacobi, std::size_t samples, uint64_t seed, bool json) {
  const CatalogEntry e = find_entry(id);
  std::optional<CheckMode> mode;
  if (!jacobi.empty()) mode = parse_mode(jacobi);
  const TKKReport r = tkk_report(e, mode, Sampling{samples, seed});
  if (json) {
    emit(to_json(r));
  } else {
    Table t({"degree", "-2", "-1", "0", "1", "2", "total"});
    std::vector<std::string> row{"dim"};
    for (auto d : r.dims) row.push_back(std::to_string(d));
    row.push_back(std::to_string(r.total));
    t.add(row);
    t.print(std::cout);
    std::cout << "type: " << (r.named_type.empty() ? "unmatched (expected " + dims_text(e.expected.tkk_dims) + ")" : r.named_type)
              << '\n'
              << "jacobi (" << mode_name(r.jacobi_mode) << "): " << verdict(r.jacobi.ok) << '\n'
              << "involution: " << verdict(r.involution.ok) << '\n'
              << "grading element: " << verdict(r.grading.ok) << '\n'
              << "simple (" << mode_name(r.simplicity_mode) << "): " << verdict(r.simple) << '\n'
              << "result: " << verdict(r.ok()) << '\n';
  }
  return r.ok() ? kPass : kFail;
}

int cmd_derivations(const std::string& id, bool json) {
  const DerivationsReport r = derivations_report(find_entry(id));
  if (json) {
    emit(to_json(r));
  } else {
    std::cout << r.id << ": der dim " << r.measured << " (central part " << r.central << ")\n";
    if (r.expected)
      std::cout << "expected: " << *r.expected << (r.center_allowance ? " (+1 central allowed)" : "") << '\n';
    if (r.prediction) {
      std::vector<std::string> c;
      for (auto d : r.prediction->candidate_dims) c.push_back(std::to_string(d));
      std::cout << "predicted: " << r.prediction->name << ", dim " << join(c, " or ") << '\n';
    }
    std::cout << "result: " << verdict(r.ok()) << '\n';
  }
  return r.ok() ? kPass : kFail;
}

int cmd_gradings(const std::string& algebra, bool json) {
  const GradingTable t = grading_table(algebra);
  if (json) {
    emit(to_json(t));
    return kPass;
  }
  Table out({"mark", "depth", "dims (-2..2)", "admissible", "real forms"});
  for (const auto& r : t.rows)
    out.add({mark_text(r.mark), std::to_string(r.depth), dims_text(r.dims), r.admissible ? "yes" : "no",
             r.admissible ? (r.real_forms.empty() ? "-" : join(r.real_forms, ", ")) : ""});
  out.print(std::cout);
  std::cout << "admissible gradings: " << t.admissible << '\n';
  return kPass;
}

int cmd_count(const std::string& algebra, bool json) {
  const KTSCount c = kts_count(algebra);
  if (json) {
    emit(to_json(c));
  } else {
    Table out({"real form", "marks", "count"});
    for (const auto& r : c.rows) {
      std::vector<std::string> marks;
      for (const auto& m : r.marks) marks.push_back(mark_text(m));
      out.add({r.real_form, marks.empty() ? "-" : join(marks, " "), std::to_string(r.marks.size())});
    }
    out.print(std::cout);
    std::cout << "K(" << algebra << ") = " << c.total << (c.ok() ? "" : " (closed formula: " + std::to_string(c.formula) + ")")
              << '\n';
  }
  return c.ok() ? kPass : kFail;
}

int cmd_export(const std::string& id, const std::string& format, const std::string& path) {
  if (format != "json") throw std::invalid_argument("only json export is supported");
  const CatalogEntry e = find_entry(id);
  const Json j = entry_to_json(e, e.build());
  if (path.empty()) {
    std::cout << j.dump() << '\n';
    return kPass;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump() << '\n';
  return kPass;
}

int cmd_selftest(std::size_t classical_max_dim, bool json) {
  AcceptanceOptions opt;
  opt.classical_max_dim = classical_max_dim;
  bool all = true;
  Json records = Json::array();
  const auto results = run_acceptance(opt, [&](const CriterionResult& c) {
    all = all && c.pass;
    if (json) return;
    std::cout << "criterion " << c.number << ": " << (c.pass ? "PASS" : "FAIL") << "  " << c.title << " [" << c.checks
              << " checks]\n";
    for (const auto& f : c.failures) std::cout << "    " << f << '\n';
    std::cout.flush();
  });
  if (json) {
    for (const auto& c : results) records.push_back(to_json(c));
    emit(Json{{"command", "selftest"}, {"criteria", records}, {"ok", all}});
  }
  return all ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification engine and catalog for Kantor triple systems"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  auto* list = app.add_subcommand("list", "List catalog entries");
  bool classical = false;
  list->add_flag("--classical", classical, "Include the classical grid (dim <= 12)");

  std::string id;
  std::size_t samples = 200;
  uint64_t seed = 0;
  bool exhaustive = false;
  auto* verify = app.add_subcommand("verify", "Check the KTS axioms of an entry");
  verify->add_option("id", id, "Entry identifier")->required();
  verify->add_option("--samples", samples, "Sampled 5-tuples")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Sampling seed");
  verify->add_flag("--exhaustive", exhaustive, "Check every basis 5-tuple");

  std::string jacobi;
  std::size_t jacobi_samples = 500;
  auto* tkk = app.add_subcommand("tkk", "Build and check the Tits-Kantor-Koecher algebra");
  tkk->add_option("id", id, "Entry identifier")->required();
  tkk->add_option("--jacobi", jacobi, "Jacobi check mode")->check(CLI::IsMember({"exhaustive", "sampled"}));
  tkk->add_option("--samples", jacobi_samples, "Sampled triples")->check(CLI::PositiveNumber);
  tkk->add_option("--seed", seed, "Sampling seed");

  auto* der = app.add_subcommand("derivations", "Derivation algebra of an entry");
  der->add_option("id", id, "Entry identifier")->required();

  std::string algebra;
  auto* gradings = app.add_subcommand("enumerate-gradings", "Fundamental gradings of depth <= 2");
  gradings->add_option("algebra", algebra, "E6, A4, so(10), ...")->required();
  auto* count = app.add_subcommand("count-kts", "Number of K-simple KTS per real form");
  count->add_option("algebra", algebra, "E7, sl(5), ...")->required();

  std::string format, out_path;
  auto* exp = app.add_subcommand("export", "Write an entry with its structure tensor");
  exp->add_option("id", id, "Entry identifier")->required();
  exp->add_option("--format", format, "Output format")->required()->check(CLI::IsMember({"json"}));
  exp->add_option("--out", out_path, "Output file (default: stdout)");

  std::size_t classical_max_dim = 12;
  auto* selftest = app.add_subcommand("selftest", "Run acceptance criteria 1-10");
  selftest->add_option("--classical-max-dim", classical_max_dim, "Largest classical grid dimension");

  for (auto* sub : {list, verify, tkk, der, gradings, count, exp, selftest}) sub->add_flag("--json", json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  try {
    if (*list) return cmd_list(json, classical);
    if (*verify) return cmd_verify(id, samples, seed, exhaustive, json);
    if (*tkk) return cmd_tkk(id, jacobi, jacobi_samples, seed, json);
    if (*der) return cmd_derivations(id, json);
    if (*gradings) return cmd_gradings(algebra, json);
    if (*count) return cmd_count(algebra, json);
    if (*exp) return cmd_export(id, format, out_path);
    if (*selftest) return cmd_selftest(classical_max_dim, json);
  } catch (const std::invalid_argument& e) {
    // Unknown identifiers and algebra names are usage errors.
    std::cerr << Json{{"ok", false}, {"error", "usage"}, {"message", e.what()}}.dump() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << Json{{"ok", false}, {"error", "failure"}, {"message", e.what()}}.dump() << '\n';
    return kFail;
  }
  return kUsage;
}
