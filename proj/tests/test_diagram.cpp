#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "kantor/catalog.hpp"
#include "kantor/diagram.hpp"

using namespace kantor;

namespace {

std::vector<std::string> names(const std::vector<SatakeDiagram>& forms) {
  std::vector<std::string> out;
  for (const auto& s : forms) out.push_back(s.real_form);
  return out;
}

GradingMark mark(std::initializer_list<std::size_t> one_based) {
  GradingMark m;
  for (auto v : one_based) m.crossed.push_back(v - 1);
  std::sort(m.crossed.begin(), m.crossed.end());
  return m;
}

std::vector<DynkinDiagram> classical_upto(std::size_t max_rank) {
  std::vector<DynkinDiagram> out;
  for (std::size_t l = 1; l <= max_rank; ++l) out.push_back(dynkin('A', l));
  for (std::size_t l = 2; l <= max_rank; ++l) out.push_back(dynkin('B', l));
  for (std::size_t l = 3; l <= max_rank; ++l) out.push_back(dynkin('C', l));
  for (std::size_t l = 4; l <= max_rank; ++l) out.push_back(dynkin('D', l));
  return out;
}

const std::vector<std::string> kExceptional{"G2", "F4", "E6", "E7", "E8"};

}  // namespace

TEST(Diagram, LabelsAreTheMaximalRoot) {
  for (const auto& d : classical_upto(12)) EXPECT_EQ(highest_root(d), d.labels) << d.name();
  for (const auto& a : kExceptional) {
    const DynkinDiagram d = dynkin(a);
    EXPECT_EQ(highest_root(d), d.labels) << a;
  }
}

TEST(Diagram, AlgebraDimensions) {
  const std::map<std::string, std::size_t> dims{{"G2", 14}, {"F4", 52}, {"E6", 78}, {"E7", 133}, {"E8", 248}};
  for (const auto& [a, n] : dims) EXPECT_EQ(algebra_dim(dynkin(a)), n) << a;
  for (std::size_t l = 1; l <= 12; ++l) {
    EXPECT_EQ(algebra_dim(dynkin('A', l)), (l + 1) * (l + 1) - 1);
    if (l >= 2) EXPECT_EQ(algebra_dim(dynkin('B', l)), l * (2 * l + 1));
    if (l >= 3) EXPECT_EQ(algebra_dim(dynkin('C', l)), l * (2 * l + 1));
    if (l >= 4) EXPECT_EQ(algebra_dim(dynkin('D', l)), l * (2 * l - 1));
  }
}

TEST(Diagram, CartanMatrixConventions) {
  const auto g2 = dynkin("G2").cartan();
  EXPECT_EQ(g2[1][0], -3);
  EXPECT_EQ(g2[0][1], -1);
  const auto b3 = dynkin('B', 3).cartan();
  EXPECT_EQ(b3[1][2], -2);
  EXPECT_EQ(b3[2][1], -1);
  for (const auto& a : kExceptional) {
    const auto c = dynkin(a).cartan();
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) EXPECT_EQ(c[i][j] == 0, c[j][i] == 0);
  }
}

TEST(Diagram, ParsesAlgebraNames) {
  EXPECT_EQ(dynkin("sl(5)").name(), "A4");
  EXPECT_EQ(dynkin("so(9)").name(), "B4");
  EXPECT_EQ(dynkin("so(10)").name(), "D5");
  EXPECT_EQ(dynkin("sp(6)").name(), "C3");
  EXPECT_THROW(dynkin("E9"), std::invalid_argument);
  EXPECT_THROW(dynkin("sp(5)"), std::invalid_argument);
  EXPECT_THROW(dynkin('D', 3), std::invalid_argument);
  EXPECT_THROW(dynkin("hello"), std::invalid_argument);
}

TEST(Diagram, AdmissibleCountsPerAlgebra) {
  const std::map<std::string, std::size_t> exceptional{{"G2", 1}, {"F4", 2}, {"E6", 3}, {"E7", 3}, {"E8", 2}};
  for (const auto& [a, n] : exceptional) EXPECT_EQ(enumerate_admissible(dynkin(a)).size(), n) << a;
  for (std::size_t l = 1; l <= 12; ++l) {
    const std::size_t sl = l % 2 ? (l * l - 1) / 4 : l * l / 4;
    EXPECT_EQ(enumerate_admissible(dynkin('A', l)).size(), sl) << "A" << l;
    if (l >= 2) EXPECT_EQ(enumerate_admissible(dynkin('B', l)).size(), l - 1) << "B" << l;
    if (l >= 3) EXPECT_EQ(enumerate_admissible(dynkin('C', l)).size(), l - 1) << "C" << l;
    if (l >= 4) EXPECT_EQ(enumerate_admissible(dynkin('D', l)).size(), l == 4 ? 2u : l - 1) << "D" << l;
  }
}

TEST(Diagram, AdmissibleMarksHaveDepthTwo) {
  for (const auto& a : kExceptional) {
    const DynkinDiagram d = dynkin(a);
    for (const auto& m : enumerate_admissible(d)) {
      EXPECT_EQ(grading_depth(d, m), 2);
      const auto dims = graded_dims(d, m);
      EXPECT_EQ(dims[0], dims[4]);
      EXPECT_EQ(dims[1], dims[3]);
      EXPECT_EQ(dims[0] + dims[1] + dims[2] + dims[3] + dims[4], algebra_dim(d));
    }
    const auto fundamental = enumerate_fundamental(d, 2);
    for (const auto& m : enumerate_admissible(d))
      EXPECT_NE(std::find(fundamental.begin(), fundamental.end(), m), fundamental.end());
  }
  EXPECT_THROW(graded_dims(dynkin("G2"), mark({1})), std::invalid_argument);
  EXPECT_EQ(enumerate_fundamental(dynkin("E8"), 2).size(), 2u);
  EXPECT_EQ(enumerate_fundamental(dynkin('A', 3), 1).size(), 2u);
}

TEST(Diagram, ExceptionalRealFormTables) {
  // white nodes and admissible gradings per real form
  const std::map<std::string, std::pair<std::size_t, std::size_t>> expected{
      {"G2-split", {2, 1}}, {"FI", {4, 2}},    {"FII", {1, 1}},  {"EI", {6, 3}},    {"EII", {6, 2}},
      {"EIII", {3, 2}},     {"EIV", {2, 1}},   {"EV", {7, 3}},   {"EVI", {4, 2}},   {"EVII", {3, 2}},
      {"EVIII", {8, 2}},    {"EIX", {4, 2}},
  };
  std::size_t seen = 0;
  for (const auto& a : kExceptional) {
    const auto forms = real_forms(dynkin(a));
    EXPECT_TRUE(forms.back().compact) << a;
    EXPECT_EQ(forms.back().max_compact_dim, algebra_dim(dynkin(a)));
    for (const auto& s : forms) {
      if (s.compact) {
        EXPECT_TRUE(admissible_marks(s).empty());
        continue;
      }
      const auto it = expected.find(s.real_form);
      ASSERT_NE(it, expected.end()) << s.real_form;
      EXPECT_EQ(s.white_nodes(), it->second.first) << s.real_form;
      EXPECT_EQ(admissible_marks(s).size(), it->second.second) << s.real_form;
      ++seen;
    }
  }
  EXPECT_EQ(seen, expected.size());
}

TEST(Diagram, SatakeDataIsConsistent) {
  std::vector<DynkinDiagram> all = classical_upto(9);
  for (const auto& a : kExceptional) all.push_back(dynkin(a));
  for (const auto& d : all) {
    std::set<std::string> seen;
    for (const auto& s : real_forms(d)) {
      EXPECT_TRUE(seen.insert(s.real_form).second) << s.real_form;
      EXPECT_TRUE(arrows_extend_to_automorphism(s)) << s.real_form;
      for (std::size_t v = 0; v < d.rank; ++v) EXPECT_EQ(s.epsilon[s.epsilon[v]], v) << s.real_form;
      for (auto p : s.painted) EXPECT_EQ(s.epsilon[p], p) << s.real_form;
      EXPECT_LT(s.max_compact_dim, algebra_dim(d) + (s.compact ? 1 : 0)) << s.real_form;
      EXPECT_EQ(find_real_form(d, s.real_form).painted, s.painted);
    }
  }
  EXPECT_THROW(find_real_form(dynkin("E6"), "EV"), UnknownRealForm);
}

TEST(Diagram, CountKTSMatchesClosedFormulas) {
  for (const auto& d : classical_upto(12)) EXPECT_EQ(count_kts(d), kts_count_formula(d.series, d.rank)) << d.name();
  const std::map<std::string, std::size_t> exceptional{{"G2", 1}, {"F4", 3}, {"E6", 8}, {"E7", 7}, {"E8", 4}};
  for (const auto& [a, n] : exceptional) {
    const DynkinDiagram d = dynkin(a);
    EXPECT_EQ(count_kts(d), n) << a;
    EXPECT_EQ(kts_count_formula(d.series, d.rank), n) << a;
  }
}

TEST(Diagram, CountKTSSpotValues) {
  EXPECT_EQ(kts_count_formula('A', 4), 7u);   // m = 2: (12 + 2) / 2
  EXPECT_EQ(kts_count_formula('A', 5), 12u);  // m = 2: (28 + 20) / 4
  EXPECT_EQ(kts_count_formula('A', 3), 4u);   // m = 1: (7 + 10 - 1) / 4
  EXPECT_EQ(kts_count_formula('D', 6), 17u);  // m = 3: 2·9 − 1
  EXPECT_EQ(count_kts(dynkin('D', 4)), 5u);
  EXPECT_THROW(kts_count_formula('E', 9), std::invalid_argument);
}

TEST(Diagram, CompatibleRealForms) {
  const DynkinDiagram f4 = dynkin("F4"), e8 = dynkin("E8");
  EXPECT_EQ(names(compatible_real_forms(f4, mark({1}))), (std::vector<std::string>{"FI"}));
  EXPECT_EQ(names(compatible_real_forms(f4, mark({4}))), (std::vector<std::string>{"FI", "FII"}));
  EXPECT_EQ(names(compatible_real_forms(e8, mark({8}))), (std::vector<std::string>{"EVIII", "EIX"}));
  EXPECT_FALSE(compatible(find_real_form(f4, "F4-compact"), mark({1})));
  // EII arrows exchange nodes 2 and 4, so neither alone is compatible.
  const SatakeDiagram eii = find_real_form(dynkin("E6"), "EII");
  EXPECT_FALSE(compatible(eii, mark({2})));
  EXPECT_TRUE(compatible(eii, mark({1, 5})));
  EXPECT_FALSE(compatible(eii, mark({1, 2})));
}

TEST(Diagram, CompatibleFormsSumToRealFormCounts) {
  for (const auto& a : kExceptional) {
    const DynkinDiagram d = dynkin(a);
    std::size_t by_mark = 0, by_form = 0;
    for (const auto& m : enumerate_admissible(d)) by_mark += compatible_real_forms(d, m).size();
    for (const auto& s : real_forms(d)) by_form += admissible_marks(s).size();
    EXPECT_EQ(by_mark, by_form) << a;
  }
}

TEST(Diagram, PredictDerivationExamples) {
  const auto g2 = predict_derivations(find_real_form(dynkin("G2"), "G2-split"), mark({2}));
  EXPECT_EQ(g2.name, "so(2)");
  EXPECT_EQ(g2.dim, 1u);
  EXPECT_FALSE(g2.center_possible);
  const auto fii = predict_derivations(find_real_form(dynkin("F4"), "FII"), mark({4}));
  EXPECT_EQ(fii.name, "so(7)");
  EXPECT_EQ(fii.dim, 21u);
  const auto eviii = predict_derivations(find_real_form(dynkin("E8"), "EVIII"), mark({8}));
  EXPECT_EQ(eviii.name, "sl(8)");
  EXPECT_EQ(eviii.dim, 63u);
  const auto evi = predict_derivations(find_real_form(dynkin("E7"), "EVI"), mark({1}));
  EXPECT_EQ(evi.name, "gl(6)");
  EXPECT_EQ(evi.dim, 36u);
  const auto eii = predict_derivations(find_real_form(dynkin("E6"), "EII"), mark({1, 5}));
  EXPECT_EQ(eii.name, "so(3)⊕so(5)");
  EXPECT_TRUE(eii.center_possible);
  EXPECT_EQ(eii.candidate_dims, (std::vector<std::size_t>{13, 14}));
  EXPECT_THROW(predict_derivations(find_real_form(dynkin("F4"), "FII"), mark({1})), std::invalid_argument);
}

TEST(Diagram, PredictionPairsArrowSwappedComponents) {
  // su(3,3) crossed at node 3: ε swaps the two A2 components.
  const SatakeDiagram s = find_real_form(dynkin('A', 5), "su(3,3)");
  const auto p = predict_derivations(s, mark({3}));
  EXPECT_EQ(p.name, "sl(3)");
  EXPECT_EQ(p.dim, 8u);
}

TEST(Diagram, PredictionsMatchCatalogExpectations) {
  for (const auto& e : exceptional_catalog()) {
    const DynkinDiagram d = dynkin(e.algebra);
    const GradingMark m = standard_mark(e.algebra, e.kind);
    EXPECT_EQ(graded_dims(d, m), e.expected.tkk_dims) << e.id;
    const auto p = predict_derivations(find_real_form(d, e.expected.real_form), m);
    EXPECT_EQ(p.dim, *e.expected.derivation_dim) << e.id << " " << p.name;
    EXPECT_EQ(p.center_possible, e.expected.derivation_center_allowance) << e.id;
  }
  EXPECT_THROW(standard_mark("G2", "special"), std::invalid_argument);
}

TEST(Diagram, ShippedDataIsJson) {
  const std::string& data = exceptional_diagram_data();
  EXPECT_NE(data.find("\"satake\""), std::string::npos);
  EXPECT_NE(data.find("\"EIX\""), std::string::npos);
}
