#include <gtest/gtest.h>

#include "kantor/report.hpp"

using namespace kantor;

namespace {

Json reparse(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST(Io, ScalarsAndVectors) {
  for (const char* s : {"0", "-3/2", "1/2+1/3 i", "-7 i", "123456789012345678901234567890"}) {
    const Q q = Q::parse(s);
    EXPECT_EQ(q_from_json(to_json(q)), q) << s;
  }
  SV v(5);
  v.push(1, Q(Rational(2, 3)));
  v.push(4, Q(Rational(0), Rational(-1)));
  EXPECT_EQ(sv_from_json(reparse(to_json(v))), v);
  Json bad = to_json(v);
  bad["entries"][0][0] = 9;
  EXPECT_THROW(sv_from_json(bad), ImportError);
  EXPECT_THROW(q_from_json(Json("1/")), ImportError);
}

TEST(Io, EntryRoundTripIsBitExact) {
  for (const std::string id : {"G2", "F4-contact", "F4-eP-7", "E6-eP-EII", "E6-special", "Kar(4)"}) {
    const CatalogEntry e = find_entry(id);
    const TripleSystem v = e.build();
    const Json j = reparse(entry_to_json(e, v));
    const ImportedEntry imp = entry_from_json(j);
    EXPECT_TRUE(imp.system.same_tensor(v)) << id;
    EXPECT_EQ(imp.entry.expected.tkk_dims, e.expected.tkk_dims) << id;
    EXPECT_EQ(entry_to_json(imp.entry, imp.entry.build()).dump(), j.dump()) << id;
  }
}

TEST(Io, ImportRejectsMalformedEntries) {
  const CatalogEntry e = find_entry("G2");
  Json j = entry_to_json(e, e.build());
  j["dim"] = 5;
  EXPECT_THROW(entry_from_json(j), ImportError);
  j = entry_to_json(e, e.build());
  j["system"]["products"][0][0] = 17;
  EXPECT_THROW(entry_from_json(j), ImportError);
  j = entry_to_json(e, e.build());
  j.erase("expected");
  EXPECT_THROW(entry_from_json(j), ImportError);
}

TEST(Io, TKKPairRoundTrip) {
  const TKKPair p = tkk_build(find_entry("F4-eP-3").build());
  const Json j = reparse(to_json(p));
  const TKKPair q = tkk_pair_from_json(j);
  EXPECT_EQ(to_json(q).dump(), j.dump());
  EXPECT_EQ(q.algebra.graded_dims(), p.algebra.graded_dims());
  EXPECT_TRUE(check_jacobi(q.algebra, CheckMode::Exhaustive).ok);
  EXPECT_TRUE(check_involution(q.algebra, q.sigma).ok);
  EXPECT_TRUE(kts_from_pair(q).same_tensor(find_entry("F4-eP-3").build()));
}

TEST(Io, ReportsRoundTrip) {
  const CatalogEntry e = find_entry("F4-contact");
  const Json v = to_json(verify_entry(e, std::nullopt, Sampling{30, 7}));
  EXPECT_EQ(to_json(verify_report_from_json(reparse(v))).dump(), v.dump());
  const Json t = to_json(tkk_report(e));
  EXPECT_EQ(to_json(tkk_report_from_json(reparse(t))).dump(), t.dump());
  const Json d = to_json(derivations_report(e));
  EXPECT_EQ(to_json(derivations_report_from_json(reparse(d))).dump(), d.dump());
  EXPECT_EQ(grading_mark_from_json(to_json(standard_mark("E6", "extended-poincare"))), standard_mark("E6", "extended-poincare"));
}

TEST(Io, ReportsAreDeterministicGivenSeed) {
  const CatalogEntry e = find_entry("E6-special");
  EXPECT_EQ(to_json(verify_entry(e, std::nullopt, Sampling{25, 3})).dump(),
            to_json(verify_entry(e, std::nullopt, Sampling{25, 3})).dump());
  EXPECT_EQ(to_json(tkk_report(e, CheckMode::Sampled, Sampling{50, 9})).dump(),
            to_json(tkk_report(e, CheckMode::Sampled, Sampling{50, 9})).dump());
}

TEST(Io, DiagramRecordsMatchShippedData) {
  const Json shipped = Json::parse(exceptional_diagram_data());
  for (const auto& rec : shipped.at("satake")) {
    const DynkinDiagram d = dynkin(rec.at("series").get<std::string>() + std::to_string(rec.at("rank").get<int>()));
    const Json mine = to_json(find_real_form(d, rec.at("realFormName").get<std::string>()));
    for (const char* key : {"labels", "painted", "arrows", "realFormName", "maxCompact"})
      EXPECT_EQ(mine.at(key), rec.at(key)) << rec.at("realFormName") << " " << key;
  }
}

TEST(Io, TablesForCli) {
  const GradingTable t = grading_table("E7");
  EXPECT_EQ(t.admissible, 3u);
  const KTSCount c = kts_count("E7");
  EXPECT_EQ(c.total, 7u);
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(kts_count("sl(5)").total, 7u);
  EXPECT_THROW(kts_count("E9"), std::invalid_argument);
}
