#include <gtest/gtest.h>

#include <map>

#include "kantor/catalog.hpp"
#include "kantor/tkk.hpp"

using namespace kantor;

namespace {

std::array<std::size_t, 5> measured_dims(const TKKPair& p) {
  std::array<std::size_t, 5> out{};
  const auto dims = p.algebra.graded_dims();
  for (std::size_t d = 0; d < 5; ++d) out[d] = dims[d];
  return out;
}

Q q(long long n, long long d = 1) { return Q(Rational(n, d)); }

void expect_values(const std::string& family, const std::vector<Q>& expected) {
  const auto got = derived_constants(family);
  ASSERT_EQ(got.size(), expected.size()) << family;
  for (std::size_t k = 0; k < got.size(); ++k) EXPECT_EQ(got[k].value, expected[k]) << family << " " << got[k].name;
}

class Exceptional : public ::testing::TestWithParam<std::string> {};

}  // namespace

TEST(Catalog, Inventory) {
  const auto& cat = exceptional_catalog();
  EXPECT_EQ(cat.size(), 23u);
  std::map<std::string, int> by_algebra;
  for (const auto& e : cat) ++by_algebra[e.algebra];
  EXPECT_EQ(by_algebra["G2"], 1);
  EXPECT_EQ(by_algebra["F4"], 3);
  EXPECT_EQ(by_algebra["E6"], 8);
  EXPECT_EQ(by_algebra["E7"], 7);
  EXPECT_EQ(by_algebra["E8"], 4);
  for (const auto& e : cat) {
    EXPECT_EQ(e.expected.tkk_dims[1], e.dim) << e.id;
    EXPECT_EQ(find_entry(e.id).id, e.id);
  }
  EXPECT_THROW(find_entry("E9-none"), UnknownId);
  EXPECT_EQ(find_entry("Kar(4)").dim, 10u);
}

TEST(Catalog, DerivedConstants) {
  expect_values("F4-eP", {q(2), q(-1)});
  expect_values("F4-contact", {q(-1, 2), q(-1, 2)});
  expect_values("E7-contact", {q(1, 2), q(-1, 2)});
  expect_values("E7-eP", {q(-1), q(1, 2), q(-1), q(2), q(-1)});
  expect_values("E6-special", {q(1, 2), q(-3, 10), q(-1), q(3, 5), q(1)});
  expect_values("E8-FTS", {q(4), q(-1, 2), q(-1)});
  EXPECT_THROW(derived_constants("B3-none"), UnknownId);
}

TEST_P(Exceptional, AxiomsTKKAndDerivations) {
  const CatalogEntry e = find_entry(GetParam());
  const TripleSystem v = e.build();
  ASSERT_EQ(v.dim(), e.dim);
  EXPECT_EQ(v.id(), e.id);
  const AxiomReport r = check_axioms(v, Sampling{40, 0});
  ASSERT_TRUE(r.ok) << r.message;
  const TKKPair p = tkk_build(v);
  EXPECT_EQ(measured_dims(p), e.expected.tkk_dims);
  const auto der = derivations_commuting_with(p.algebra, p.sigma);
  const std::size_t expected = *e.expected.derivation_dim;
  if (e.expected.derivation_center_allowance)
    EXPECT_TRUE(der.basis.size() == expected || der.basis.size() == expected + 1) << der.basis.size();
  else
    EXPECT_EQ(der.basis.size(), expected);
}

INSTANTIATE_TEST_SUITE_P(All, Exceptional, ::testing::Values(
    "G2", "F4-contact", "F4-eP-7", "F4-eP-3", "E6-eP-EIV", "E6-eP-EI", "E6-eP-EII", "E6-eP-EIII",
    "E6-contact-EI", "E6-contact-EII", "E6-contact-EIII", "E6-special", "E7-eP-1", "E7-eP-3", "E7-eP-5",
    "E7-contact-6", "E7-contact-2", "E7-contact-gl6", "E7-special", "E8-eP-3", "E8-eP-7", "E8-contact-FTS",
    "E8-contact-sl8"),
    [](const auto& info) {
      std::string s = info.param;
      for (auto& c : s)
        if (c == '-') c = '_';
      return s;
    });

TEST(Catalog, E6ModificationsAreInvolutiveAutomorphisms) {
  const TripleSystem base = find_entry("E6-eP-EIV").build();
  const std::size_t n = base.dim();
  for (const std::string rf : {"EI", "EII", "EIII"}) {
    const Matrix<Q> phi = e6_poincare_modification(rf);
    EXPECT_EQ(phi * phi, Matrix<Q>::identity(n)) << rf;
    EXPECT_TRUE(is_automorphism(base, phi)) << rf;
    const TripleSystem m = modify(base, phi);
    EXPECT_EQ(m.tensor(), find_entry("E6-eP-" + rf).build().tensor()) << rf;
    EXPECT_EQ(modify(m, phi).tensor(), base.tensor()) << rf;
  }
  EXPECT_THROW(e6_poincare_modification("EV"), UnknownId);
}
