#include "catalog_detail.hpp"

namespace kantor {

namespace {

CatalogEntry exceptional(std::string id, std::string algebra, std::string kind, std::size_t dim,
                         std::array<std::size_t, 5> tkk, std::size_t der, std::string real_form,
                         std::function<TripleSystem()> build, bool center_allowance = false) {
  CatalogEntry e;
  e.id = std::move(id);
  e.algebra = std::move(algebra);
  e.kind = std::move(kind);
  e.dim = dim;
  e.expected.tkk_dims = tkk;
  e.expected.derivation_dim = der;
  e.expected.derivation_center_allowance = center_allowance;
  e.expected.real_form = std::move(real_form);
  e.build = std::move(build);
  return e;
}

std::function<TripleSystem()> e6_modified(const std::string& real_form) {
  return [real_form] {
    return modify(detail::e6_poincare(), detail::e6_poincare_modification(real_form), "E6-eP-" + real_form);
  };
}

}  // namespace

const std::vector<CatalogEntry>& exceptional_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    using namespace detail;
    const std::string ep = "extended-poincare", contact = "contact", special = "special";
    const std::array<std::size_t, 5> f4_ep{7, 8, 22, 8, 7}, e6_ep{8, 16, 30, 16, 8}, e6_c{1, 20, 36, 20, 1},
        e7_ep{10, 32, 49, 32, 10}, e7_c{1, 32, 67, 32, 1}, e8_ep{14, 64, 92, 64, 14}, e8_c{1, 56, 134, 56, 1};
    std::vector<CatalogEntry> v;
    v.push_back(exceptional("G2", "G2", contact, 4, {1, 4, 4, 4, 1}, 1, "G2-split", g2_system));
    v.push_back(exceptional("F4-contact", "F4", contact, 14, {1, 14, 22, 14, 1}, 9, "FI", f4_contact));
    v.push_back(exceptional("F4-eP-7", "F4", ep, 8, f4_ep, 21, "FII", [] { return f4_poincare(7); }));
    v.push_back(exceptional("F4-eP-3", "F4", ep, 8, f4_ep, 9, "FI", [] { return f4_poincare(3); }));
    v.push_back(exceptional("E6-eP-EIV", "E6", ep, 16, e6_ep, 28, "EIV", e6_poincare, true));
    v.push_back(exceptional("E6-eP-EI", "E6", ep, 16, e6_ep, 12, "EI", e6_modified("EI"), true));
    v.push_back(exceptional("E6-eP-EII", "E6", ep, 16, e6_ep, 13, "EII", e6_modified("EII"), true));
    v.push_back(exceptional("E6-eP-EIII", "E6", ep, 16, e6_ep, 21, "EIII", e6_modified("EIII"), true));
    v.push_back(exceptional("E6-contact-EI", "E6", contact, 20, e6_c, 15, "EI", [] { return e6_contact("EI"); }));
    v.push_back(exceptional("E6-contact-EII", "E6", contact, 20, e6_c, 17, "EII", [] { return e6_contact("EII"); }));
    v.push_back(exceptional("E6-contact-EIII", "E6", contact, 20, e6_c, 25, "EIII", [] { return e6_contact("EIII"); }));
    v.push_back(exceptional("E6-special", "E6", special, 20, {5, 20, 28, 20, 5}, 11, "EI", e6_special));
    v.push_back(exceptional("E7-eP-1", "E7", ep, 32, e7_ep, 37, "EVII", [] { return e7_poincare(1); }));
    v.push_back(exceptional("E7-eP-3", "E7", ep, 32, e7_ep, 27, "EVI", [] { return e7_poincare(3); }));
    v.push_back(exceptional("E7-eP-5", "E7", ep, 32, e7_ep, 21, "EV", [] { return e7_poincare(5); }));
    v.push_back(exceptional("E7-contact-6", "E7", contact, 32, e7_c, 30, "EV", [] { return e7_contact_volume(6); }));
    v.push_back(exceptional("E7-contact-2", "E7", contact, 32, e7_c, 46, "EVII", [] { return e7_contact_volume(2); }));
    v.push_back(exceptional("E7-contact-gl6", "E7", contact, 32, e7_c, 36, "EVI", e7_contact_exponential));
    v.push_back(exceptional("E7-special", "E7", special, 35, {7, 35, 49, 35, 7}, 21, "EV", e7_special));
    v.push_back(exceptional("E8-eP-3", "E8", ep, 64, e8_ep, 58, "EIX", [] { return e8_poincare(3); }));
    v.push_back(exceptional("E8-eP-7", "E8", ep, 64, e8_ep, 42, "EVIII", [] { return e8_poincare(7); }));
    v.push_back(exceptional("E8-contact-FTS", "E8", contact, 56, e8_c, 79, "EIX", e8_contact_fts));
    v.push_back(exceptional("E8-contact-sl8", "E8", contact, 56, e8_c, 63, "EVIII", e8_contact_sl8));
    return v;
  }();
  return entries;
}

Matrix<Q> e6_poincare_modification(const std::string& real_form) {
  if (real_form != "EI" && real_form != "EII" && real_form != "EIII")
    throw UnknownId("no E6 modification for " + real_form);
  return detail::e6_poincare_modification(real_form);
}

CatalogEntry find_entry(const std::string& id) {
  for (const auto& e : exceptional_catalog())
    if (e.id == id) return e;
  return classical_entry(id);
}

std::vector<DerivedConstant> derived_constants(const std::string& family) {
  if (family == "F4-eP") return detail::f4_poincare_constants();
  if (family == "F4-contact") return detail::f4_contact_constants();
  if (family == "E6-special") return detail::e6_special_constants();
  if (family == "E7-eP") return detail::e7_poincare_constants();
  if (family == "E7-contact") return detail::e7_contact_constants();
  if (family == "E8-FTS") return detail::e8_fts_constants();
  throw UnknownId("unknown constant family " + family);
}

}  // namespace kantor
