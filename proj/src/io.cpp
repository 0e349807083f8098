#include "kantor/io.hpp"

#include <algorithm>

namespace kantor {
namespace {

template <class F>
auto guarded(const char* what, F f) {
  try {
    return f();
  } catch (const ImportError&) {
    throw;
  } catch (const std::exception& e) {
    throw ImportError(std::string(what) + ": " + e.what());
  }
}

Json entries_json(const SV& v) {
  Json out = Json::array();
  for (const auto& [k, c] : v) out.push_back(Json::array({k, c.to_string()}));
  return out;
}

SV entries_from_json(const Json& j, std::size_t dim) {
  SV v(dim);
  uint32_t last = 0;
  bool first = true;
  for (const auto& e : j) {
    const auto k = e.at(0).get<uint32_t>();
    if (k >= dim || (!first && k <= last)) throw ImportError("sparse entries out of range or unsorted");
    Q c = Q::parse(e.at(1).get<std::string>());
    if (c.is_zero()) throw ImportError("stored zero coefficient");
    v.push(k, std::move(c));
    last = k;
    first = false;
  }
  return v;
}

Json nodes_json(const std::vector<std::size_t>& nodes) {
  Json out = Json::array();
  for (auto v : nodes) out.push_back(v + 1);
  return out;
}

}  // namespace

Json to_json(const Q& q) { return q.to_string(); }
Q q_from_json(const Json& j) {
  return guarded("scalar", [&] { return Q::parse(j.get<std::string>()); });
}

Json to_json(const SV& v) {
  Json out;
  out["dim"] = v.dim();
  out["entries"] = entries_json(v);
  return out;
}

SV sv_from_json(const Json& j) {
  return guarded("vector", [&] { return entries_from_json(j.at("entries"), j.at("dim").get<std::size_t>()); });
}

Json to_json(const TripleSystem& v) {
  const std::size_t n = v.dim();
  Json products = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const SV& p = v.basis_product(i, j, k);
        if (!p.is_zero()) products.push_back(Json::array({i, j, k, entries_json(p)}));
      }
  Json out;
  out["id"] = v.id();
  out["dim"] = n;
  out["products"] = std::move(products);
  return out;
}

TripleSystem triple_system_from_json(const Json& j) {
  return guarded("triple system", [&] {
    const std::size_t n = j.at("dim").get<std::size_t>();
    Tensor t(n * n * n, SV(n));
    for (const auto& p : j.at("products")) {
      const auto i = p.at(0).get<std::size_t>(), a = p.at(1).get<std::size_t>(), k = p.at(2).get<std::size_t>();
      if (i >= n || a >= n || k >= n) throw ImportError("product index out of range");
      t[(i * n + a) * n + k] = entries_from_json(p.at(3), n);
    }
    return TripleSystem::from_tensor(j.at("id").get<std::string>(), n, std::move(t));
  });
}

Json to_json(const GradedLieAlgebra& g) {
  Json basis = Json::array();
  for (const auto& b : g.basis()) basis.push_back(Json{{"label", b.label}, {"degree", b.degree}});
  Json brackets = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t k = i + 1; k < g.dim(); ++k) {
      const SV& v = g.table().upper(i, k);
      if (!v.is_zero()) brackets.push_back(Json::array({i, k, entries_json(v)}));
    }
  Json out;
  out["basis"] = std::move(basis);
  out["brackets"] = std::move(brackets);
  out["grading_element"] = g.grading_element() ? entries_json(*g.grading_element()) : Json();
  return out;
}

GradedLieAlgebra graded_lie_from_json(const Json& j) {
  return guarded("graded Lie algebra", [&] {
    std::vector<LieBasisElement> basis;
    for (const auto& b : j.at("basis")) basis.push_back({b.at("label").get<std::string>(), b.at("degree").get<int>()});
    GradedLieAlgebra g(std::move(basis));
    for (const auto& b : j.at("brackets")) {
      const auto i = b.at(0).get<std::size_t>(), k = b.at(1).get<std::size_t>();
      if (i >= k || k >= g.dim()) throw ImportError("bracket indices must satisfy i < j < dim");
      g.set_bracket(i, k, entries_from_json(b.at(2), g.dim()));
    }
    if (!j.at("grading_element").is_null()) g.set_grading_element(entries_from_json(j.at("grading_element"), g.dim()));
    return g;
  });
}

Json to_json(const Involution& s) {
  Json images = Json::array();
  for (const auto& v : s.images()) images.push_back(entries_json(v));
  return Json{{"images", std::move(images)}};
}

Involution involution_from_json(const Json& j) {
  return guarded("involution", [&] {
    const auto& images = j.at("images");
    std::vector<SV> out;
    for (const auto& v : images) out.push_back(entries_from_json(v, images.size()));
    return Involution(std::move(out));
  });
}

Json to_json(const TKKPair& p) {
  Json out;
  out["algebra"] = to_json(p.algebra);
  out["sigma"] = to_json(p.sigma);
  out["embedding"] = p.embedding;
  out["k_pairs"] = p.k_pairs;
  out["l_pairs"] = p.l_pairs;
  return out;
}

TKKPair tkk_pair_from_json(const Json& j) {
  return guarded("TKK pair", [&] {
    TKKPair p;
    p.algebra = graded_lie_from_json(j.at("algebra"));
    p.sigma = involution_from_json(j.at("sigma"));
    if (p.sigma.dim() != p.algebra.dim()) throw ImportError("involution and algebra dimensions differ");
    p.embedding = j.at("embedding").get<std::vector<std::size_t>>();
    p.k_pairs = j.at("k_pairs").get<std::vector<std::pair<std::size_t, std::size_t>>>();
    p.l_pairs = j.at("l_pairs").get<std::vector<std::pair<std::size_t, std::size_t>>>();
    return p;
  });
}

Json to_json(const Expectation& e) {
  Json out;
  out["tkk_dims"] = e.tkk_dims;
  out["tkk_total"] = e.tkk_total();
  out["derivation_dim"] = e.derivation_dim ? Json(*e.derivation_dim) : Json();
  out["derivation_center_allowance"] = e.derivation_center_allowance;
  out["real_form"] = e.real_form;
  return out;
}

Expectation expectation_from_json(const Json& j) {
  return guarded("expectation", [&] {
    Expectation e;
    e.tkk_dims = j.at("tkk_dims").get<std::array<std::size_t, 5>>();
    if (!j.at("derivation_dim").is_null()) e.derivation_dim = j.at("derivation_dim").get<std::size_t>();
    e.derivation_center_allowance = j.at("derivation_center_allowance").get<bool>();
    e.real_form = j.at("real_form").get<std::string>();
    return e;
  });
}

Json entry_to_json(const CatalogEntry& e, const TripleSystem& v) {
  Json out;
  out["id"] = e.id;
  out["algebra"] = e.algebra;
  out["kind"] = e.kind;
  out["dim"] = e.dim;
  out["expected"] = to_json(e.expected);
  out["system"] = to_json(v);
  return out;
}

ImportedEntry entry_from_json(const Json& j) {
  return guarded("catalog entry", [&] {
    ImportedEntry r;
    r.entry.id = j.at("id").get<std::string>();
    r.entry.algebra = j.at("algebra").get<std::string>();
    r.entry.kind = j.at("kind").get<std::string>();
    r.entry.dim = j.at("dim").get<std::size_t>();
    r.entry.expected = expectation_from_json(j.at("expected"));
    r.system = triple_system_from_json(j.at("system"));
    if (r.system.dim() != r.entry.dim) throw ImportError("entry and system dimensions differ");
    r.entry.build = [s = r.system] { return s; };
    return r;
  });
}

Json to_json(const GradingMark& m) { return nodes_json(m.crossed); }

GradingMark grading_mark_from_json(const Json& j) {
  return guarded("grading mark", [&] {
    GradingMark m;
    for (const auto& v : j) {
      const auto n = v.get<std::size_t>();
      if (n == 0) throw ImportError("nodes are numbered from 1");
      m.crossed.push_back(n - 1);
    }
    std::sort(m.crossed.begin(), m.crossed.end());
    return m;
  });
}

Json to_json(const DynkinDiagram& d) {
  Json edges = Json::array();
  for (const auto& e : d.edges) edges.push_back(Json::array({e.long_end + 1, e.short_end + 1, e.multiplicity}));
  Json out;
  out["series"] = std::string(1, d.series);
  out["rank"] = d.rank;
  out["edges"] = std::move(edges);
  out["labels"] = d.labels;
  return out;
}

Json to_json(const SatakeDiagram& s) {
  Json arrows = Json::array();
  for (std::size_t v = 0; v < s.epsilon.size(); ++v)
    if (s.epsilon[v] > v) arrows.push_back(Json::array({v + 1, s.epsilon[v] + 1}));
  Json out;
  out["series"] = std::string(1, s.diagram.series);
  out["rank"] = s.diagram.rank;
  out["labels"] = s.diagram.labels;
  out["painted"] = nodes_json(s.painted);
  out["arrows"] = std::move(arrows);
  out["realFormName"] = s.real_form;
  out["maxCompact"] = Json{{"name", s.max_compact}, {"dim", s.max_compact_dim}};
  out["compact"] = s.compact;
  return out;
}

Json to_json(const DerivationPrediction& p) {
  Json out;
  out["name"] = p.name;
  out["dim"] = p.dim;
  out["center_possible"] = p.center_possible;
  out["candidate_dims"] = p.candidate_dims;
  return out;
}

}  // namespace kantor
