#include "kantor/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"
#include "kantor/generated/diagram_data.hpp"

namespace kantor {
namespace {

using Nodes = std::vector<std::size_t>;
using Perm = std::vector<std::size_t>;

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

Nodes image(const Perm& p, const Nodes& nodes) {
  Nodes out;
  out.reserve(nodes.size());
  for (auto v : nodes) out.push_back(p[v]);
  std::sort(out.begin(), out.end());
  return out;
}

Nodes canonical(const Nodes& nodes, const std::vector<Perm>& group) {
  Nodes best = nodes;
  std::sort(best.begin(), best.end());
  for (const auto& g : group) best = std::min(best, image(g, nodes));
  return best;
}

bool contains(const Nodes& sorted, std::size_t v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

std::vector<int> maximal_root_labels(char series, std::size_t l) {
  std::vector<int> m(l, 1);
  switch (series) {
    case 'B':
      for (std::size_t i = 1; i < l; ++i) m[i] = 2;
      break;
    case 'C':
      for (std::size_t i = 0; i + 1 < l; ++i) m[i] = 2;
      break;
    case 'D':
      for (std::size_t i = 1; i + 2 < l; ++i) m[i] = 2;
      break;
    default:
      break;
  }
  return m;
}

SatakeDiagram satake(const DynkinDiagram& d, Nodes painted, const std::vector<std::pair<std::size_t, std::size_t>>& arrows,
                     std::string real_form, std::string max_compact, std::size_t max_compact_dim, bool compact = false) {
  SatakeDiagram s;
  s.diagram = d;
  std::sort(painted.begin(), painted.end());
  s.painted = std::move(painted);
  s.epsilon = identity_perm(d.rank);
  for (auto [a, b] : arrows) {
    s.epsilon[a] = b;
    s.epsilon[b] = a;
  }
  s.real_form = std::move(real_form);
  s.max_compact = std::move(max_compact);
  s.max_compact_dim = max_compact_dim;
  s.compact = compact;
  return s;
}

Nodes range_nodes(std::size_t from, std::size_t to) {  // [from, to)
  Nodes out;
  for (std::size_t i = from; i < to; ++i) out.push_back(i);
  return out;
}

std::string str(std::size_t n) { return std::to_string(n); }

std::size_t so_dim(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

std::string so_sum(std::size_t p, std::size_t q) {
  std::vector<std::string> parts;
  for (auto n : {p, q})
    if (n >= 2) parts.push_back("so(" + str(n) + ")");
  if (parts.empty()) return "0";
  return parts.size() == 1 ? parts[0] : parts[0] + "⊕" + parts[1];
}

std::vector<std::pair<std::size_t, std::size_t>> mirror_arrows(std::size_t l, std::size_t count) {
  std::vector<std::pair<std::size_t, std::size_t>> a;
  for (std::size_t i = 0; i < count; ++i)
    if (i != l - 1 - i) a.emplace_back(i, l - 1 - i);
  return a;
}

std::vector<SatakeDiagram> classical_forms(const DynkinDiagram& d) {
  const std::size_t l = d.rank;
  std::vector<SatakeDiagram> v;
  switch (d.series) {
    case 'A': {
      const std::size_t n = l + 1;
      v.push_back(satake(d, {}, {}, "sl(" + str(n) + ",R)", "so(" + str(n) + ")", so_dim(n)));
      if (l >= 3 && l % 2 == 1) {
        const std::size_t m = (l - 1) / 2;
        Nodes black;
        for (std::size_t i = 0; i < l; i += 2) black.push_back(i);
        v.push_back(satake(d, black, {}, "sl(" + str(m + 1) + ",H)", "sp(" + str(2 * m + 2) + ")", (m + 1) * (2 * m + 3)));
      }
      for (std::size_t p = 1; l >= 2 && p <= l / 2; ++p) {
        const std::size_t q = n - p;
        const std::string mc = p == 1 ? "gl(" + str(q) + ")" : "s(gl(" + str(p) + ")⊕gl(" + str(q) + "))";
        v.push_back(satake(d, range_nodes(p, l - p), mirror_arrows(l, p), "su(" + str(p) + "," + str(q) + ")", mc,
                           p * p + q * q - 1));
      }
      if (l >= 3 && l % 2 == 1) {
        const std::size_t p = (l + 1) / 2;
        v.push_back(satake(d, {}, mirror_arrows(l, l), "su(" + str(p) + "," + str(p) + ")",
                           "s(gl(" + str(p) + ")⊕gl(" + str(p) + "))", 2 * p * p - 1));
      }
      v.push_back(satake(d, range_nodes(0, l), {}, "su(" + str(n) + ")", "sl(" + str(n) + ")", n * n - 1, true));
      break;
    }
    case 'B':
      for (std::size_t p = 1; p <= l; ++p) {
        const std::size_t q = 2 * l + 1 - p;
        v.push_back(satake(d, range_nodes(p, l), {}, "so(" + str(p) + "," + str(q) + ")", so_sum(p, q),
                           so_dim(p) + so_dim(q)));
      }
      v.push_back(satake(d, range_nodes(0, l), {}, "so(" + str(2 * l + 1) + ")", "so(" + str(2 * l + 1) + ")",
                         so_dim(2 * l + 1), true));
      break;
    case 'C': {
      v.push_back(satake(d, {}, {}, "sp(" + str(l) + ",R)", "gl(" + str(l) + ")", l * l));
      for (std::size_t p = 1; 2 * p <= l; ++p) {
        const std::size_t q = l - p;
        Nodes black;
        for (std::size_t i = 0; i < l; ++i)
          if (!(i % 2 == 1 && i < 2 * p)) black.push_back(i);
        v.push_back(satake(d, black, {}, "sp(" + str(p) + "," + str(q) + ")",
                           "sp(" + str(2 * p) + ")⊕sp(" + str(2 * q) + ")", p * (2 * p + 1) + q * (2 * q + 1)));
      }
      v.push_back(satake(d, range_nodes(0, l), {}, "sp(" + str(l) + ")", "sp(" + str(2 * l) + ")", l * (2 * l + 1), true));
      break;
    }
    case 'D': {
      auto so_pq = [&](std::size_t p) {
        const std::size_t q = 2 * l - p;
        return std::make_pair("so(" + str(p) + "," + str(q) + ")", std::make_pair(so_sum(p, q), so_dim(p) + so_dim(q)));
      };
      {
        auto [name, mc] = so_pq(l);
        v.push_back(satake(d, {}, {}, name, mc.first, mc.second));
      }
      {
        auto [name, mc] = so_pq(l - 1);
        v.push_back(satake(d, {}, {{l - 2, l - 1}}, name, mc.first, mc.second));
      }
      for (std::size_t p = 1; p + 2 <= l; ++p) {
        auto [name, mc] = so_pq(p);
        v.push_back(satake(d, range_nodes(p, l), {}, name, mc.first, mc.second));
      }
      if (l >= 5) {
        Nodes black;
        std::vector<std::pair<std::size_t, std::size_t>> arrows;
        if (l % 2 == 0) {
          for (std::size_t i = 0; i + 1 < l; i += 2) black.push_back(i);
        } else {
          for (std::size_t i = 0; i + 2 < l; i += 2) black.push_back(i);
          arrows.emplace_back(l - 2, l - 1);
        }
        v.push_back(satake(d, black, arrows, "so*(" + str(2 * l) + ")", "gl(" + str(l) + ")", l * l));
      }
      v.push_back(satake(d, range_nodes(0, l), {}, "so(" + str(2 * l) + ")", "so(" + str(2 * l) + ")", so_dim(2 * l), true));
      break;
    }
    default:
      break;
  }
  return v;
}

struct ExceptionalTables {
  std::map<std::string, DynkinDiagram> dynkin;
  std::map<std::string, std::vector<SatakeDiagram>> forms;
};

[[noreturn]] void bad_data(const std::string& what) { throw std::logic_error("exceptional diagram data: " + what); }

Nodes zero_based(const nlohmann::json& list, std::size_t rank) {
  Nodes out;
  for (const auto& v : list) {
    const std::size_t n = v.get<std::size_t>();
    if (n < 1 || n > rank) bad_data("node out of range");
    out.push_back(n - 1);
  }
  return out;
}

}  // namespace

bool arrows_extend_to_automorphism(const SatakeDiagram& s) {
  const auto& autos = s.diagram.automorphisms;
  return std::any_of(autos.begin(), autos.end(), [&](const std::vector<std::size_t>& g) {
    for (std::size_t v = 0; v < s.diagram.rank; ++v)
      if (!contains(s.painted, v) && g[v] != s.epsilon[v]) return false;
    return true;
  });
}

namespace {

ExceptionalTables load_tables() {
  ExceptionalTables t;
  const auto doc = nlohmann::json::parse(exceptional_diagram_data());
  for (const auto& r : doc.at("dynkin")) {
    DynkinDiagram d;
    d.series = r.at("series").get<std::string>().at(0);
    d.rank = r.at("rank").get<std::size_t>();
    for (const auto& e : r.at("edges")) d.edges.push_back({e.at(0).get<std::size_t>() - 1, e.at(1).get<std::size_t>() - 1, e.at(2).get<int>()});
    d.labels = r.at("labels").get<std::vector<int>>();
    d.automorphisms.push_back(identity_perm(d.rank));
    for (const auto& a : r.at("automorphisms")) d.automorphisms.push_back(zero_based(a, d.rank));
    if (d.labels != highest_root(d)) bad_data(d.name() + " labels differ from the maximal root");
    t.dynkin[d.name()] = d;
  }
  for (const auto& r : doc.at("satake")) {
    const std::string name = r.at("series").get<std::string>() + str(r.at("rank").get<std::size_t>());
    const auto it = t.dynkin.find(name);
    if (it == t.dynkin.end()) bad_data("no diagram " + name);
    const DynkinDiagram& d = it->second;
    if (r.at("labels").get<std::vector<int>>() != d.labels) bad_data(name + " labels");
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    for (const auto& a : r.at("arrows")) {
      const Nodes ab = zero_based(a, d.rank);
      arrows.emplace_back(ab.at(0), ab.at(1));
    }
    const auto& mc = r.at("maxCompact");
    SatakeDiagram s = satake(d, zero_based(r.at("painted"), d.rank), arrows, r.at("realFormName").get<std::string>(),
                             mc.at("name").get<std::string>(), mc.at("dim").get<std::size_t>(), r.value("compact", false));
    if (!arrows_extend_to_automorphism(s)) bad_data(s.real_form + " arrows are not a diagram automorphism");
    for (auto p : s.painted)
      if (s.epsilon[p] != p) bad_data(s.real_form + " arrow on a painted node");
    if (s.white_nodes() != r.at("whiteNodes").get<std::size_t>()) bad_data(s.real_form + " white node count");
    if (admissible_marks(s).size() != r.at("admissibleGradings").get<std::size_t>())
      bad_data(s.real_form + " admissible grading count");
    t.forms[name].push_back(std::move(s));
  }
  for (auto& [name, forms] : t.forms)
    std::stable_partition(forms.begin(), forms.end(), [](const SatakeDiagram& s) { return !s.compact; });
  return t;
}

const ExceptionalTables& tables() {
  static const ExceptionalTables t = load_tables();
  return t;
}

std::vector<Perm> stabilizer(const SatakeDiagram& s) {
  std::vector<Perm> out;
  for (const auto& g : s.diagram.automorphisms) {
    if (image(g, s.painted) != s.painted) continue;
    bool commutes = true;
    for (std::size_t i = 0; i < s.diagram.rank && commutes; ++i) commutes = g[s.epsilon[i]] == s.epsilon[g[i]];
    if (commutes) out.push_back(g);
  }
  return out;
}

std::vector<Nodes> raw_admissible(const DynkinDiagram& d) {
  std::vector<Nodes> out;
  for (std::size_t i = 0; i < d.rank; ++i)
    if (d.labels[i] == 2) out.push_back({i});
  for (std::size_t i = 0; i < d.rank; ++i)
    for (std::size_t j = i + 1; j < d.rank; ++j)
      if (d.labels[i] == 1 && d.labels[j] == 1) out.push_back({i, j});
  return out;
}

std::vector<GradingMark> unique_marks(const std::vector<Nodes>& marks, const std::vector<Perm>& group) {
  std::set<Nodes> seen;
  for (const auto& m : marks) seen.insert(canonical(m, group));
  std::vector<GradingMark> out;
  for (const auto& m : seen) out.push_back({m});
  return out;
}

// Connected component of the diagram with crossed nodes removed, in standard numbering.
struct Component {
  DynkinDiagram standard;
  Nodes original;  // standard index -> node of the ambient diagram
};

Component identify(const DynkinDiagram& d, const Nodes& nodes) {
  const std::size_t n = nodes.size();
  std::map<std::size_t, std::vector<std::size_t>> adj;
  std::vector<DynkinEdge> local;
  for (const auto& e : d.edges)
    if (contains(nodes, e.long_end) && contains(nodes, e.short_end)) {
      local.push_back(e);
      adj[e.long_end].push_back(e.short_end);
      adj[e.short_end].push_back(e.long_end);
    }
  auto degree = [&](std::size_t v) { return adj[v].size(); };
  auto walk = [&](std::size_t start, std::size_t avoid) {
    Nodes path{start};
    std::size_t prev = avoid, cur = start;
    for (bool moved = true; moved;) {
      moved = false;
      for (auto w : adj[cur])
        if (w != prev) {
          prev = cur;
          cur = w;
          path.push_back(cur);
          moved = true;
          break;
        }
    }
    return path;
  };
  const std::size_t none = d.rank;
  auto fail = [&]() -> Component { throw UnknownRealForm("unrecognized component of " + d.name()); };

  char series = 'A';
  Nodes order;
  const auto multiple = std::find_if(local.begin(), local.end(), [](const DynkinEdge& e) { return e.multiplicity > 1; });
  std::size_t branch = none;
  for (auto v : nodes)
    if (degree(v) > 2) {
      if (branch != none || degree(v) > 3) return fail();
      branch = v;
    }
  if (n == 1) {
    order = nodes;
  } else if (branch == none) {
    std::size_t end = none;
    for (auto v : nodes)
      if (degree(v) == 1) {
        end = v;
        break;
      }
    if (end == none) return fail();
    if (multiple == local.end()) {
      order = walk(end, none);
    } else if (multiple->multiplicity == 3) {
      if (n != 2) return fail();
      series = 'G';
      order = {multiple->short_end, multiple->long_end};
    } else if (n == 2) {
      series = 'B';
      order = {multiple->long_end, multiple->short_end};
    } else if (degree(multiple->short_end) == 1 || degree(multiple->long_end) == 1) {
      series = degree(multiple->short_end) == 1 ? 'B' : 'C';
      const std::size_t tail = series == 'B' ? multiple->short_end : multiple->long_end;
      order = walk(tail, none);
      std::reverse(order.begin(), order.end());
    } else {
      if (n != 4) return fail();
      series = 'F';
      order = walk(end, none);
      if (order[1] != multiple->long_end) std::reverse(order.begin(), order.end());
    }
  } else {
    if (multiple != local.end()) return fail();
    std::vector<Nodes> arms;
    for (auto w : adj[branch]) arms.push_back(walk(w, branch));
    std::stable_sort(arms.begin(), arms.end(), [](const Nodes& a, const Nodes& b) { return a.size() < b.size(); });
    const std::size_t a = arms[0].size(), b = arms[1].size(), c = arms[2].size();
    auto far_to_near = [](Nodes arm) {
      std::reverse(arm.begin(), arm.end());
      return arm;
    };
    if (a == 1 && b == 1) {
      series = 'D';
      order = far_to_near(arms[2]);
      order.push_back(branch);
      order.push_back(arms[0][0]);
      order.push_back(arms[1][0]);
    } else if (a == 1 && b == 2 && c == 2) {
      series = 'E';
      order = far_to_near(arms[1]);
      order.push_back(branch);
      order.insert(order.end(), arms[2].begin(), arms[2].end());
      order.push_back(arms[0][0]);
    } else if (a == 1 && b == 2 && (c == 3 || c == 4)) {
      series = 'E';
      order = {arms[1][1], arms[0][0], arms[1][0], branch};
      order.insert(order.end(), arms[2].begin(), arms[2].end());
    } else {
      return fail();
    }
  }
  if (order.size() != n) return fail();
  Component comp{dynkin(series, n), order};
  // The standard edges must be exactly the local ones under the node map.
  if (comp.standard.edges.size() != local.size()) return fail();
  for (const auto& e : comp.standard.edges) {
    const std::size_t lo = order[e.long_end], sh = order[e.short_end];
    const bool found = std::any_of(local.begin(), local.end(), [&](const DynkinEdge& f) {
      if (f.multiplicity != e.multiplicity) return false;
      return e.multiplicity == 1 ? ((f.long_end == lo && f.short_end == sh) || (f.long_end == sh && f.short_end == lo))
                                 : (f.long_end == lo && f.short_end == sh);
    });
    if (!found) return fail();
  }
  return comp;
}

std::string complex_name(const DynkinDiagram& d) {
  const std::size_t l = d.rank;
  switch (d.series) {
    case 'A':
      return "sl(" + str(l + 1) + ")";
    case 'B':
      return "so(" + str(2 * l + 1) + ")";
    case 'C':
      return "sp(" + str(2 * l) + ")";
    case 'D':
      return "so(" + str(2 * l) + ")";
    default:
      return d.name();
  }
}

}  // namespace

std::string DynkinDiagram::name() const { return std::string(1, series) + std::to_string(rank); }

std::vector<std::vector<int>> DynkinDiagram::cartan() const {
  std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) a[i][i] = 2;
  for (const auto& e : edges) {
    a[e.long_end][e.short_end] = -e.multiplicity;
    a[e.short_end][e.long_end] = -1;
  }
  return a;
}

DynkinDiagram dynkin(char series, std::size_t rank) {
  const std::string key = std::string(1, series) + std::to_string(rank);
  switch (series) {
    case 'G':
    case 'F':
    case 'E': {
      const auto& t = tables().dynkin;
      const auto it = t.find(key);
      if (it == t.end()) throw std::invalid_argument("no simple Lie algebra " + key);
      return it->second;
    }
    case 'A':
    case 'B':
    case 'C':
    case 'D':
      break;
    default:
      throw std::invalid_argument("unknown series " + key);
  }
  const std::size_t min_rank = series == 'A' ? 1 : series == 'B' ? 2 : series == 'C' ? 3 : 4;
  if (rank < min_rank) throw std::invalid_argument("rank too small for " + key);
  DynkinDiagram d;
  d.series = series;
  d.rank = rank;
  const std::size_t chain = series == 'D' ? rank - 1 : rank;
  for (std::size_t i = 0; i + 1 < chain; ++i) d.edges.push_back({i, i + 1, 1});
  if (series == 'B') d.edges.back() = {rank - 2, rank - 1, 2};
  if (series == 'C') d.edges.back() = {rank - 1, rank - 2, 2};
  if (series == 'D') d.edges.push_back({rank - 3, rank - 1, 1});
  d.labels = maximal_root_labels(series, rank);
  d.automorphisms.push_back(identity_perm(rank));
  if (series == 'A' && rank > 1) {
    Perm flip(rank);
    for (std::size_t i = 0; i < rank; ++i) flip[i] = rank - 1 - i;
    d.automorphisms.push_back(flip);
  }
  if (series == 'D') {
    if (rank == 4) {
      Nodes legs{0, 2, 3};
      std::sort(legs.begin(), legs.end());
      Nodes target = legs;
      while (std::next_permutation(target.begin(), target.end())) {
        Perm g = identity_perm(4);
        for (std::size_t k = 0; k < 3; ++k) g[legs[k]] = target[k];
        d.automorphisms.push_back(g);
      }
    } else {
      Perm swap = identity_perm(rank);
      std::swap(swap[rank - 2], swap[rank - 1]);
      d.automorphisms.push_back(swap);
    }
  }
  return d;
}

DynkinDiagram dynkin(const std::string& algebra) {
  auto matrix_size = [&](const std::string& prefix) -> std::size_t {
    if (algebra.rfind(prefix + "(", 0) != 0 || algebra.back() != ')') return 0;
    const std::string inner = algebra.substr(prefix.size() + 1, algebra.size() - prefix.size() - 2);
    if (inner.empty() || inner.find_first_not_of("0123456789") != std::string::npos) return 0;
    return std::stoul(inner);
  };
  if (algebra.size() >= 2 && std::isupper(static_cast<unsigned char>(algebra[0])) &&
      algebra.find_first_not_of("0123456789", 1) == std::string::npos)
    return dynkin(algebra[0], std::stoul(algebra.substr(1)));
  if (const auto n = matrix_size("sl"); n >= 2) return dynkin('A', n - 1);
  if (const auto n = matrix_size("so"); n >= 5) return n % 2 ? dynkin('B', (n - 1) / 2) : dynkin('D', n / 2);
  if (const auto n = matrix_size("sp"); n >= 2 && n % 2 == 0) return dynkin('C', n / 2);
  throw std::invalid_argument("unrecognized algebra " + algebra);
}

std::vector<std::vector<int>> positive_roots(const DynkinDiagram& d) {
  const auto a = d.cartan();
  const std::size_t n = d.rank;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> roots, layer;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> r(n, 0);
    r[i] = 1;
    layer.push_back(r);
    seen.insert(r);
  }
  while (!layer.empty()) {
    roots.insert(roots.end(), layer.begin(), layer.end());
    std::vector<std::vector<int>> next;
    for (const auto& beta : layer)
      for (std::size_t i = 0; i < n; ++i) {
        int p = 0;
        for (auto down = beta; down[i] > 0;) {
          --down[i];
          if (!seen.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * a[j][i];
        if (p - pairing <= 0) continue;
        auto up = beta;
        ++up[i];
        if (seen.insert(up).second) next.push_back(up);
      }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  return roots;
}

std::vector<int> highest_root(const DynkinDiagram& d) { return positive_roots(d).back(); }

std::size_t algebra_dim(const DynkinDiagram& d) { return d.rank + 2 * positive_roots(d).size(); }

int grading_depth(const DynkinDiagram& d, const GradingMark& m) {
  int s = 0;
  for (auto v : m.crossed) s += d.labels.at(v);
  return s;
}

std::array<std::size_t, 5> graded_dims(const DynkinDiagram& d, const GradingMark& m) {
  if (grading_depth(d, m) > 2) throw std::invalid_argument("grading of depth greater than 2");
  std::array<std::size_t, 5> out{0, 0, d.rank, 0, 0};
  for (const auto& r : positive_roots(d)) {
    int deg = 0;
    for (auto v : m.crossed) deg += r[v];
    if (deg == 0) out[2] += 2;
    else {
      ++out[2 + deg];
      ++out[2 - deg];
    }
  }
  return out;
}

std::vector<GradingMark> enumerate_admissible(const DynkinDiagram& d) {
  return unique_marks(raw_admissible(d), d.automorphisms);
}

std::vector<GradingMark> enumerate_fundamental(const DynkinDiagram& d, int max_depth) {
  std::vector<Nodes> marks;
  Nodes current;
  auto extend = [&](auto&& self, std::size_t from, int depth) -> void {
    if (!current.empty()) marks.push_back(current);
    for (std::size_t v = from; v < d.rank; ++v)
      if (depth + d.labels[v] <= max_depth) {
        current.push_back(v);
        self(self, v + 1, depth + d.labels[v]);
        current.pop_back();
      }
  };
  extend(extend, 0, 0);
  return unique_marks(marks, d.automorphisms);
}

std::vector<SatakeDiagram> real_forms(const DynkinDiagram& d) {
  if (d.series == 'G' || d.series == 'F' || d.series == 'E') {
    const auto& f = tables().forms;
    const auto it = f.find(d.name());
    if (it == f.end()) throw UnknownRealForm("no real forms recorded for " + d.name());
    return it->second;
  }
  return classical_forms(d);
}

SatakeDiagram find_real_form(const DynkinDiagram& d, const std::string& name) {
  for (auto& s : real_forms(d))
    if (s.real_form == name) return s;
  throw UnknownRealForm("no real form " + name + " of " + d.name());
}

bool compatible(const SatakeDiagram& s, const GradingMark& m) {
  if (s.compact) return false;
  for (auto v : m.crossed) {
    if (contains(s.painted, v)) return false;
    if (std::find(m.crossed.begin(), m.crossed.end(), s.epsilon[v]) == m.crossed.end()) return false;
  }
  return true;
}

std::vector<SatakeDiagram> compatible_real_forms(const DynkinDiagram& d, const GradingMark& m) {
  std::vector<SatakeDiagram> out;
  for (const auto& s : real_forms(d)) {
    const bool any = std::any_of(d.automorphisms.begin(), d.automorphisms.end(),
                                 [&](const Perm& g) { return compatible(s, GradingMark{image(g, m.crossed)}); });
    if (any) out.push_back(s);
  }
  return out;
}

std::vector<GradingMark> admissible_marks(const SatakeDiagram& s) {
  std::vector<Nodes> marks;
  for (auto& m : raw_admissible(s.diagram))
    if (compatible(s, GradingMark{m})) marks.push_back(m);
  return unique_marks(marks, stabilizer(s));
}

std::size_t count_kts(const DynkinDiagram& d) {
  std::size_t total = 0;
  for (const auto& s : real_forms(d)) total += admissible_marks(s).size();
  return total;
}

std::size_t kts_count_formula(char series, std::size_t l) {
  switch (series) {
    case 'A':
      if (l % 2 == 1) {
        const std::size_t m = (l - 1) / 2;
        return m % 2 == 0 ? (7 * m * m + 10 * m) / 4 : (7 * m * m + 10 * m - 1) / 4;
      } else {
        const std::size_t m = l / 2;
        return (3 * m * m + m) / 2;
      }
    case 'B':
      return l * (l - 1) / 2;
    case 'C':
      if (l % 2 == 1) {
        const std::size_t m = (l - 1) / 2;
        return (m * m + 5 * m) / 2;
      } else {
        const std::size_t m = l / 2;
        return (m * m + 5 * m - 4) / 2;
      }
    case 'D':
      if (l == 4) return 5;
      if (l % 2 == 1) {
        const std::size_t m = (l - 1) / 2;
        return 2 * m * m + 2 * m;
      } else {
        const std::size_t m = l / 2;
        return 2 * m * m - 1;
      }
    case 'G':
      if (l == 2) return 1;
      break;
    case 'F':
      if (l == 4) return 3;
      break;
    case 'E':
      if (l == 6) return 8;
      if (l == 7) return 7;
      if (l == 8) return 4;
      break;
    default:
      break;
  }
  throw std::invalid_argument("no simple Lie algebra " + std::string(1, series) + std::to_string(l));
}

DerivationPrediction predict_derivations(const SatakeDiagram& s, const GradingMark& m) {
  if (!compatible(s, m)) throw std::invalid_argument("mark is not compatible with " + s.real_form);
  const DynkinDiagram& d = s.diagram;
  std::vector<std::size_t> comp_of(d.rank, d.rank);
  std::vector<Nodes> comps;
  for (std::size_t start = 0; start < d.rank; ++start) {
    if (contains(m.crossed, start) || comp_of[start] != d.rank) continue;
    Nodes members, stack{start};
    comp_of[start] = comps.size();
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (const auto& e : d.edges)
        for (auto [a, b] : {std::pair{e.long_end, e.short_end}, std::pair{e.short_end, e.long_end}})
          if (a == v && !contains(m.crossed, b) && comp_of[b] == d.rank) {
            comp_of[b] = comps.size();
            stack.push_back(b);
          }
    }
    std::sort(members.begin(), members.end());
    comps.push_back(members);
  }

  DerivationPrediction out;
  std::vector<std::string> names;
  std::vector<bool> done(comps.size(), false);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (done[c]) continue;
    done[c] = true;
    const Component comp = identify(d, comps[c]);
    const std::size_t partner = comp_of[s.epsilon[comps[c][0]]];
    if (partner != c) {
      done[partner] = true;
      names.push_back(complex_name(comp.standard));
      out.dim += algebra_dim(comp.standard);
      continue;
    }
    const std::size_t n = comp.original.size();
    std::map<std::size_t, std::size_t> local;
    for (std::size_t k = 0; k < n; ++k) local[comp.original[k]] = k;
    Nodes painted;
    Perm eps(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (contains(s.painted, comp.original[k])) painted.push_back(k);
      eps[k] = local.at(s.epsilon[comp.original[k]]);
    }
    bool matched = false;
    for (const auto& rf : real_forms(comp.standard)) {
      for (const auto& g : comp.standard.automorphisms) {
        if (image(g, rf.painted) != painted) continue;
        bool same = true;
        for (std::size_t k = 0; k < n && same; ++k) same = g[rf.epsilon[k]] == eps[g[k]];
        if (!same) continue;
        names.push_back(rf.max_compact);
        out.dim += rf.max_compact_dim;
        matched = true;
        break;
      }
      if (matched) break;
    }
    if (!matched) throw UnknownRealForm("no real form of " + comp.standard.name() + " matches the restriction of " + s.real_form);
  }
  for (const auto& nm : names) {
    if (nm == "0") continue;
    if (!out.name.empty()) out.name += "⊕";
    out.name += nm;
  }
  if (out.name.empty()) out.name = "0";
  out.center_possible = m.crossed.size() == 2;
  out.candidate_dims = {out.dim};
  if (out.center_possible) out.candidate_dims.push_back(out.dim + 1);
  return out;
}

GradingMark standard_mark(const std::string& algebra, const std::string& kind) {
  static const std::map<std::pair<std::string, std::string>, Nodes> marks{
      {{"G2", "contact"}, {2}},          {{"F4", "contact"}, {1}},          {{"F4", "extended-poincare"}, {4}},
      {{"E6", "contact"}, {6}},          {{"E6", "extended-poincare"}, {1, 5}}, {{"E6", "special"}, {2}},
      {{"E7", "contact"}, {1}},          {{"E7", "extended-poincare"}, {6}}, {{"E7", "special"}, {2}},
      {{"E8", "contact"}, {8}},          {{"E8", "extended-poincare"}, {1}},
  };
  const auto it = marks.find({algebra, kind});
  if (it == marks.end()) throw std::invalid_argument("no standard " + kind + " grading of " + algebra);
  GradingMark m;
  for (auto v : it->second) m.crossed.push_back(v - 1);
  return m;
}

const std::string& exceptional_diagram_data() {
  static const std::string data = generated::exceptional_diagrams_json;
  return data;
}

}  // namespace kantor
