#include "polaritylab/obstructions.hpp"

#include <charconv>

#include <json.hpp>

#include "polaritylab/generate.hpp"
#include "polaritylab/graph6.hpp"
#include "polaritylab/named.hpp"

namespace polaritylab {

ObstructionReport is_minimal_obstruction(const Graph& g, const PolarSpec& spec) {
  ObstructionReport report;
  report.graph = g;
  report.spec = spec;
  report.canonical = canonical_key(g);
  report.is_obstruction = !satisfies(g, spec);
  if (!report.is_obstruction) return report;
  for (int v = 0; v < g.order(); ++v) {
    auto p = find_polar_partition(delete_vertex(g, v), spec);
    if (!p) {
      report.deletion_witnesses.clear();
      return report;
    }
    report.deletion_witnesses.emplace_back(v, *p);
  }
  report.is_minimal = true;
  return report;
}

bool minimal_obstruction(const Graph& g, const PolarSpec& spec) {
  if (satisfies(g, spec)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (!satisfies(delete_vertex(g, v), spec)) return false;
  return true;
}

std::vector<KeyedGraph> filter_minimal_obstructions(const std::vector<KeyedGraph>& source, const PolarSpec& spec,
                                                    Execution exec) {
  const auto keep = indexed_map<char>(
      source.size(), [&](std::size_t i) { return static_cast<char>(minimal_obstruction(source[i].graph, spec)); },
      exec);
  std::vector<KeyedGraph> out;
  for (std::size_t i = 0; i < source.size(); ++i)
    if (keep[i]) out.push_back(source[i]);
  sort_unique(out);
  return out;
}

std::vector<KeyedGraph> enumerate_minimal_obstructions(ClassId id, const PolarSpec& spec, int n_max, Execution exec,
                                                       int cap) {
  return filter_minimal_obstructions(generate_class(id, n_max, exec, cap), spec, exec);
}

std::vector<int> essential_numbers(ClassId id) {
  switch (id) {
    case ClassId::p4_sparse: return {1, 2, 3, 7};
    case ClassId::p4_extendible: return {1, 2, 3, 7, 10, 11, 12};
    default: break;
  }
  throw Error(ErrorCode::bad_parameter, "essential lists exist for p4sparse and p4extendible");
}

std::vector<Graph> s1_fixed_family(int s) {
  if (s < 1) throw Error(ErrorCode::bad_parameter, "s must be >= 1");
  using namespace named;
  return {
      copies(2, complete(s + 1)),
      disjoint_union(complete(2), join(complete(s), empty(2))),
      disjoint_union(complete(1), join(complete(s - 1), cycle(4))),
  };
}

std::vector<KeyedGraph> s1_pool(ClassId id, int k) {
  if (id != ClassId::p4_sparse && id != ClassId::p4_extendible)
    throw Error(ErrorCode::bad_parameter, "pools exist for p4sparse and p4extendible");
  std::vector<KeyedGraph> out;
  if (k == 0) {
    out.push_back(KeyedGraph::of(named::complete(2)));
  } else if (k == 1) {
    out.push_back(KeyedGraph::of(named::cycle(4)));
    if (id == ClassId::p4_extendible) out.push_back(KeyedGraph::of(named::cycle(5)));
  } else {
    const PolarSpec wider = PolarSpec::sk_polar(1, k + 1);
    for (const Graph& g : s1_fixed_family(k)) {
      const Graph co = complement(g);
      if (satisfies(co, wider)) out.push_back(KeyedGraph::of(co));
    }
  }
  sort_unique(out);
  return out;
}

namespace {

struct PoolItem {
  int weight;  // k + 1
  const Graph* graph;
};

void combine(const std::vector<PoolItem>& items, std::size_t from, int remaining, int order, int limit,
             std::vector<const Graph*>& chosen, std::vector<KeyedGraph>& out) {
  if (remaining == 0) {
    if (chosen.size() < 2) return;
    Graph sum;
    for (const Graph* g : chosen) sum = disjoint_union(sum, *g);
    out.push_back(KeyedGraph::of(complement(sum)));
    return;
  }
  for (std::size_t i = from; i < items.size(); ++i) {
    if (items[i].weight > remaining) continue;
    const int next = order + items[i].graph->order();
    if (next > limit) continue;
    chosen.push_back(items[i].graph);
    combine(items, i, remaining - items[i].weight, next, limit, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<KeyedGraph> construct_s1_obstructions(ClassId id, int s, std::optional<int> max_order) {
  if (s < 2) throw Error(ErrorCode::bad_parameter, "s must be >= 2");
  const int limit = max_order.value_or(Graph::kMaxOrder);
  std::vector<KeyedGraph> out;
  auto add = [&](const Graph& g) {
    if (g.order() <= limit) out.push_back(KeyedGraph::of(g));
  };
  for (int e : essential_numbers(id)) add(named::e(e));
  if (2 * (s + 1) > Graph::kMaxOrder) throw Error(ErrorCode::cap_exceeded, "2K_{s+1} exceeds the vertex cap");
  for (const Graph& g : s1_fixed_family(s)) add(g);

  std::vector<std::vector<KeyedGraph>> pools;
  for (int k = 0; k < s; ++k) pools.push_back(s1_pool(id, k));
  std::vector<PoolItem> items;
  for (int k = 0; k < s; ++k)
    for (const auto& g : pools[k]) items.push_back({k + 1, &g.graph});
  std::vector<const Graph*> chosen;
  combine(items, 0, s + 1, 0, limit, chosen, out);
  sort_unique(out);
  return out;
}

// ---------------------------------------------------------------------------
// Reference lists

namespace {

struct CatalogName {
  std::string_view name;
  CatalogId::Kind kind;
};

constexpr CatalogName kCatalogNames[] = {
    {"unipolar-sparse", CatalogId::Kind::unipolar_sparse},
    {"unipolar-extendible", CatalogId::Kind::unipolar_extendible},
    {"comonopolar-sparse", CatalogId::Kind::co_monopolar_sparse},
    {"comonopolar-extendible", CatalogId::Kind::co_monopolar_extendible},
    {"monopolar-sparse", CatalogId::Kind::monopolar_sparse},
    {"monopolar-extendible", CatalogId::Kind::monopolar_extendible},
    {"polar-sparse", CatalogId::Kind::polar_sparse},
    {"polar-extendible", CatalogId::Kind::polar_extendible},
    {"essentials", CatalogId::Kind::essentials},
};

std::vector<KeyedGraph> keyed(const std::vector<Graph>& graphs) {
  std::vector<KeyedGraph> out;
  for (const Graph& g : graphs) out.push_back(KeyedGraph::of(g));
  sort_unique(out);
  return out;
}

std::vector<Graph> essentials_of(ClassId id) {
  std::vector<Graph> out;
  for (int e : essential_numbers(id)) out.push_back(named::e(e));
  return out;
}

std::vector<Graph> polar_list(ClassId id) {
  const Graph p3 = named::path(3);
  std::vector<Graph> out;
  for (const Graph& e : essentials_of(id)) {
    const Graph g = disjoint_union(p3, complement(e));
    out.push_back(g);
    out.push_back(complement(g));
  }
  return out;
}

}  // namespace

CatalogId parse_catalog_id(std::string_view text) {
  for (const auto& c : kCatalogNames)
    if (text == c.name) return {c.kind};
  if (text.starts_with("s1-fixed:")) {
    text.remove_prefix(9);
    int s = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), s);
    if (ec == std::errc() && ptr == text.data() + text.size() && s >= 2 && 2 * (s + 1) <= Graph::kMaxOrder)
      return {CatalogId::Kind::s1_fixed, s};
  }
  throw Error(ErrorCode::unknown_id, "unknown catalogue id '" + std::string(text) + "'");
}

std::string to_string(const CatalogId& id) {
  if (id.kind == CatalogId::Kind::s1_fixed) return "s1-fixed:" + std::to_string(id.s);
  for (const auto& c : kCatalogNames)
    if (c.kind == id.kind) return std::string(c.name);
  return "?";
}

std::vector<CatalogId> all_catalog_ids() {
  std::vector<CatalogId> out;
  for (const auto& c : kCatalogNames) out.push_back({c.kind});
  out.push_back({CatalogId::Kind::s1_fixed, 2});
  return out;
}

std::vector<KeyedGraph> catalog_list(const CatalogId& id) {
  using K = CatalogId::Kind;
  switch (id.kind) {
    case K::unipolar_sparse: return keyed({copies(2, named::path(3)), named::complete_bipartite(2, 3)});
    case K::unipolar_extendible:
      return keyed({copies(2, named::path(3)), named::complete_bipartite(2, 3), named::cycle(5)});
    case K::co_monopolar_sparse: return keyed(essentials_of(ClassId::p4_sparse));
    case K::co_monopolar_extendible: return keyed(essentials_of(ClassId::p4_extendible));
    case K::monopolar_sparse:
    case K::monopolar_extendible: {
      std::vector<Graph> out;
      for (const Graph& e :
           essentials_of(id.kind == K::monopolar_sparse ? ClassId::p4_sparse : ClassId::p4_extendible))
        out.push_back(complement(e));
      return keyed(out);
    }
    case K::s1_fixed:
      if (id.s < 2 || 2 * (id.s + 1) > Graph::kMaxOrder) throw Error(ErrorCode::unknown_id, "bad s1-fixed parameter");
      return keyed(s1_fixed_family(id.s));
    case K::polar_sparse: return keyed(polar_list(ClassId::p4_sparse));
    case K::polar_extendible: return keyed(polar_list(ClassId::p4_extendible));
    case K::essentials: {
      std::vector<Graph> out;
      for (int i = 1; i <= 13; ++i) out.push_back(named::e(i));
      return keyed(out);
    }
  }
  throw Error(ErrorCode::unknown_id, "unknown catalogue id");
}

std::optional<std::pair<ClassId, PolarSpec>> catalog_property(const CatalogId& id) {
  using K = CatalogId::Kind;
  const PolarSpec inf1 = PolarSpec::sk_polar(PartBound::inf(), 1);
  switch (id.kind) {
    case K::unipolar_sparse: return std::pair{ClassId::p4_sparse, PolarSpec::unipolar()};
    case K::unipolar_extendible: return std::pair{ClassId::p4_extendible, PolarSpec::unipolar()};
    case K::co_monopolar_sparse: return std::pair{ClassId::p4_sparse, inf1};
    case K::co_monopolar_extendible: return std::pair{ClassId::p4_extendible, inf1};
    case K::monopolar_sparse: return std::pair{ClassId::p4_sparse, PolarSpec::monopolar()};
    case K::monopolar_extendible: return std::pair{ClassId::p4_extendible, PolarSpec::monopolar()};
    case K::polar_sparse: return std::pair{ClassId::p4_sparse, PolarSpec::polar()};
    case K::polar_extendible: return std::pair{ClassId::p4_extendible, PolarSpec::polar()};
    case K::s1_fixed:
    case K::essentials: break;
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> antichain_violation(const std::vector<Graph>& graphs) {
  std::vector<CanonicalKey> keys;
  for (const Graph& g : graphs) keys.push_back(canonical_key(g));
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = 0; j < graphs.size(); ++j) {
      if (i == j || keys[i] == keys[j]) continue;
      if (contains_induced(graphs[j], graphs[i])) return std::pair{i, j};
    }
  return std::nullopt;
}

std::vector<Graph> graphs_of(const std::vector<KeyedGraph>& keyed_graphs) {
  std::vector<Graph> out;
  for (const auto& k : keyed_graphs) out.push_back(k.graph);
  return out;
}

// ---------------------------------------------------------------------------
// Serialization

std::string to_graph6_lines(const std::vector<Graph>& graphs) {
  std::string out;
  for (const Graph& g : graphs) {
    out += graph6_encode(g);
    out += '\n';
  }
  return out;
}

std::vector<Graph> from_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  while (!text.empty()) {
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.push_back(graph6_decode(line));
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return out;
}

std::string obstruction_sidecar(const std::vector<Graph>& graphs, const PolarSpec& spec) {
  nlohmann::json doc = nlohmann::json::array();
  for (const Graph& g : graphs) {
    const ObstructionReport report = is_minimal_obstruction(g, spec);
    nlohmann::json entry{{"graph6", graph6_encode(g)},
                         {"canonical", report.canonical.hex()},
                         {"order", g.order()},
                         {"property", to_string(spec)},
                         {"minimal", report.is_minimal}};
    if (report.is_minimal) {
      nlohmann::json witnesses = nlohmann::json::array();
      for (const auto& [v, p] : report.deletion_witnesses)
        witnesses.push_back({{"deleted", v}, {"a", p.a.to_vector()}, {"b", p.b.to_vector()}});
      entry["witnesses"] = std::move(witnesses);
    }
    doc.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace polaritylab
