#include "polaritylab/named.hpp"

#include <charconv>

namespace polaritylab {

namespace named {

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw Error(ErrorCode::bad_parameter, "cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete(int n) { return complement(Graph(n)); }
Graph empty(int n) { return Graph(n); }
Graph complete_bipartite(int a, int b) { return join(empty(a), empty(b)); }
Graph e(int i) { return catalog(NamedGraph::e(i)); }

}  // namespace named

namespace {

// Path 0-1-2-3 plus a fifth vertex 4 with the given neighbours; this is how
// the five-vertex extension graphs are drawn.
Graph path_plus(std::initializer_list<int> attach) {
  Graph g = named::path(5);
  g.remove_edge(3, 4);
  for (int v : attach) g.add_edge(4, v);
  return g;
}

Graph headless_spider(int j, bool thin) {
  if (j < 2) throw Error(ErrorCode::bad_parameter, "spider needs j >= 2");
  Graph g = disjoint_union(named::complete(j), named::empty(j));
  for (int i = 0; i < j; ++i)
    for (int k = 0; k < j; ++k)
      if ((i == k) == thin) g.add_edge(j + i, k);
  return g;
}

Graph essential(int i) {
  using namespace named;
  const Graph k1 = complete(1);
  const Graph k2 = complete(2);
  switch (i) {
    case 1: return disjoint_union(k1, copies(2, k2));
    case 2: return copies(2, path(3));
    case 3: return disjoint_union(cycle(4), empty(2));
    case 4: return complement(copies(3, k2));
    case 5: return complement(disjoint_union(k2, cycle(4)));
    case 6: return disjoint_union(k1, catalog(NamedGraph::of(NamedGraph::Kind::wheel4)));
    case 7: return disjoint_union(k1, complement(disjoint_union(path(3), k2)));
    case 8: return disjoint_union(k2, join(k2, empty(2)));
    case 9: return copies(2, complete(3));
    case 10: return disjoint_union(k1, cycle(5));
    case 11: return disjoint_union(k1, catalog(NamedGraph::of(NamedGraph::Kind::banner)));
    case 12: return disjoint_union(k1, catalog(NamedGraph::of(NamedGraph::Kind::house)));
    case 13: return complement(disjoint_union(k2, cycle(5)));
    default: break;
  }
  throw Error(ErrorCode::unknown_name, "E" + std::to_string(i));
}

void require_params(const NamedGraph& name, std::size_t count) {
  if (name.params.size() != count) throw Error(ErrorCode::unknown_name, "wrong number of parameters");
  for (int p : name.params)
    if (p < 0) throw Error(ErrorCode::bad_parameter, "negative parameter");
}

}  // namespace

Graph catalog(const NamedGraph& name) {
  using K = NamedGraph::Kind;
  switch (name.kind) {
    case K::path: require_params(name, 1); return named::path(name.params[0]);
    case K::cycle: require_params(name, 1); return named::cycle(name.params[0]);
    case K::complete: require_params(name, 1); return named::complete(name.params[0]);
    case K::complete_bipartite:
      require_params(name, 2);
      return named::complete_bipartite(name.params[0], name.params[1]);
    case K::complete_multipartite: {
      require_params(name, name.params.size());
      Graph g;
      for (int part : name.params) g = join(g, named::empty(part));
      return g;
    }
    case K::wheel4: return join(named::complete(1), named::cycle(4));
    case K::house: return path_plus({0, 2, 3});
    case K::banner: return path_plus({0, 2});
    case K::co_banner: return path_plus({0, 1});
    case K::fork: return path_plus({1});
    case K::kite: return path_plus({0, 1, 2});
    case K::net: return headless_spider(3, true);
    case K::bull: {
      Graph g = disjoint_union(named::complete(3), named::empty(2));
      g.add_edge(0, 3);
      g.add_edge(1, 4);
      return g;
    }
    case K::thin_spider: require_params(name, 1); return headless_spider(name.params[0], true);
    case K::thick_spider: require_params(name, 1); return headless_spider(name.params[0], false);
    case K::essential: require_params(name, 1); return essential(name.params[0]);
  }
  throw Error(ErrorCode::unknown_name, "unhandled catalogue entry");
}

namespace {

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data()) throw Error(ErrorCode::unknown_name, std::string(text));
    out.push_back(value);
    text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
    if (!text.empty()) {
      if (text.front() != ',') throw Error(ErrorCode::unknown_name, std::string(text));
      text.remove_prefix(1);
      if (text.empty()) throw Error(ErrorCode::unknown_name, "trailing comma");
    }
  }
  return out;
}

}  // namespace

NamedGraph parse_named_graph(std::string_view text) {
  using K = NamedGraph::Kind;
  struct Fixed {
    std::string_view name;
    K kind;
  };
  static constexpr Fixed kFixed[] = {
      {"W4", K::wheel4},       {"house", K::house}, {"co-P5", K::house}, {"banner", K::banner},
      {"P", K::banner},        {"co-banner", K::co_banner}, {"co-P", K::co_banner},
      {"fork", K::fork},       {"F", K::fork},      {"kite", K::kite},   {"co-F", K::kite},
      {"net", K::net},         {"bull", K::bull},
  };
  for (const auto& f : kFixed)
    if (text == f.name) return NamedGraph::of(f.kind);

  auto with_prefix = [&](std::string_view prefix, std::vector<int>& params) {
    if (!text.starts_with(prefix) || text.size() == prefix.size()) return false;
    params = parse_ints(text.substr(prefix.size()));
    return true;
  };
  std::vector<int> p;
  if (with_prefix("thin-spider:", p) && p.size() == 1) return {K::thin_spider, p};
  if (with_prefix("thick-spider:", p) && p.size() == 1) return {K::thick_spider, p};
  if (with_prefix("Kmp:", p)) return {K::complete_multipartite, p};
  if (with_prefix("E", p) && p.size() == 1 && p[0] >= 1 && p[0] <= 13) return {K::essential, p};
  if (with_prefix("P", p) && p.size() == 1) return {K::path, p};
  if (with_prefix("C", p) && p.size() == 1) return {K::cycle, p};
  if (with_prefix("K", p)) {
    if (p.size() == 1) return {K::complete, p};
    if (p.size() == 2) return {K::complete_bipartite, p};
  }
  throw Error(ErrorCode::unknown_name, std::string(text));
}

}  // namespace polaritylab
