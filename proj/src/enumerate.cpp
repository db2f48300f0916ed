#include "polaritylab/enumerate.hpp"

#include <algorithm>
#include <string>

namespace polaritylab {

namespace {

void check_cap(int n, int cap) {
  if (n > cap || n > Graph::kMaxOrder)
    throw Error(ErrorCode::cap_exceeded,
                "enumeration order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

std::vector<KeyedGraph> children_of(const KeyedGraph& parent) {
  const Graph& p = parent.graph;
  const int m = p.order();
  std::vector<KeyedGraph> out;
  const std::uint32_t subsets = std::uint32_t{1} << m;
  for (std::uint32_t s = 0; s < subsets; ++s) {
    Graph child(m + 1);
    for (auto [a, b] : p.edges()) child.add_edge(a, b);
    for (int u : VertexSet(s)) child.add_edge(u, m);

    int min_degree = child.degree(m);
    for (int u = 0; u < m; ++u) min_degree = std::min(min_degree, child.degree(u));
    if (child.degree(m) != min_degree) continue;

    bool accept = true;
    for (int u = 0; u < m && accept; ++u) {
      if (child.degree(u) != min_degree) continue;
      if (canonical_key(delete_vertex(child, u)) < parent.key) accept = false;
    }
    if (accept) out.push_back(KeyedGraph::of(child));
  }
  sort_unique(out);
  return out;
}

}  // namespace

std::vector<KeyedGraph> extend_level(const std::vector<KeyedGraph>& parents, Execution exec) {
  auto per_parent = indexed_map<std::vector<KeyedGraph>>(
      parents.size(), [&](std::size_t i) { return children_of(parents[i]); }, exec);
  std::vector<KeyedGraph> level;
  for (auto& kids : per_parent) level.insert(level.end(), kids.begin(), kids.end());
  std::sort(level.begin(), level.end());
  return level;
}

std::vector<KeyedGraph> enumerate_order(int n, Execution exec, int cap) {
  check_cap(n, cap);
  if (n <= 0) return {};
  std::vector<KeyedGraph> level{KeyedGraph::of(Graph(1))};
  for (int m = 2; m <= n; ++m) level = extend_level(level, exec);
  return level;
}

std::vector<KeyedGraph> enumerate_graphs(int n_max, Execution exec, int cap) {
  check_cap(n_max, cap);
  std::vector<KeyedGraph> all;
  if (n_max <= 0) return all;
  std::vector<KeyedGraph> level{KeyedGraph::of(Graph(1))};
  all = level;
  for (int m = 2; m <= n_max; ++m) {
    level = extend_level(level, exec);
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

}  // namespace polaritylab
