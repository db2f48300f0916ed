#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "polaritylab/error.hpp"
#include "polaritylab/vertex_set.hpp"

namespace polaritylab {

using Edge = std::pair<int, int>;

/// Small simple undirected graph stored as a symmetric bit matrix.
///
/// Row v holds N(v). Rows at indices >= order() are always zero, so two
/// graphs compare equal exactly when they have the same order and edge set.
class Graph {
public:
  static constexpr int kMaxOrder = 32;

  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::first_n(n_); }
  VertexSet neighbors(int v) const { return VertexSet(rows_[v]); }
  std::uint32_t row(int v) const { return rows_[v]; }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  int degree(int v) const { return neighbors(v).size(); }
  int edge_count() const;
  std::vector<Edge> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool operator==(const Graph&) const = default;

private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<std::uint32_t, kMaxOrder> rows_{};
};

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
/// Vertices of `subset` are renumbered in ascending order.
Graph induced_subgraph(const Graph& g, VertexSet subset);
Graph delete_vertex(const Graph& g, int v);
/// Vertex `v` of g becomes vertex `perm[v]` of the result.
Graph relabel(const Graph& g, std::span<const int> perm);

/// Connected components of g[within], ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }
/// Components of the complement of g[within] (the co-components).
std::vector<VertexSet> co_components(const Graph& g, VertexSet within);
inline std::vector<VertexSet> co_components(const Graph& g) { return co_components(g, g.vertices()); }

bool is_connected(const Graph& g);
bool is_clique(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);
/// Every vertex of a is adjacent to every vertex of b.
bool completely_adjacent(const Graph& g, VertexSet a, VertexSet b);
bool completely_nonadjacent(const Graph& g, VertexSet a, VertexSet b);

/// n copies of g, disjointly.
Graph copies(int n, const Graph& g);

}  // namespace polaritylab
