#include "polaritylab/graph.hpp"

#include <string>

namespace polaritylab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::vertex_out_of_range: return "VertexOutOfRange";
    case ErrorCode::loop_rejected: return "LoopRejected";
    case ErrorCode::cap_exceeded: return "CapExceeded";
    case ErrorCode::malformed_header: return "MalformedHeader";
    case ErrorCode::truncated_body: return "TruncatedBody";
    case ErrorCode::trailing_garbage: return "TrailingGarbage";
    case ErrorCode::unknown_name: return "UnknownName";
    case ErrorCode::bad_parameter: return "BadParameter";
    case ErrorCode::not_a_p4: return "NotAP4";
    case ErrorCode::not_in_class: return "NotInClass";
    case ErrorCode::unknown_id: return "UnknownId";
    case ErrorCode::unknown_claim: return "UnknownClaim";
  }
  return "Unknown";
}

namespace {

void check_order(int n) {
  if (n < 0 || n > Graph::kMaxOrder)
    throw Error(ErrorCode::cap_exceeded,
                "order " + std::to_string(n) + " outside [0, " + std::to_string(Graph::kMaxOrder) + "]");
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw Error(ErrorCode::vertex_out_of_range,
                "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorCode::loop_rejected, "loop at vertex " + std::to_string(u));
  rows_[u] |= std::uint32_t{1} << v;
  rows_[v] |= std::uint32_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u] &= ~(std::uint32_t{1} << v);
  rows_[v] &= ~(std::uint32_t{1} << u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  const VertexSet all = g.vertices();
  for (int u = 0; u < g.order(); ++u)
    for (int v : all - g.neighbors(u) - VertexSet::single(u))
      if (u < v) out.add_edge(u, v);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  check_order(g.order() + h.order());
  Graph out(g.order() + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  const int shift = g.order();
  for (auto [u, v] : h.edges()) out.add_edge(u + shift, v + shift);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet subset) {
  if (!subset.subset_of(g.vertices()))
    throw Error(ErrorCode::vertex_out_of_range, "subset not contained in vertex set");
  const std::vector<int> keep = subset.to_vector();
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

Graph delete_vertex(const Graph& g, int v) {
  VertexSet rest = g.vertices();
  rest.erase(v);
  return induced_subgraph(g, rest);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next = (next & within) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

std::vector<VertexSet> co_components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= within - g.neighbors(v);
      next -= comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_clique(const Graph& g, VertexSet s) {
  for (int v : s)
    if (!(s - VertexSet::single(v)).subset_of(g.neighbors(v))) return false;
  return true;
}

bool is_independent(const Graph& g, VertexSet s) {
  for (int v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

bool completely_adjacent(const Graph& g, VertexSet a, VertexSet b) {
  for (int v : a)
    if (!b.subset_of(g.neighbors(v))) return false;
  return true;
}

bool completely_nonadjacent(const Graph& g, VertexSet a, VertexSet b) {
  for (int v : a)
    if (g.neighbors(v).intersects(b)) return false;
  return true;
}

Graph copies(int n, const Graph& g) {
  Graph out;
  for (int i = 0; i < n; ++i) out = disjoint_union(out, g);
  return out;
}

}  // namespace polaritylab
