#include "polaritylab/generate.hpp"

#include "polaritylab/named.hpp"

namespace polaritylab {

namespace {

enum class Op { base, union_, join, sigma, tau, sep };

struct Task {
  Op op;
  const Graph* a = nullptr;
  const Graph* b = nullptr;
  int j = 0;
  ExtKind ext = ExtKind::p4;
  Graph base{};
};

Task binary(Op op, const Graph& a, const Graph& b) { return {op, &a, &b, 0, ExtKind::p4, {}}; }
Task unary(Op op, const Graph& h, int j, ExtKind ext = ExtKind::p4) { return {op, &h, nullptr, j, ext, {}}; }

Graph apply(const Task& t) {
  switch (t.op) {
    case Op::base: return t.base;
    case Op::union_: return disjoint_union(*t.a, *t.b);
    case Op::join: return join(*t.a, *t.b);
    case Op::sigma: return sigma_j(*t.a, t.j);
    case Op::tau: return tau_j(*t.a, t.j);
    case Op::sep: return sigma_sep(t.ext, *t.a);
  }
  return {};
}

}  // namespace

std::vector<KeyedGraph> generate_class(ClassId id, int n_max, Execution exec, int cap) {
  if (n_max > cap) throw Error(ErrorCode::cap_exceeded, "order exceeds the enumeration cap");
  if (n_max < 1) return {};

  std::vector<std::vector<KeyedGraph>> levels(n_max + 1);
  levels[0].push_back(KeyedGraph::of(Graph(0)));
  const bool extendible = id == ClassId::p4_extendible || id == ClassId::six_two;

  for (int m = 1; m <= n_max; ++m) {
    std::vector<Task> tasks;
    if (m == 1) tasks.push_back({Op::base, nullptr, nullptr, 0, ExtKind::p4, Graph(1)});
    if (extendible)
      for (ExtKind k : kAllExtKinds) {
        if (k == ExtKind::c5 && id == ClassId::six_two) continue;
        Graph g = extension_graph(k);
        if (g.order() == m) tasks.push_back({Op::base, nullptr, nullptr, 0, k, g});
      }
    for (int i = 1; 2 * i <= m; ++i)
      for (std::size_t x = 0; x < levels[i].size(); ++x)
        for (std::size_t y = (2 * i == m ? x : 0); y < levels[m - i].size(); ++y) {
          tasks.push_back(binary(Op::union_, levels[i][x].graph, levels[m - i][y].graph));
          tasks.push_back(binary(Op::join, levels[i][x].graph, levels[m - i][y].graph));
        }
    if (id == ClassId::p4_sparse)
      for (int j = 2; 2 * j <= m; ++j)
        for (const auto& h : levels[m - 2 * j]) {
          tasks.push_back(unary(Op::sigma, h.graph, j));
          if (j > 2) tasks.push_back(unary(Op::tau, h.graph, j));
        }
    if (extendible)
      for (ExtKind k : kSeparableExtKinds) {
        const int size = extension_graph(k).order();
        if (m - size < 1) continue;
        for (const auto& h : levels[m - size]) tasks.push_back(unary(Op::sep, h.graph, 0, k));
      }

    levels[m] = indexed_map<KeyedGraph>(
        tasks.size(), [&](std::size_t i) { return KeyedGraph::of(apply(tasks[i])); }, exec);
    sort_unique(levels[m]);
  }

  std::vector<KeyedGraph> out;
  for (int m = 1; m <= n_max; ++m) out.insert(out.end(), levels[m].begin(), levels[m].end());
  return out;
}

}  // namespace polaritylab
