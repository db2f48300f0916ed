#include "polaritylab/decomposition.hpp"

#include <sstream>

namespace polaritylab {

std::string_view to_string(DecompTree::Kind kind) {
  using K = DecompTree::Kind;
  switch (kind) {
    case K::leaf: return "leaf";
    case K::union_: return "union";
    case K::join: return "join";
    case K::spider: return "spider";
    case K::ext_graph: return "ext-graph";
    case K::ext_spider: return "ext-spider";
  }
  return "?";
}

namespace {

VertexSet lift(VertexSet local, const std::vector<int>& ids) {
  VertexSet out;
  for (int v : local) out.insert(ids[v]);
  return out;
}

class Builder {
public:
  Builder(const Graph& g, DecompTree& tree) : g_(g), tree_(tree) {}

  int build(VertexSet s) {
    const int id = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    tree_.nodes[id].vertices = s;
    if (s.size() == 1) return id;

    if (auto comps = components(g_, s); comps.size() > 1) return split(id, DecompTree::Kind::union_, comps);
    if (auto cocomps = co_components(g_, s); cocomps.size() > 1) return split(id, DecompTree::Kind::join, cocomps);

    const std::vector<int> ids = s.to_vector();
    const Graph sub = induced_subgraph(g_, s);
    if (tree_.mode == ClassId::p4_sparse) {
      auto spider = find_spider(sub);
      if (!spider) throw Error(ErrorCode::not_in_class, "prime part is not a spider");
      SpiderPartition p;
      p.kind = spider->kind;
      p.legs = lift(spider->legs, ids);
      p.body = lift(spider->body, ids);
      p.head = lift(spider->head, ids);
      for (auto [leg, b] : spider->matching) p.matching.emplace_back(ids[leg], ids[b]);
      tree_.nodes[id].kind = DecompTree::Kind::spider;
      tree_.nodes[id].spider = p;
      if (!p.head.empty()) attach(id, p.head);
      return id;
    }
    if (auto kind = classify_extension_graph(sub)) {
      auto& node = tree_.nodes[id];
      node.kind = DecompTree::Kind::ext_graph;
      node.ext = *kind;
      node.ext_vertices = s;
      node.pattern = sub;
      return id;
    }
    auto ext = find_ext_spider(sub);
    if (!ext) throw Error(ErrorCode::not_in_class, "prime part is neither an extension graph nor an extension spider");
    const VertexSet d = lift(ext->endpoints | ext->midpoints, ids);
    auto& node = tree_.nodes[id];
    node.kind = DecompTree::Kind::ext_spider;
    node.ext = ext->kind;
    node.ext_vertices = d;
    node.pattern = induced_subgraph(g_, d);
    node.midpoints = lift(ext->midpoints, ids);
    attach(id, lift(ext->head, ids));
    return id;
  }

private:
  int split(int id, DecompTree::Kind kind, const std::vector<VertexSet>& parts) {
    tree_.nodes[id].kind = kind;
    for (VertexSet part : parts) attach(id, part);
    return id;
  }

  void attach(int parent, VertexSet s) {
    const int child = build(s);
    tree_.nodes[parent].children.push_back(child);
  }

  const Graph& g_;
  DecompTree& tree_;
};

void rebuild_into(const DecompTree& tree, int id, Graph& g) {
  const auto& node = tree.nodes[id];
  for (int c : node.children) rebuild_into(tree, c, g);
  switch (node.kind) {
    case DecompTree::Kind::leaf:
    case DecompTree::Kind::union_: break;
    case DecompTree::Kind::join:
      for (std::size_t i = 0; i < node.children.size(); ++i)
        for (std::size_t j = i + 1; j < node.children.size(); ++j)
          for (int u : tree.nodes[node.children[i]].vertices)
            for (int v : tree.nodes[node.children[j]].vertices) g.add_edge(u, v);
      break;
    case DecompTree::Kind::spider: {
      const auto& p = node.spider;
      for (int a : p.body)
        for (int b : p.body)
          if (a < b) g.add_edge(a, b);
      for (auto [leg, b] : p.matching) {
        if (p.kind == SpiderKind::thin) {
          g.add_edge(leg, b);
        } else {
          for (int other : p.body - VertexSet::single(b)) g.add_edge(leg, other);
        }
      }
      for (int r : p.head)
        for (int b : p.body) g.add_edge(r, b);
      break;
    }
    case DecompTree::Kind::ext_graph:
    case DecompTree::Kind::ext_spider: {
      const std::vector<int> ids = node.ext_vertices.to_vector();
      for (auto [u, v] : node.pattern.edges()) g.add_edge(ids[u], ids[v]);
      if (node.kind == DecompTree::Kind::ext_spider)
        for (int m : node.midpoints)
          for (int r : node.vertices - node.ext_vertices) g.add_edge(m, r);
      break;
    }
  }
}

void render_node(const DecompTree& tree, int id, int depth, std::ostringstream& out) {
  const auto& node = tree.nodes[id];
  out << std::string(2 * depth, ' ') << to_string(node.kind);
  if (node.kind == DecompTree::Kind::leaf) out << ' ' << node.vertices.front();
  if (node.kind == DecompTree::Kind::spider)
    out << (node.spider.kind == SpiderKind::thin ? " thin" : " thick") << " |S|=" << node.spider.legs.size()
        << " |R|=" << node.spider.head.size();
  if (node.kind == DecompTree::Kind::ext_graph || node.kind == DecompTree::Kind::ext_spider)
    out << ' ' << to_string(node.ext);
  out << " [";
  bool first = true;
  for (int v : node.vertices) {
    out << (first ? "" : " ") << v;
    first = false;
  }
  out << "]\n";
  for (int c : node.children) render_node(tree, c, depth + 1, out);
}

}  // namespace

DecompTree build_decomposition(const Graph& g, ClassId mode) {
  if (mode != ClassId::p4_sparse && mode != ClassId::p4_extendible)
    throw Error(ErrorCode::bad_parameter, "decomposition is defined for p4sparse and p4extendible");
  if (auto cert = class_certificate(g, mode))
    throw Error(ErrorCode::not_in_class, "not " + std::string(to_string(mode)) + ": " + to_string(*cert));
  DecompTree tree;
  tree.mode = mode;
  tree.order = g.order();
  if (g.order() == 0) return tree;
  Builder(g, tree).build(g.vertices());
  return tree;
}

Graph rebuild(const DecompTree& tree) {
  Graph g(tree.order);
  if (!tree.nodes.empty()) rebuild_into(tree, 0, g);
  return g;
}

std::string render(const DecompTree& tree) {
  std::ostringstream out;
  if (!tree.nodes.empty()) render_node(tree, 0, 0, out);
  return out.str();
}

}  // namespace polaritylab
