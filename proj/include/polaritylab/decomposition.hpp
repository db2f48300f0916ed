#pragma once

#include <string>
#include <vector>

#include "polaritylab/classes.hpp"

namespace polaritylab {

/// Decomposition tree stored as a flat node array; node 0 is the root.
///
/// Every node records its vertex set in the input graph. Children of union
/// and join nodes are ordered by smallest vertex.
struct DecompTree {
  enum class Kind { leaf, union_, join, spider, ext_graph, ext_spider };

  struct Node {
    Kind kind = Kind::leaf;
    VertexSet vertices;
    std::vector<int> children;
    /// spider only; vertex ids refer to the input graph.
    SpiderPartition spider;
    /// ext_graph and ext_spider.
    ExtKind ext = ExtKind::p4;
    /// ext_graph: the whole node; ext_spider: the extension set D.
    VertexSet ext_vertices;
    /// Induced subgraph on ext_vertices, vertices in ascending order.
    Graph pattern;
    /// ext_spider only.
    VertexSet midpoints;
  };

  ClassId mode = ClassId::p4_sparse;
  int order = 0;
  std::vector<Node> nodes;

  const Node& root() const { return nodes.front(); }
};

std::string_view to_string(DecompTree::Kind kind);

/// Accepts ClassId::p4_sparse and ClassId::p4_extendible. Throws NotInClass
/// (message carries the certificate) when g is not in the class.
DecompTree build_decomposition(const Graph& g, ClassId mode);

/// Graph described by the tree; equals the decomposed graph exactly.
Graph rebuild(const DecompTree& tree);

/// Indented one-node-per-line rendering.
std::string render(const DecompTree& tree);

}  // namespace polaritylab
