#include <doctest.h>

#include "polaritylab/decomposition.hpp"
#include "polaritylab/enumerate.hpp"
#include "polaritylab/named.hpp"

using namespace polaritylab;

namespace {

void check_shape(const Graph& g, const DecompTree& tree) {
  for (const auto& node : tree.nodes) {
    if (node.kind == DecompTree::Kind::union_ || node.kind == DecompTree::Kind::join) {
      CHECK(node.children.size() >= 2);
      VertexSet seen;
      int last = -1;
      for (int c : node.children) {
        const VertexSet part = tree.nodes[c].vertices;
        CHECK(part.front() > last);
        last = part.front();
        seen |= part;
        const Graph sub = induced_subgraph(g, part);
        if (node.kind == DecompTree::Kind::union_)
          CHECK(is_connected(sub));
        else
          CHECK(is_connected(complement(sub)));
      }
      CHECK(seen == node.vertices);
    }
    if (tree.mode == ClassId::p4_sparse)
      CHECK((node.kind != DecompTree::Kind::ext_graph && node.kind != DecompTree::Kind::ext_spider));
    else
      CHECK(node.kind != DecompTree::Kind::spider);
  }
}

}  // namespace

TEST_CASE("2P3 decomposes into a union of two joins") {
  const Graph g = copies(2, named::path(3));
  const DecompTree tree = build_decomposition(g, ClassId::p4_sparse);
  REQUIRE(tree.root().kind == DecompTree::Kind::union_);
  REQUIRE(tree.root().children.size() == 2);
  for (int c : tree.root().children) {
    const auto& child = tree.nodes[c];
    CHECK(child.kind == DecompTree::Kind::join);
    for (int leaf : child.children) {
      const auto& sub = tree.nodes[leaf];
      CHECK((sub.kind == DecompTree::Kind::leaf || sub.kind == DecompTree::Kind::union_));
    }
  }
  CHECK(rebuild(tree) == g);
}

TEST_CASE("net is a single headless spider node") {
  const DecompTree tree = build_decomposition(catalog("net"), ClassId::p4_sparse);
  REQUIRE(tree.nodes.size() == 1);
  CHECK(tree.root().kind == DecompTree::Kind::spider);
  CHECK(tree.root().spider.head.empty());
}

TEST_CASE("C5 is an extension graph node") {
  const DecompTree tree = build_decomposition(named::cycle(5), ClassId::p4_extendible);
  REQUIRE(tree.nodes.size() == 1);
  CHECK(tree.root().kind == DecompTree::Kind::ext_graph);
  CHECK(tree.root().ext == ExtKind::c5);
}

TEST_CASE("non-members are rejected with a certificate") {
  try {
    build_decomposition(named::path(5), ClassId::p4_sparse);
    FAIL("accepted P5");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_in_class);
    CHECK(std::string(e.what()).find("two P4s") != std::string::npos);
  }
  CHECK_THROWS_AS(build_decomposition(catalog("thin-spider:3"), ClassId::p4_extendible), Error);
  CHECK_THROWS_AS(build_decomposition(named::path(4), ClassId::cograph), Error);
}

TEST_CASE("rebuilding reproduces every class member of order at most eight") {
  for (const auto& k : enumerate_graphs(8))
    for (ClassId id : {ClassId::p4_sparse, ClassId::p4_extendible}) {
      if (!is_member(k.graph, id)) continue;
      const DecompTree tree = build_decomposition(k.graph, id);
      CHECK(rebuild(tree) == k.graph);
      check_shape(k.graph, tree);
    }
}

TEST_CASE("rendering") {
  const std::string text = render(build_decomposition(catalog("bull"), ClassId::p4_extendible));
  CHECK(text.find("ext-spider P4") == 0);
  CHECK(text.find("  leaf 2") != std::string::npos);
}
