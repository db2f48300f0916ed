#include <doctest.h>

#include "polaritylab/graph.hpp"
#include "polaritylab/named.hpp"

using namespace polaritylab;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::unknown_id;
}

}  // namespace

TEST_CASE("edges are symmetric and validated") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  CHECK(g.adjacent(1, 0));
  CHECK(g.adjacent(1, 2));
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(1) == 2);
  g.remove_edge(1, 0);
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK(code_of([&] { g.add_edge(0, 4); }) == ErrorCode::vertex_out_of_range);
  CHECK(code_of([&] { g.add_edge(-1, 0); }) == ErrorCode::vertex_out_of_range);
  CHECK(code_of([&] { g.add_edge(2, 2); }) == ErrorCode::loop_rejected);
}

TEST_CASE("order is capped at 32") {
  CHECK_NOTHROW(Graph(32));
  CHECK(code_of([] { Graph g(33); }) == ErrorCode::cap_exceeded);
  CHECK(code_of([] { disjoint_union(Graph(20), Graph(13)); }) == ErrorCode::cap_exceeded);
}

TEST_CASE("complement, union and join") {
  const Graph p4 = named::path(4);
  const Graph co = complement(p4);
  CHECK(co.edge_count() == 3);
  CHECK(complement(co) == p4);
  const Graph u = disjoint_union(p4, named::complete(2));
  CHECK(u.order() == 6);
  CHECK(u.adjacent(4, 5));
  CHECK_FALSE(u.adjacent(3, 4));
  const Graph j = join(named::empty(2), named::empty(3));
  CHECK(j == named::complete_bipartite(2, 3));
  CHECK(j.edge_count() == 6);
}

TEST_CASE("induced subgraphs renumber in ascending order") {
  const Graph c5 = named::cycle(5);
  const Graph h = induced_subgraph(c5, VertexSet::of(std::vector<int>{0, 2, 3}));
  CHECK(h.order() == 3);
  CHECK(h.edge_count() == 1);
  CHECK(h.adjacent(1, 2));
  CHECK(delete_vertex(c5, 0) == named::path(4));
}

TEST_CASE("relabel moves vertex v to perm[v]") {
  const Graph p3 = named::path(3);
  const std::vector<int> perm{1, 0, 2};
  const Graph r = relabel(p3, perm);
  CHECK(r.adjacent(1, 0));
  CHECK(r.adjacent(0, 2));
  CHECK_FALSE(r.adjacent(1, 2));
}

TEST_CASE("components and co-components") {
  const Graph g = disjoint_union(named::path(3), named::complete(2));
  const auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet::of(std::vector<int>{0, 1, 2}));
  CHECK(comps[1] == VertexSet::of(std::vector<int>{3, 4}));
  CHECK(co_components(g).size() == 1);
  CHECK(co_components(named::complete_bipartite(2, 3)).size() == 2);
  CHECK(is_connected(named::path(4)));
  CHECK_FALSE(is_connected(g));
}

TEST_CASE("clique and independence predicates") {
  const Graph g = named::complete_bipartite(2, 2);
  CHECK(is_independent(g, VertexSet::of(std::vector<int>{0, 1})));
  CHECK(is_clique(g, VertexSet::of(std::vector<int>{0, 2})));
  CHECK(completely_adjacent(g, VertexSet::of(std::vector<int>{0, 1}), VertexSet::of(std::vector<int>{2, 3})));
  CHECK(completely_nonadjacent(g, VertexSet::single(0), VertexSet::single(1)));
}

TEST_CASE("vertex set iteration") {
  VertexSet s;
  s.insert(31);
  s.insert(3);
  s.insert(7);
  CHECK(s.size() == 3);
  CHECK(s.to_vector() == std::vector<int>{3, 7, 31});
  CHECK(s.front() == 3);
  s.erase(3);
  CHECK_FALSE(s.contains(3));
  CHECK(VertexSet::first_n(32).size() == 32);
}

TEST_CASE("named catalogue") {
  CHECK(catalog("P4") == named::path(4));
  CHECK(catalog("C5").edge_count() == 5);
  CHECK(catalog("K2,3").edge_count() == 6);
  CHECK(catalog("Kmp:1,2,2").edge_count() == 8);
  CHECK(catalog("W4").edge_count() == 8);
  CHECK(catalog("net").order() == 6);
  CHECK(catalog("bull").edge_count() == 5);
  CHECK(catalog("house") == catalog("co-P5"));
  for (int i = 1; i <= 13; ++i) CHECK(named::e(i).order() >= 5);
  CHECK(code_of([] { catalog("nonsense"); }) == ErrorCode::unknown_name);
  CHECK(code_of([] { catalog("E14"); }) == ErrorCode::unknown_name);
  CHECK(code_of([] { catalog("thin-spider:1"); }) == ErrorCode::bad_parameter);
}
