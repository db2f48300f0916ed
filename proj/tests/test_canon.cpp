#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>

#include "polaritylab/canon.hpp"
#include "polaritylab/enumerate.hpp"
#include "polaritylab/named.hpp"
#include "support/oracles.hpp"

using namespace polaritylab;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

Graph shuffled(const Graph& g, std::mt19937& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

}  // namespace

TEST_CASE("keys are invariant under relabelling") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 14;
    const Graph g = random_graph(n, 0.2 + 0.6 * (trial % 5) / 4.0, rng);
    const auto lab = canonical_labeling(g);
    CHECK(canonical_key(shuffled(g, rng)) == lab.key);
    CHECK(relabel(g, lab.perm) == lab.form);
    CHECK(labelled_key(lab.form) == lab.key);
  }
}

TEST_CASE("keys separate exactly the isomorphism classes up to five vertices") {
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::map<std::string, CanonicalKey> by_oracle;
    std::map<CanonicalKey, std::string> by_key;
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
      Graph g(n);
      int e = 0;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++e)
          if ((mask >> e) & 1U) g.add_edge(i, j);
      const std::string brute = oracle::brute_canonical(g);
      const CanonicalKey key = canonical_key(g);
      auto [it, fresh] = by_oracle.emplace(brute, key);
      CHECK(it->second == key);
      auto [jt, fresh_key] = by_key.emplace(key, brute);
      CHECK(jt->second == brute);
    }
  }
}

TEST_CASE("regular graphs with many automorphisms") {
  std::mt19937 rng(11);
  const Graph graphs[] = {named::cycle(12), copies(3, named::cycle(4)), complement(copies(4, named::complete(3))),
                          copies(5, named::complete(2)), named::complete_bipartite(6, 6)};
  for (const Graph& g : graphs) CHECK(canonical_key(shuffled(g, rng)) == canonical_key(g));
  CHECK_FALSE(is_isomorphic(named::cycle(6), copies(2, named::complete(3))));
  CHECK(is_isomorphic(named::cycle(5), complement(named::cycle(5))));
}

TEST_CASE("induced containment agrees with exhaustive search") {
  const auto small = enumerate_graphs(4, Execution::serial);
  const auto hosts = enumerate_order(6, Execution::serial);
  for (std::size_t i = 0; i < hosts.size(); i += 7)
    for (const auto& h : small) {
      const auto map = contains_induced(hosts[i].graph, h.graph);
      CHECK(map.has_value() == oracle::has_induced(hosts[i].graph, h.graph));
      if (map) {
        for (int a = 0; a < h.graph.order(); ++a)
          for (int b = a + 1; b < h.graph.order(); ++b)
            CHECK(hosts[i].graph.adjacent((*map)[a], (*map)[b]) == h.graph.adjacent(a, b));
      }
    }
}

TEST_CASE("P4 listing agrees with path search") {
  for (const auto& k : enumerate_graphs(7, Execution::serial)) {
    std::vector<std::uint32_t> mine;
    for (VertexSet s : list_induced_p4s(k.graph)) mine.push_back(s.bits());
    std::vector<std::uint32_t> expected = oracle::p4_sets(k.graph);
    std::sort(expected.begin(), expected.end(), [](std::uint32_t a, std::uint32_t b) {
      return VertexSet(a).to_vector() < VertexSet(b).to_vector();
    });
    CHECK(mine == expected);
  }
  CHECK(list_induced_p4s(named::path(5)).size() == 2);
  CHECK(list_induced_p4s(named::cycle(5)).size() == 5);
}
