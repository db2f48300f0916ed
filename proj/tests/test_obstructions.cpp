#include <doctest.h>

#include <json.hpp>

#include "polaritylab/classes.hpp"
#include "polaritylab/generate.hpp"
#include "polaritylab/graph6.hpp"
#include "polaritylab/named.hpp"
#include "polaritylab/obstructions.hpp"
#include "support/oracles.hpp"

using namespace polaritylab;

namespace {

std::vector<CanonicalKey> keys_of(const std::vector<KeyedGraph>& graphs) {
  std::vector<CanonicalKey> out;
  for (const auto& g : graphs) out.push_back(g.key);
  return out;
}

std::vector<CanonicalKey> keys_of(const std::vector<Graph>& graphs) {
  std::vector<KeyedGraph> keyed;
  for (const auto& g : graphs) keyed.push_back(KeyedGraph::of(g));
  sort_unique(keyed);
  return keys_of(keyed);
}

}  // namespace

TEST_CASE("minimality examples") {
  const auto two_p3 = is_minimal_obstruction(copies(2, named::path(3)), PolarSpec::unipolar());
  CHECK(two_p3.is_minimal);
  CHECK(two_p3.deletion_witnesses.size() == 6);
  CHECK(is_minimal_obstruction(named::complete_bipartite(2, 3), PolarSpec::unipolar()).is_minimal);
  CHECK(is_minimal_obstruction(complement(named::cycle(7)), PolarSpec::unipolar()).is_minimal);

  const auto p4 = is_minimal_obstruction(copies(2, named::path(4)), PolarSpec::unipolar());
  CHECK(p4.is_obstruction);
  CHECK_FALSE(p4.is_minimal);
  CHECK(p4.deletion_witnesses.empty());
  CHECK_FALSE(is_minimal_obstruction(named::path(4), PolarSpec::unipolar()).is_obstruction);
}

TEST_CASE("deletion witnesses validate") {
  for (int i = 1; i <= 13; ++i) {
    const Graph g = named::e(i);
    const auto report = is_minimal_obstruction(g, PolarSpec::sk_polar(2, 1));
    REQUIRE(report.is_minimal);
    REQUIRE(report.deletion_witnesses.size() == static_cast<std::size_t>(g.order()));
    for (const auto& [v, p] : report.deletion_witnesses)
      CHECK(is_valid_polar_partition(delete_vertex(g, v), PolarSpec::sk_polar(2, 1), p));
  }
}

TEST_CASE("headless spiders are never obstructions") {
  for (int j = 2; j <= 5; ++j)
    for (int s = 1; s <= 3; ++s)
      for (int k = 1; k <= 3; ++k) {
        CHECK_FALSE(is_minimal_obstruction(catalog(NamedGraph::thin_spider(j)), PolarSpec::sk_polar(s, k)).is_obstruction);
        CHECK_FALSE(is_minimal_obstruction(catalog(NamedGraph::thick_spider(j)), PolarSpec::sk_polar(s, k)).is_obstruction);
      }
}

TEST_CASE("enumerated lists") {
  const auto sparse = enumerate_minimal_obstructions(ClassId::p4_sparse, PolarSpec::sk_polar(2, 1), 8);
  CHECK(sparse.size() == 9);
  std::vector<Graph> e1_9;
  for (int i = 1; i <= 9; ++i) e1_9.push_back(named::e(i));
  CHECK(keys_of(sparse) == keys_of(e1_9));

  const auto ext = enumerate_minimal_obstructions(ClassId::p4_extendible, PolarSpec::sk_polar(2, 1), 8);
  CHECK(ext.size() == 13);

  CHECK(keys_of(enumerate_minimal_obstructions(ClassId::p4_sparse, PolarSpec::unipolar(), 6)) ==
        keys_of(std::vector<Graph>{copies(2, named::path(3)), named::complete_bipartite(2, 3)}));
  CHECK(keys_of(enumerate_minimal_obstructions(ClassId::p4_extendible, PolarSpec::unipolar(), 6)) ==
        keys_of(std::vector<Graph>{copies(2, named::path(3)), named::complete_bipartite(2, 3), named::cycle(5)}));
}

TEST_CASE("filtering agrees with the brute-force minimality oracle") {
  const auto members = generate_class(ClassId::p4_extendible, 6);
  for (const PolarSpec& spec : {PolarSpec::unipolar(), PolarSpec::sk_polar(2, 1), PolarSpec::sk_polar(1, 2),
                                PolarSpec::monopolar(), PolarSpec::split()}) {
    const auto found = filter_minimal_obstructions(members, spec, Execution::serial);
    std::vector<KeyedGraph> expected;
    for (const auto& g : members)
      if (oracle::is_minimal_obstruction(g.graph, spec)) expected.push_back(g);
    CHECK(keys_of(found) == keys_of(expected));
    CHECK(keys_of(filter_minimal_obstructions(members, spec, Execution::parallel)) == keys_of(found));
  }
}

TEST_CASE("construction matches enumeration") {
  for (ClassId id : {ClassId::p4_sparse, ClassId::p4_extendible}) {
    CHECK(keys_of(construct_s1_obstructions(id, 2)) ==
          keys_of(enumerate_minimal_obstructions(id, PolarSpec::sk_polar(2, 1), 8)));
    CHECK(keys_of(construct_s1_obstructions(id, 3, 8)) ==
          keys_of(enumerate_minimal_obstructions(id, PolarSpec::sk_polar(3, 1), 8)));
  }
  CHECK(construct_s1_obstructions(ClassId::p4_sparse, 2).size() == 9);
  CHECK(construct_s1_obstructions(ClassId::p4_extendible, 2).size() == 13);
  const auto s3 = construct_s1_obstructions(ClassId::p4_sparse, 3);
  CHECK(std::find(s3.begin(), s3.end(), KeyedGraph::of(copies(2, named::complete(4)))) != s3.end());
  CHECK_THROWS_AS(construct_s1_obstructions(ClassId::p4_sparse, 1), Error);
  CHECK_THROWS_AS(construct_s1_obstructions(ClassId::cograph, 2), Error);
}

TEST_CASE("complement transfer") {
  for (ClassId id : {ClassId::p4_sparse, ClassId::p4_extendible})
    for (const auto& g : generate_class(id, 7))
      for (int s = 0; s <= 2; ++s)
        for (int k = 0; k <= 2; ++k)
          CHECK(minimal_obstruction(g.graph, PolarSpec::sk_polar(s, k)) ==
                minimal_obstruction(complement(g.graph), PolarSpec::sk_polar(k, s)));
}

TEST_CASE("disjoint unions of pool graphs are minimal obstructions") {
  for (ClassId id : {ClassId::p4_sparse, ClassId::p4_extendible}) {
    std::vector<std::pair<int, Graph>> pool;
    for (int k = 0; k <= 3; ++k)
      for (const auto& g : s1_pool(id, k)) {
        CHECK(is_connected(g.graph));
        CHECK(minimal_obstruction(g.graph, PolarSpec::sk_polar(1, k)));
        CHECK(satisfies(g.graph, PolarSpec::sk_polar(1, k + 1)));
        pool.emplace_back(k, g.graph);
      }
    int checked = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i; j < pool.size(); ++j) {
        const auto& [ki, gi] = pool[i];
        const auto& [kj, gj] = pool[j];
        if (gi.order() + gj.order() > 9) continue;
        CHECK(minimal_obstruction(disjoint_union(gi, gj), PolarSpec::sk_polar(1, 1 + ki + kj)));
        ++checked;
      }
    CHECK(checked > 0);
  }
}

TEST_CASE("catalogues") {
  CHECK(keys_of(catalog_list(parse_catalog_id("unipolar-extendible"))) ==
        keys_of(std::vector<Graph>{copies(2, named::path(3)), named::complete_bipartite(2, 3), named::cycle(5)}));
  CHECK(keys_of(catalog_list(parse_catalog_id("comonopolar-sparse"))) ==
        keys_of(std::vector<Graph>{named::e(1), named::e(2), named::e(3), named::e(7)}));
  const auto polar = catalog_list(parse_catalog_id("polar-sparse"));
  CHECK(std::find(polar.begin(), polar.end(), KeyedGraph::of(disjoint_union(named::path(3), complement(named::e(1))))) !=
        polar.end());
  CHECK(catalog_list(parse_catalog_id("essentials")).size() == 13);
  CHECK(catalog_list(parse_catalog_id("s1-fixed:3")).size() == 3);

  for (const CatalogId& id : all_catalog_ids()) {
    CHECK(parse_catalog_id(to_string(id)) == id);
    const auto list = catalog_list(id);
    CHECK(is_antichain(graphs_of(list)));
    const auto property = catalog_property(id);
    if (!property) continue;
    for (const auto& g : list) {
      CHECK(is_member(g.graph, property->first));
      CHECK(minimal_obstruction(g.graph, property->second));
    }
  }
  CHECK_THROWS_AS(parse_catalog_id("bipolar-sparse"), Error);
  CHECK_THROWS_AS(parse_catalog_id("s1-fixed:x"), Error);
}

TEST_CASE("antichains") {
  std::vector<Graph> es;
  for (int i = 1; i <= 13; ++i) es.push_back(named::e(i));
  CHECK(is_antichain(es));
  const auto violation = antichain_violation({named::path(3), named::path(4)});
  REQUIRE(violation);
  CHECK(violation->first == 0);
  CHECK(violation->second == 1);
  CHECK(is_antichain({}));
  CHECK(is_antichain({named::path(4), named::path(4)}));
}

TEST_CASE("serialization") {
  const auto list = graphs_of(catalog_list(parse_catalog_id("polar-extendible")));
  const std::string text = to_graph6_lines(list);
  const auto back = from_graph6_lines(text);
  REQUIRE(back.size() == list.size());
  for (std::size_t i = 0; i < list.size(); ++i) CHECK(back[i] == list[i]);
  CHECK(from_graph6_lines("\n").empty());
  CHECK_THROWS_AS(from_graph6_lines("C~\n!!\n"), Error);

  const auto sidecar = nlohmann::json::parse(obstruction_sidecar(list, PolarSpec::polar()));
  REQUIRE(sidecar.size() == list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& record = sidecar[i];
    CHECK(graph6_decode(record["graph6"].get<std::string>()) == list[i]);
    CHECK(record["order"] == list[i].order());
    CHECK(record["property"] == "polar");
    CHECK(record["minimal"] == true);
    CHECK(record["witnesses"].size() == static_cast<std::size_t>(list[i].order()));
  }
}

TEST_CASE("essential numbers") {
  CHECK(essential_numbers(ClassId::p4_sparse) == std::vector<int>{1, 2, 3, 7});
  CHECK(essential_numbers(ClassId::p4_extendible) == std::vector<int>{1, 2, 3, 7, 10, 11, 12});
  CHECK_THROWS_AS(essential_numbers(ClassId::cograph), Error);
  CHECK(s1_fixed_family(2).size() == 3);
  CHECK(is_isomorphic(s1_fixed_family(2)[0], copies(2, named::complete(3))));
}
