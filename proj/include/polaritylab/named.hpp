#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polaritylab/graph.hpp"

namespace polaritylab {

/// Identifier of a graph in the built-in catalogue.
struct NamedGraph {
  enum class Kind {
    path,               // P_n
    cycle,              // C_n
    complete,           // K_n
    complete_bipartite, // K_{a,b}
    complete_multipartite,
    wheel4,             // W4 = K1 join C4
    house,              // co-P5
    banner,             // P
    co_banner,          // co-P
    fork,               // F
    kite,               // co-F
    net,
    bull,
    thin_spider,        // headless, parameter j
    thick_spider,       // headless, parameter j
    essential,          // E1..E13, parameter i
  };

  Kind kind;
  std::vector<int> params;

  static NamedGraph path(int n) { return {Kind::path, {n}}; }
  static NamedGraph cycle(int n) { return {Kind::cycle, {n}}; }
  static NamedGraph complete(int n) { return {Kind::complete, {n}}; }
  static NamedGraph complete_bipartite(int a, int b) { return {Kind::complete_bipartite, {a, b}}; }
  static NamedGraph complete_multipartite(std::vector<int> parts) { return {Kind::complete_multipartite, std::move(parts)}; }
  static NamedGraph thin_spider(int j) { return {Kind::thin_spider, {j}}; }
  static NamedGraph thick_spider(int j) { return {Kind::thick_spider, {j}}; }
  static NamedGraph e(int i) { return {Kind::essential, {i}}; }
  static NamedGraph of(Kind k) { return {k, {}}; }
};

Graph catalog(const NamedGraph& name);

/// Accepts names such as "P4", "C5", "K3", "K2,3", "Kmp:1,2,2", "W4",
/// "house", "banner", "co-banner", "fork", "kite", "net", "bull",
/// "thin-spider:3", "thick-spider:3" and "E1".."E13".
NamedGraph parse_named_graph(std::string_view text);
inline Graph catalog(std::string_view text) { return catalog(parse_named_graph(text)); }

/// Shorthands used throughout the tests and catalogues.
namespace named {
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph empty(int n);
Graph complete_bipartite(int a, int b);
Graph e(int i);
}  // namespace named

}  // namespace polaritylab
