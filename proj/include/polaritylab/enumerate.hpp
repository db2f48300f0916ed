#pragma once

#include <vector>

#include "polaritylab/canon.hpp"
#include "polaritylab/parallel.hpp"

namespace polaritylab {

inline constexpr int kDefaultEnumerationCap = 10;

/// One representative (in canonical form) per isomorphism class of graphs of
/// exactly order n, sorted by canonical key.
///
/// Orderly generation by canonical deletion: a child obtained by appending a
/// vertex v to a parent is kept iff v has minimum degree and deleting v gives
/// the smallest key among all minimum-degree deletions. Children of one
/// parent are deduplicated by key.
std::vector<KeyedGraph> enumerate_order(int n, Execution exec = Execution::parallel,
                                        int cap = kDefaultEnumerationCap);

/// All orders 1..n_max, concatenated in order.
std::vector<KeyedGraph> enumerate_graphs(int n_max, Execution exec = Execution::parallel,
                                         int cap = kDefaultEnumerationCap);

/// Children of one parent level (exposed for the benchmark and tests).
std::vector<KeyedGraph> extend_level(const std::vector<KeyedGraph>& parents, Execution exec);

}  // namespace polaritylab
