#pragma once

#include <vector>

#include "polaritylab/classes.hpp"
#include "polaritylab/enumerate.hpp"

namespace polaritylab {

/// Every member of the class with 1..n_max vertices, one per isomorphism
/// class, built bottom-up from the base graphs by disjoint union, join and
/// the class's spider builders. Orders are concatenated ascending, each
/// sorted by canonical key.
std::vector<KeyedGraph> generate_class(ClassId id, int n_max, Execution exec = Execution::parallel,
                                       int cap = kDefaultEnumerationCap);

}  // namespace polaritylab
