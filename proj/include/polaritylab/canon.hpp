#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "polaritylab/graph.hpp"

namespace polaritylab {

/// Byte string identifying an isomorphism class: the order, then the upper
/// triangle of the canonically relabelled adjacency matrix in column order,
/// packed most significant bit first.
class CanonicalKey {
public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  int order() const { return bytes_.empty() ? 0 : static_cast<unsigned char>(bytes_[0]); }
  std::string hex() const;

  bool operator==(const CanonicalKey&) const = default;
  std::strong_ordering operator<=>(const CanonicalKey& o) const { return bytes_ <=> o.bytes_; }

private:
  std::string bytes_;
};

struct CanonicalLabeling {
  /// perm[v] = canonical position of vertex v.
  std::vector<int> perm;
  Graph form;
  CanonicalKey key;
};

/// Canonical labelling: equitable refinement from the unit partition, then an
/// individualization search that keeps the lexicographically smallest
/// relabelled upper triangle among the leaves. Interchangeable twins are only
/// branched on once.
CanonicalLabeling canonical_labeling(const Graph& g);
inline Graph canonical_form(const Graph& g) { return canonical_labeling(g).form; }
inline CanonicalKey canonical_key(const Graph& g) { return canonical_labeling(g).key; }
/// Key computed directly from the labelled adjacency, no search.
CanonicalKey labelled_key(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

/// Injective map from V(h) into V(g) whose image induces a copy of h, found by
/// exhaustive backtracking; absent when no induced copy exists.
std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& h);

bool induces_p4(const Graph& g, VertexSet w);
/// Vertex sets inducing P4, in ascending lexicographic order of the sorted sets.
std::vector<VertexSet> list_induced_p4s(const Graph& g);
/// Same, restricted to subsets of `within`.
std::vector<VertexSet> list_induced_p4s(const Graph& g, VertexSet within);

/// Graph paired with its canonical key; the graph is stored in canonical form.
struct KeyedGraph {
  Graph graph;
  CanonicalKey key;

  static KeyedGraph of(const Graph& g) {
    auto lab = canonical_labeling(g);
    return {std::move(lab.form), std::move(lab.key)};
  }
  bool operator==(const KeyedGraph& o) const { return key == o.key; }
  auto operator<=>(const KeyedGraph& o) const { return key <=> o.key; }
};

/// Sort by (order, key) and drop duplicates.
void sort_unique(std::vector<KeyedGraph>& graphs);

}  // namespace polaritylab
