#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polaritylab/canon.hpp"
#include "polaritylab/classes.hpp"
#include "polaritylab/enumerate.hpp"
#include "polaritylab/polarity.hpp"

namespace polaritylab {

struct ObstructionReport {
  Graph graph;
  PolarSpec spec;
  bool is_obstruction = false;
  bool is_minimal = false;
  /// (v, partition of g - v) for every v when minimal; vertex ids in the
  /// partition follow delete_vertex numbering.
  std::vector<std::pair<int, PolarPartition>> deletion_witnesses;
  CanonicalKey canonical;
};

/// One-vertex deletions suffice since every spec is hereditary.
ObstructionReport is_minimal_obstruction(const Graph& g, const PolarSpec& spec);
/// Verdict only.
bool minimal_obstruction(const Graph& g, const PolarSpec& spec);

/// Minimal obstructions among the class members with 1..n_max vertices,
/// sorted by (order, canonical key).
std::vector<KeyedGraph> enumerate_minimal_obstructions(ClassId id, const PolarSpec& spec, int n_max,
                                                       Execution exec = Execution::parallel,
                                                       int cap = kDefaultEnumerationCap);
/// Same over an arbitrary keyed source (e.g. enumerate_graphs output).
std::vector<KeyedGraph> filter_minimal_obstructions(const std::vector<KeyedGraph>& source, const PolarSpec& spec,
                                                    Execution exec = Execution::parallel);

/// Essential graph numbers of the class: {1,2,3,7} for P4-sparse and
/// {1,2,3,7,10,11,12} for P4-extendible. Throws BadParameter otherwise.
std::vector<int> essential_numbers(ClassId id);

/// 2K_{s+1}, K2 + (K_s join 2K1), K1 + (K_{s-1} join C4).
std::vector<Graph> s1_fixed_family(int s);

/// Connected minimal (1,k)-polar obstructions in the class that are
/// (1,k+1)-polar.
std::vector<KeyedGraph> s1_pool(ClassId id, int k);

/// Minimal (s,1)-polar obstructions of the class, built from the essentials,
/// the fixed family and complements of disjoint unions of pool graphs.
/// Orders above max_order are skipped when given.
std::vector<KeyedGraph> construct_s1_obstructions(ClassId id, int s, std::optional<int> max_order = std::nullopt);

// ---------------------------------------------------------------------------
// Reference lists

struct CatalogId {
  enum class Kind {
    unipolar_sparse,
    unipolar_extendible,
    co_monopolar_sparse,
    co_monopolar_extendible,
    monopolar_sparse,
    monopolar_extendible,
    s1_fixed,
    polar_sparse,
    polar_extendible,
    essentials,
  };
  Kind kind;
  int s = 0;  // s1_fixed only

  bool operator==(const CatalogId&) const = default;
};

/// "unipolar-sparse", "unipolar-extendible", "comonopolar-sparse",
/// "comonopolar-extendible", "monopolar-sparse", "monopolar-extendible",
/// "s1-fixed:S", "polar-sparse", "polar-extendible", "essentials".
CatalogId parse_catalog_id(std::string_view text);
std::string to_string(const CatalogId& id);
std::vector<CatalogId> all_catalog_ids();

/// Sorted by (order, canonical key).
std::vector<KeyedGraph> catalog_list(const CatalogId& id);
/// Class and property a catalogue list is the obstruction set of; absent for
/// "essentials" and "s1-fixed".
std::optional<std::pair<ClassId, PolarSpec>> catalog_property(const CatalogId& id);

/// Indices (i, j) with graphs[i] an induced subgraph of graphs[j], or absent
/// when the list is an antichain.
std::optional<std::pair<std::size_t, std::size_t>> antichain_violation(const std::vector<Graph>& graphs);
inline bool is_antichain(const std::vector<Graph>& graphs) { return !antichain_violation(graphs).has_value(); }

std::vector<Graph> graphs_of(const std::vector<KeyedGraph>& keyed);

// ---------------------------------------------------------------------------
// Serialization

/// One graph6 line per graph.
std::string to_graph6_lines(const std::vector<Graph>& graphs);
std::vector<Graph> from_graph6_lines(std::string_view text);
/// JSON array with graph6, canonical key, order, property and, for minimal
/// obstructions, the deletion witnesses.
std::string obstruction_sidecar(const std::vector<Graph>& graphs, const PolarSpec& spec);

}  // namespace polaritylab
