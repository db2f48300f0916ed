#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "polaritylab/graph.hpp"

namespace polaritylab {

/// Bound on a number of parts or cliques; may be unbounded.
class PartBound {
public:
  constexpr PartBound(int value = 0) : value_(value) {}
  static constexpr PartBound inf() {
    PartBound b;
    b.value_ = -1;
    return b;
  }

  constexpr bool infinite() const { return value_ < 0; }
  constexpr int value() const { return value_; }
  /// Unbounded means n on a graph of order n.
  constexpr int resolve(int n) const { return infinite() ? n : value_; }

  bool operator==(const PartBound&) const = default;

private:
  int value_;
};

std::string to_string(PartBound b);

struct PolarSpec {
  enum class Kind { sk, unipolar, monopolar, polar, split };

  Kind kind = Kind::sk;
  /// Parts of A and cliques of B; ignored for unipolar.
  PartBound s;
  PartBound k;

  static PolarSpec sk_polar(PartBound s, PartBound k) { return {Kind::sk, s, k}; }
  static PolarSpec unipolar() { return {Kind::unipolar, PartBound::inf(), PartBound::inf()}; }
  static PolarSpec monopolar() { return {Kind::monopolar, 1, PartBound::inf()}; }
  static PolarSpec polar() { return {Kind::polar, PartBound::inf(), PartBound::inf()}; }
  static PolarSpec split() { return {Kind::split, 1, 1}; }

  bool operator==(const PolarSpec&) const = default;
};

/// "sk:S,K" (either side may be "inf"), "unipolar", "monopolar", "polar",
/// "split". Throws BadParameter.
PolarSpec parse_polar_spec(std::string_view text);
std::string to_string(const PolarSpec& spec);

struct PolarPartition {
  VertexSet a;
  VertexSet b;

  bool operator==(const PolarPartition&) const = default;
};

/// Largest order accepted by the exhaustive partition search.
inline constexpr int kPolarSearchCap = 20;

/// Disjoint union of at most k cliques.
bool is_cluster(const Graph& g, PartBound k);
bool is_cluster(const Graph& g, VertexSet within, PartBound k);
/// Complete multipartite with at most s parts.
bool is_complete_multipartite(const Graph& g, PartBound s);
bool is_complete_multipartite(const Graph& g, VertexSet within, PartBound s);
/// No induced 2K2, C4 or C5.
bool is_split(const Graph& g);

bool is_valid_polar_partition(const Graph& g, const PolarSpec& spec, const PolarPartition& p);

/// Candidate A sides are tried by increasing size, then in lexicographic
/// order of their sorted vertex lists; the first valid partition is returned.
/// Throws CapExceeded above kPolarSearchCap vertices.
std::optional<PolarPartition> find_polar_partition(const Graph& g, const PolarSpec& spec);
inline bool satisfies(const Graph& g, const PolarSpec& spec) { return find_polar_partition(g, spec).has_value(); }

}  // namespace polaritylab
