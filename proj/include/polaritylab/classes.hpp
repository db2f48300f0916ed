#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polaritylab/graph.hpp"

namespace polaritylab {

enum class ClassId { cograph, p4_sparse, p4_extendible, six_two };

std::string_view to_string(ClassId id);
/// "cograph", "p4sparse", "p4extendible", "62" (also "six-two").
ClassId parse_class_id(std::string_view text);

enum class RecognitionMode { definitional, structural };

// ---------------------------------------------------------------------------
// Spiders

enum class SpiderKind { thin, thick };

/// (S, K, R) split of a spider. `matching` pairs each leg with its body
/// vertex, sorted by leg.
struct SpiderPartition {
  VertexSet legs;
  VertexSet body;
  VertexSet head;
  SpiderKind kind = SpiderKind::thin;
  std::vector<std::pair<int, int>> matching;

  bool operator==(const SpiderPartition&) const = default;
};

/// True iff every SpiderPartition invariant holds for g.
bool is_valid_spider_partition(const Graph& g, const SpiderPartition& p);

/// Thin spiders are read off the degree-1 vertices; thick spiders are thin
/// spiders of the complement with legs and body swapped. With |S| = 2 the
/// kind is reported as thin.
std::optional<SpiderPartition> find_spider(const Graph& g);

/// Thin (sigma) / thick (tau) spider with |S| = |K| = j and head h.
/// Layout: body 0..j-1, legs j..2j-1 (leg j+i matched to body i), head after.
Graph sigma_j(const Graph& h, int j);
Graph tau_j(const Graph& h, int j);

// ---------------------------------------------------------------------------
// Extension graphs

enum class ExtKind { p4, c5, p5, co_p5, banner, co_banner, fork, kite };

std::string_view to_string(ExtKind kind);
bool is_separable(ExtKind kind);
inline constexpr ExtKind kAllExtKinds[] = {ExtKind::p4,     ExtKind::c5,        ExtKind::p5,   ExtKind::co_p5,
                                           ExtKind::banner, ExtKind::co_banner, ExtKind::fork, ExtKind::kite};
inline constexpr ExtKind kSeparableExtKinds[] = {ExtKind::p4, ExtKind::banner, ExtKind::co_banner, ExtKind::fork,
                                                 ExtKind::kite};

/// The extension graph as drawn: path 0-1-2-3 (plus vertex 4 for the
/// five-vertex ones).
Graph extension_graph(ExtKind kind);
std::optional<ExtKind> classify_extension_graph(const Graph& g);

/// Vertices of g[d] that are a midpoint (resp. endpoint) of some induced P4
/// of g[d].
VertexSet p4_midpoints(const Graph& g, VertexSet d);
VertexSet p4_endpoints(const Graph& g, VertexSet d);

/// S(W): vertices outside W lying on an induced P4 that meets W.
VertexSet extension_set(const Graph& g, VertexSet w);

struct ExtSpiderPartition {
  ExtKind kind = ExtKind::p4;
  VertexSet endpoints;  // legs S
  VertexSet midpoints;  // body K
  VertexSet head;       // R, nonempty

  bool operator==(const ExtSpiderPartition&) const = default;
};

/// Searches every induced P4 W for an extension set D = W u S(W) inducing a
/// separable extension graph whose midpoints are complete to V - D, whose
/// endpoints are anticomplete to V - D, and which no P4 crosses. Returns
/// absent for extension graphs themselves (empty head).
std::optional<ExtSpiderPartition> find_ext_spider(const Graph& g);

/// Extension graph of the given separable kind (vertices 0..|kind|-1) with
/// every midpoint joined to all of h (appended after).
Graph sigma_sep(ExtKind kind, const Graph& h);

// ---------------------------------------------------------------------------
// Recognition

bool is_cograph(const Graph& g);
bool is_p4_sparse(const Graph& g, RecognitionMode mode = RecognitionMode::definitional);
bool is_p4_extendible(const Graph& g, RecognitionMode mode = RecognitionMode::definitional);
/// C5-free and P4-extendible.
bool is_62_graph(const Graph& g);
bool is_member(const Graph& g, ClassId id);

/// Witness of non-membership.
struct ClassCertificate {
  enum class Kind { p4, double_p4_five_set, wide_extension, c5 };
  Kind kind;
  VertexSet vertices;   // the P4, the 5-set, W, or the C5
  VertexSet extension;  // S(W) for wide_extension
};

std::string to_string(const ClassCertificate& cert);

/// Absent iff g is in the class.
std::optional<ClassCertificate> class_certificate(const Graph& g, ClassId id);

}  // namespace polaritylab
