#include "polaritylab/polarity.hpp"

#include <bit>
#include <charconv>

#include "polaritylab/canon.hpp"
#include "polaritylab/named.hpp"

namespace polaritylab {

std::string to_string(PartBound b) { return b.infinite() ? "inf" : std::to_string(b.value()); }

namespace {

PartBound parse_bound(std::string_view text) {
  if (text == "inf") return PartBound::inf();
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0)
    throw Error(ErrorCode::bad_parameter, "bad part bound '" + std::string(text) + "'");
  return value;
}

}  // namespace

PolarSpec parse_polar_spec(std::string_view text) {
  if (text == "unipolar") return PolarSpec::unipolar();
  if (text == "monopolar") return PolarSpec::monopolar();
  if (text == "polar") return PolarSpec::polar();
  if (text == "split") return PolarSpec::split();
  if (text.starts_with("sk:")) {
    text.remove_prefix(3);
    const auto comma = text.find(',');
    if (comma != std::string_view::npos)
      return PolarSpec::sk_polar(parse_bound(text.substr(0, comma)), parse_bound(text.substr(comma + 1)));
  }
  throw Error(ErrorCode::bad_parameter, "bad polarity spec '" + std::string(text) + "'");
}

std::string to_string(const PolarSpec& spec) {
  switch (spec.kind) {
    case PolarSpec::Kind::sk: return "sk:" + to_string(spec.s) + "," + to_string(spec.k);
    case PolarSpec::Kind::unipolar: return "unipolar";
    case PolarSpec::Kind::monopolar: return "monopolar";
    case PolarSpec::Kind::polar: return "polar";
    case PolarSpec::Kind::split: return "split";
  }
  return "?";
}

namespace {

// Number of cliques when g[s] is a cluster, otherwise -1.
int cluster_parts(const Graph& g, std::uint32_t s) {
  int parts = 0;
  std::uint32_t left = s;
  while (left != 0) {
    const int v = std::countr_zero(left);
    const std::uint32_t clique = (g.row(v) & s) | (std::uint32_t{1} << v);
    for (int u : VertexSet(clique))
      if (((g.row(u) & s) | (std::uint32_t{1} << u)) != clique) return -1;
    left &= ~clique;
    ++parts;
  }
  return parts;
}

// Number of parts when g[s] is complete multipartite, otherwise -1.
int multipartite_parts(const Graph& g, std::uint32_t s) {
  int parts = 0;
  std::uint32_t left = s;
  while (left != 0) {
    const int v = std::countr_zero(left);
    const std::uint32_t part = s & ~g.row(v);
    for (int u : VertexSet(part))
      if ((s & ~g.row(u)) != part) return -1;
    left &= ~part;
    ++parts;
  }
  return parts;
}

bool a_side_ok(const Graph& g, const PolarSpec& spec, std::uint32_t a) {
  if (spec.kind == PolarSpec::Kind::unipolar) return is_clique(g, VertexSet(a));
  const int parts = multipartite_parts(g, a);
  return parts >= 0 && parts <= spec.s.resolve(g.order());
}

bool b_side_ok(const Graph& g, const PolarSpec& spec, std::uint32_t b) {
  const int parts = cluster_parts(g, b);
  if (spec.kind == PolarSpec::Kind::unipolar) return parts >= 0;
  return parts >= 0 && parts <= spec.k.resolve(g.order());
}

struct PartitionSearch {
  const Graph& g;
  const PolarSpec& spec;
  int n;
  int target = 0;
  std::uint32_t found = 0;

  // Vertices below `pos` are decided: those in `a` go to A, the rest to B.
  bool run(int pos, std::uint32_t a, int size) {
    const std::uint32_t decided = (pos >= 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << pos) - 1);
    if (size == target) {
      const std::uint32_t b = g.vertices().bits() & ~a;
      if (!b_side_ok(g, spec, b)) return false;
      found = a;
      return true;
    }
    std::uint32_t b_prefix = decided & ~a;
    for (int v = pos; v <= n - (target - size); ++v) {
      if (!b_side_ok(g, spec, b_prefix)) return false;
      const std::uint32_t next = a | (std::uint32_t{1} << v);
      if (a_side_ok(g, spec, next) && run(v + 1, next, size + 1)) return true;
      b_prefix |= std::uint32_t{1} << v;
    }
    return false;
  }
};

}  // namespace

bool is_cluster(const Graph& g, VertexSet within, PartBound k) {
  const int parts = cluster_parts(g, within.bits());
  return parts >= 0 && parts <= k.resolve(g.order());
}

bool is_cluster(const Graph& g, PartBound k) { return is_cluster(g, g.vertices(), k); }

bool is_complete_multipartite(const Graph& g, VertexSet within, PartBound s) {
  const int parts = multipartite_parts(g, within.bits());
  return parts >= 0 && parts <= s.resolve(g.order());
}

bool is_complete_multipartite(const Graph& g, PartBound s) { return is_complete_multipartite(g, g.vertices(), s); }

bool is_split(const Graph& g) {
  static const Graph forbidden[] = {copies(2, named::complete(2)), named::cycle(4), named::cycle(5)};
  for (const Graph& f : forbidden)
    if (contains_induced(g, f)) return false;
  return true;
}

bool is_valid_polar_partition(const Graph& g, const PolarSpec& spec, const PolarPartition& p) {
  if (p.a.intersects(p.b) || (p.a | p.b) != g.vertices()) return false;
  return a_side_ok(g, spec, p.a.bits()) && b_side_ok(g, spec, p.b.bits());
}

std::optional<PolarPartition> find_polar_partition(const Graph& g, const PolarSpec& spec) {
  const int n = g.order();
  if (n > kPolarSearchCap) throw Error(ErrorCode::cap_exceeded, "polar partition search is limited to 20 vertices");
  PartitionSearch search{g, spec, n};
  for (int size = 0; size <= n; ++size) {
    search.target = size;
    if (search.run(0, 0, 0)) {
      const VertexSet a(search.found);
      return PolarPartition{a, g.vertices() - a};
    }
  }
  return std::nullopt;
}

}  // namespace polaritylab
