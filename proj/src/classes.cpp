#include "polaritylab/classes.hpp"

#include <array>
#include <sstream>

#include "polaritylab/canon.hpp"
#include "polaritylab/named.hpp"

namespace polaritylab {

std::string_view to_string(ClassId id) {
  switch (id) {
    case ClassId::cograph: return "cograph";
    case ClassId::p4_sparse: return "p4sparse";
    case ClassId::p4_extendible: return "p4extendible";
    case ClassId::six_two: return "62";
  }
  return "?";
}

ClassId parse_class_id(std::string_view text) {
  if (text == "cograph") return ClassId::cograph;
  if (text == "p4sparse" || text == "p4-sparse") return ClassId::p4_sparse;
  if (text == "p4extendible" || text == "p4-extendible") return ClassId::p4_extendible;
  if (text == "62" || text == "six-two" || text == "(6,2)") return ClassId::six_two;
  throw Error(ErrorCode::unknown_id, "unknown graph class '" + std::string(text) + "'");
}

std::string_view to_string(ExtKind kind) {
  switch (kind) {
    case ExtKind::p4: return "P4";
    case ExtKind::c5: return "C5";
    case ExtKind::p5: return "P5";
    case ExtKind::co_p5: return "co-P5";
    case ExtKind::banner: return "P";
    case ExtKind::co_banner: return "co-P";
    case ExtKind::fork: return "F";
    case ExtKind::kite: return "co-F";
  }
  return "?";
}

bool is_separable(ExtKind kind) {
  return kind != ExtKind::c5 && kind != ExtKind::p5 && kind != ExtKind::co_p5;
}

// ---------------------------------------------------------------------------
// Spiders

bool is_valid_spider_partition(const Graph& g, const SpiderPartition& p) {
  const VertexSet s = p.legs, k = p.body, r = p.head;
  if (s.intersects(k) || s.intersects(r) || k.intersects(r) || (s | k | r) != g.vertices()) return false;
  if (s.size() != k.size() || s.size() < 2) return false;
  if (!is_clique(g, k) || !is_independent(g, s)) return false;
  if (!completely_adjacent(g, r, k) || !completely_nonadjacent(g, r, s)) return false;
  if (p.matching.size() != static_cast<std::size_t>(s.size())) return false;
  VertexSet matched_legs, matched_body;
  for (auto [leg, b] : p.matching) {
    if (!s.contains(leg) || !k.contains(b)) return false;
    matched_legs.insert(leg);
    matched_body.insert(b);
    const VertexSet seen = g.neighbors(leg) & (s | k);
    const VertexSet expected = p.kind == SpiderKind::thin ? VertexSet::single(b) : k - VertexSet::single(b);
    if (seen != expected) return false;
  }
  return matched_legs == s && matched_body == k;
}

namespace {

std::optional<SpiderPartition> find_thin_spider(const Graph& g) {
  VertexSet legs;
  for (int v : g.vertices())
    if (g.degree(v) == 1) legs.insert(v);
  if (legs.size() < 2) return std::nullopt;
  SpiderPartition p;
  p.kind = SpiderKind::thin;
  p.legs = legs;
  for (int leg : legs) {
    const int b = g.neighbors(leg).front();
    if (p.body.contains(b)) return std::nullopt;
    p.body.insert(b);
    p.matching.emplace_back(leg, b);
  }
  p.head = g.vertices() - legs - p.body;
  if (!is_valid_spider_partition(g, p)) return std::nullopt;
  return p;
}

}  // namespace

std::optional<SpiderPartition> find_spider(const Graph& g) {
  if (auto thin = find_thin_spider(g)) return thin;
  auto co = find_thin_spider(complement(g));
  if (!co) return std::nullopt;
  SpiderPartition p;
  p.kind = SpiderKind::thick;
  p.legs = co->body;
  p.body = co->legs;
  p.head = co->head;
  for (auto [leg, b] : co->matching) p.matching.emplace_back(b, leg);
  std::sort(p.matching.begin(), p.matching.end());
  if (!is_valid_spider_partition(g, p)) return std::nullopt;
  return p;
}

namespace {

Graph build_spider(const Graph& h, int j, bool thin) {
  if (j < 2) throw Error(ErrorCode::bad_parameter, "spider parameter j must be >= 2");
  if (h.order() + 2 * j > Graph::kMaxOrder)
    throw Error(ErrorCode::cap_exceeded, "spider would exceed the vertex cap");
  Graph g = disjoint_union(named::complete(j), disjoint_union(named::empty(j), h));
  for (int i = 0; i < j; ++i)
    for (int b = 0; b < j; ++b)
      if ((i == b) == thin) g.add_edge(j + i, b);
  for (int r = 0; r < h.order(); ++r)
    for (int b = 0; b < j; ++b) g.add_edge(2 * j + r, b);
  return g;
}

}  // namespace

Graph sigma_j(const Graph& h, int j) { return build_spider(h, j, true); }
Graph tau_j(const Graph& h, int j) { return build_spider(h, j, false); }

// ---------------------------------------------------------------------------
// Extension graphs

Graph extension_graph(ExtKind kind) {
  using K = NamedGraph::Kind;
  switch (kind) {
    case ExtKind::p4: return named::path(4);
    case ExtKind::c5: return named::cycle(5);
    case ExtKind::p5: return named::path(5);
    case ExtKind::co_p5: return catalog(NamedGraph::of(K::house));
    case ExtKind::banner: return catalog(NamedGraph::of(K::banner));
    case ExtKind::co_banner: return catalog(NamedGraph::of(K::co_banner));
    case ExtKind::fork: return catalog(NamedGraph::of(K::fork));
    case ExtKind::kite: return catalog(NamedGraph::of(K::kite));
  }
  throw Error(ErrorCode::unknown_name, "extension kind");
}

std::optional<ExtKind> classify_extension_graph(const Graph& g) {
  static const auto keys = [] {
    std::array<CanonicalKey, 8> out;
    for (std::size_t i = 0; i < 8; ++i) out[i] = canonical_key(extension_graph(kAllExtKinds[i]));
    return out;
  }();
  if (g.order() != 4 && g.order() != 5) return std::nullopt;
  const CanonicalKey key = canonical_key(g);
  for (std::size_t i = 0; i < 8; ++i)
    if (keys[i] == key) return kAllExtKinds[i];
  return std::nullopt;
}

VertexSet p4_midpoints(const Graph& g, VertexSet d) {
  VertexSet out;
  for (VertexSet w : list_induced_p4s(g, d))
    for (int v : w)
      if ((g.neighbors(v) & w).size() == 2) out.insert(v);
  return out;
}

VertexSet p4_endpoints(const Graph& g, VertexSet d) {
  VertexSet out;
  for (VertexSet w : list_induced_p4s(g, d))
    for (int v : w)
      if ((g.neighbors(v) & w).size() == 1) out.insert(v);
  return out;
}

VertexSet extension_set(const Graph& g, VertexSet w) {
  if (!induces_p4(g, w)) throw Error(ErrorCode::not_a_p4, "set does not induce a P4");
  VertexSet out;
  for (VertexSet q : list_induced_p4s(g))
    if (q.intersects(w)) out |= q;
  return out - w;
}

namespace {

bool p4_crosses(const Graph& g, VertexSet a, VertexSet b) {
  for (VertexSet q : list_induced_p4s(g))
    if (q.intersects(a) && q.intersects(b)) return true;
  return false;
}

}  // namespace

std::optional<ExtSpiderPartition> find_ext_spider(const Graph& g) {
  const std::vector<VertexSet> p4s = list_induced_p4s(g);
  for (VertexSet w : p4s) {
    VertexSet d = w;
    for (VertexSet q : p4s)
      if (q.intersects(w)) d |= q;
    const VertexSet head = g.vertices() - d;
    if (head.empty()) continue;
    const auto kind = classify_extension_graph(induced_subgraph(g, d));
    if (!kind || !is_separable(*kind)) continue;
    const VertexSet mids = p4_midpoints(g, d);
    const VertexSet ends = p4_endpoints(g, d);
    if (mids.intersects(ends) || (mids | ends) != d) continue;
    if (!completely_adjacent(g, mids, head) || !completely_nonadjacent(g, ends, head)) continue;
    if (p4_crosses(g, d, head)) continue;
    return ExtSpiderPartition{*kind, ends, mids, head};
  }
  return std::nullopt;
}

Graph sigma_sep(ExtKind kind, const Graph& h) {
  if (!is_separable(kind)) throw Error(ErrorCode::bad_parameter, "extension graph is not separable");
  const Graph s = extension_graph(kind);
  if (s.order() + h.order() > Graph::kMaxOrder)
    throw Error(ErrorCode::cap_exceeded, "separable extension would exceed the vertex cap");
  Graph g = disjoint_union(s, h);
  for (int m : p4_midpoints(s, s.vertices()))
    for (int r = 0; r < h.order(); ++r) g.add_edge(m, s.order() + r);
  return g;
}

// ---------------------------------------------------------------------------
// Recognition

bool is_cograph(const Graph& g) {
  const Graph p4 = named::path(4);
  return !contains_induced(g, p4).has_value();
}

namespace {

const std::array<Graph, 4>& sparse_forbidden() {
  static const std::array<Graph, 4> forbidden = {
      named::cycle(5), named::path(5), catalog(NamedGraph::of(NamedGraph::Kind::banner)),
      catalog(NamedGraph::of(NamedGraph::Kind::fork))};
  return forbidden;
}

bool sparse_structural(const Graph& g, VertexSet within) {
  if (within.size() <= 1) return true;
  auto comps = components(g, within);
  if (comps.size() > 1) {
    for (VertexSet c : comps)
      if (!sparse_structural(g, c)) return false;
    return true;
  }
  auto cocomps = co_components(g, within);
  if (cocomps.size() > 1) {
    for (VertexSet c : cocomps)
      if (!sparse_structural(g, c)) return false;
    return true;
  }
  const Graph sub = induced_subgraph(g, within);
  const auto spider = find_spider(sub);
  if (!spider) return false;
  const std::vector<int> ids = within.to_vector();
  VertexSet head;
  for (int v : spider->head) head.insert(ids[v]);
  return sparse_structural(g, head);
}

bool extendible_structural(const Graph& g, VertexSet within) {
  if (within.size() <= 1) return true;
  auto comps = components(g, within);
  if (comps.size() > 1) {
    for (VertexSet c : comps)
      if (!extendible_structural(g, c)) return false;
    return true;
  }
  auto cocomps = co_components(g, within);
  if (cocomps.size() > 1) {
    for (VertexSet c : cocomps)
      if (!extendible_structural(g, c)) return false;
    return true;
  }
  const Graph sub = induced_subgraph(g, within);
  if (classify_extension_graph(sub)) return true;
  const auto spider = find_ext_spider(sub);
  if (!spider) return false;
  const std::vector<int> ids = within.to_vector();
  VertexSet head;
  for (int v : spider->head) head.insert(ids[v]);
  return extendible_structural(g, head);
}

std::optional<ClassCertificate> wide_extension(const Graph& g) {
  for (VertexSet w : list_induced_p4s(g)) {
    const VertexSet ext = extension_set(g, w);
    if (ext.size() >= 2) return ClassCertificate{ClassCertificate::Kind::wide_extension, w, ext};
  }
  return std::nullopt;
}

std::optional<ClassCertificate> double_p4(const Graph& g) {
  const std::vector<VertexSet> p4s = list_induced_p4s(g);
  for (std::size_t i = 0; i < p4s.size(); ++i)
    for (std::size_t j = i + 1; j < p4s.size(); ++j) {
      const VertexSet u = p4s[i] | p4s[j];
      if (u.size() == 5) return ClassCertificate{ClassCertificate::Kind::double_p4_five_set, u, {}};
    }
  return std::nullopt;
}

}  // namespace

bool is_p4_sparse(const Graph& g, RecognitionMode mode) {
  if (mode == RecognitionMode::structural) return sparse_structural(g, g.vertices());
  const Graph co = complement(g);
  for (const Graph& f : sparse_forbidden())
    if (contains_induced(g, f) || contains_induced(co, f)) return false;
  return true;
}

bool is_p4_extendible(const Graph& g, RecognitionMode mode) {
  if (mode == RecognitionMode::structural) return extendible_structural(g, g.vertices());
  return !wide_extension(g).has_value();
}

bool is_62_graph(const Graph& g) {
  return is_p4_extendible(g) && !contains_induced(g, named::cycle(5)).has_value();
}

bool is_member(const Graph& g, ClassId id) {
  switch (id) {
    case ClassId::cograph: return is_cograph(g);
    case ClassId::p4_sparse: return is_p4_sparse(g);
    case ClassId::p4_extendible: return is_p4_extendible(g);
    case ClassId::six_two: return is_62_graph(g);
  }
  return false;
}

std::optional<ClassCertificate> class_certificate(const Graph& g, ClassId id) {
  switch (id) {
    case ClassId::cograph: {
      auto p4s = list_induced_p4s(g);
      if (p4s.empty()) return std::nullopt;
      return ClassCertificate{ClassCertificate::Kind::p4, p4s.front(), {}};
    }
    case ClassId::p4_sparse: return double_p4(g);
    case ClassId::p4_extendible: return wide_extension(g);
    case ClassId::six_two: {
      if (auto wide = wide_extension(g)) return wide;
      if (auto c5 = contains_induced(g, named::cycle(5)))
        return ClassCertificate{ClassCertificate::Kind::c5, VertexSet::of(*c5), {}};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::string to_string(const ClassCertificate& cert) {
  std::ostringstream out;
  auto list = [&](VertexSet s) {
    out << '{';
    bool first = true;
    for (int v : s) {
      out << (first ? "" : ",") << v;
      first = false;
    }
    out << '}';
  };
  switch (cert.kind) {
    case ClassCertificate::Kind::p4: out << "induced P4 "; break;
    case ClassCertificate::Kind::double_p4_five_set: out << "five vertices with two P4s "; break;
    case ClassCertificate::Kind::wide_extension: out << "P4 "; break;
    case ClassCertificate::Kind::c5: out << "induced C5 "; break;
  }
  list(cert.vertices);
  if (cert.kind == ClassCertificate::Kind::wide_extension) {
    out << " with extension set ";
    list(cert.extension);
  }
  return out.str();
}

}  // namespace polaritylab
