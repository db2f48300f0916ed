#include "polaritylab/claims.hpp"

#include <algorithm>

#include "polaritylab/generate.hpp"
#include "polaritylab/graph6.hpp"
#include "polaritylab/named.hpp"
#include "polaritylab/obstructions.hpp"

namespace polaritylab {

namespace {

const ClassId kBothClasses[] = {ClassId::p4_sparse, ClassId::p4_extendible};

std::string class_tag(ClassId id) { return std::string(to_string(id)); }

std::vector<KeyedGraph> keyed(const std::vector<Graph>& graphs) {
  std::vector<KeyedGraph> out;
  for (const Graph& g : graphs) out.push_back(KeyedGraph::of(g));
  sort_unique(out);
  return out;
}

std::vector<KeyedGraph> essentials_up_to(int last) {
  std::vector<Graph> out;
  for (int i = 1; i <= last; ++i) out.push_back(named::e(i));
  return keyed(out);
}

// Reports members missing from either side of an expected/actual comparison.
// Expected graphs above the report's scale are out of reach and ignored.
void compare(ClaimReport& report, const std::string& label, const std::vector<KeyedGraph>& expected,
             const std::vector<KeyedGraph>& actual) {
  report.checked += actual.size();
  for (const auto& g : expected)
    if (g.graph.order() <= report.n_max && !std::binary_search(actual.begin(), actual.end(), g))
      report.counterexamples.push_back(label + ": missing " + graph6_encode(g.graph));
  for (const auto& g : actual)
    if (!std::binary_search(expected.begin(), expected.end(), g))
      report.counterexamples.push_back(label + ": unexpected " + graph6_encode(g.graph));
}

void unipolar_lists(ClaimReport& r, int n, Execution exec, int cap) {
  compare(r, "p4sparse unipolar", catalog_list({CatalogId::Kind::unipolar_sparse}),
          enumerate_minimal_obstructions(ClassId::p4_sparse, PolarSpec::unipolar(), n, exec, cap));
  compare(r, "p4extendible unipolar", catalog_list({CatalogId::Kind::unipolar_extendible}),
          enumerate_minimal_obstructions(ClassId::p4_extendible, PolarSpec::unipolar(), n, exec, cap));
}

void nine_thirteen(ClaimReport& r, int n, Execution exec, int cap) {
  const PolarSpec spec = PolarSpec::sk_polar(2, 1);
  compare(r, "p4sparse sk:2,1", essentials_up_to(9), enumerate_minimal_obstructions(ClassId::p4_sparse, spec, n, exec, cap));
  compare(r, "p4extendible sk:2,1", essentials_up_to(13),
          enumerate_minimal_obstructions(ClassId::p4_extendible, spec, n, exec, cap));
}

void inf1_lists(ClaimReport& r, int n, Execution exec, int cap) {
  const PolarSpec spec = PolarSpec::sk_polar(PartBound::inf(), 1);
  compare(r, "p4sparse sk:inf,1", catalog_list({CatalogId::Kind::co_monopolar_sparse}),
          enumerate_minimal_obstructions(ClassId::p4_sparse, spec, n, exec, cap));
  compare(r, "p4extendible sk:inf,1", catalog_list({CatalogId::Kind::co_monopolar_extendible}),
          enumerate_minimal_obstructions(ClassId::p4_extendible, spec, n, exec, cap));
}

void polar_lists(ClaimReport& r, int n, Execution exec, int cap) {
  compare(r, "p4sparse polar", catalog_list({CatalogId::Kind::polar_sparse}),
          enumerate_minimal_obstructions(ClassId::p4_sparse, PolarSpec::polar(), n, exec, cap));
  compare(r, "p4extendible polar", catalog_list({CatalogId::Kind::polar_extendible}),
          enumerate_minimal_obstructions(ClassId::p4_extendible, PolarSpec::polar(), n, exec, cap));
}

void sparse_cographs(ClaimReport& r, int n, Execution exec, int cap) {
  const PolarSpec specs[] = {PolarSpec::sk_polar(2, 1), PolarSpec::sk_polar(3, 1),
                             PolarSpec::sk_polar(PartBound::inf(), 1), PolarSpec::polar()};
  const auto members = generate_class(ClassId::p4_sparse, n, exec, cap);
  for (const PolarSpec& spec : specs)
    for (const auto& g : filter_minimal_obstructions(members, spec, exec)) {
      ++r.checked;
      if (!is_cograph(g.graph)) r.counterexamples.push_back(to_string(spec) + ": not a cograph " + graph6_encode(g.graph));
    }
}

void construct_agree(ClaimReport& r, int n, Execution exec, int cap) {
  for (ClassId id : kBothClasses)
    for (int s : {2, 3}) {
      const std::string label = class_tag(id) + " s=" + std::to_string(s);
      compare(r, label, construct_s1_obstructions(id, s, n),
              enumerate_minimal_obstructions(id, PolarSpec::sk_polar(s, 1), n, exec, cap));
    }
}

void recognizers(ClaimReport& r, int n, Execution exec, int cap) {
  const auto all = enumerate_graphs(n, exec, cap);
  const auto bad = indexed_map<char>(
      all.size(),
      [&](std::size_t i) {
        const Graph& g = all[i].graph;
        const bool sparse = is_p4_sparse(g, RecognitionMode::definitional) ==
                            is_p4_sparse(g, RecognitionMode::structural);
        const bool ext = is_p4_extendible(g, RecognitionMode::definitional) ==
                         is_p4_extendible(g, RecognitionMode::structural);
        return static_cast<char>((sparse ? 0 : 1) | (ext ? 0 : 2));
      },
      exec);
  r.checked += all.size();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (bad[i] & 1) r.counterexamples.push_back("p4sparse modes disagree on " + graph6_encode(all[i].graph));
    if (bad[i] & 2) r.counterexamples.push_back("p4extendible modes disagree on " + graph6_encode(all[i].graph));
  }
  for (ClassId id : {ClassId::cograph, ClassId::p4_sparse, ClassId::p4_extendible, ClassId::six_two}) {
    std::vector<KeyedGraph> filtered;
    for (const auto& g : all)
      if (is_member(g.graph, id)) filtered.push_back(g);
    sort_unique(filtered);
    compare(r, class_tag(id) + " generation", filtered, generate_class(id, n, exec, cap));
  }
}

void disconnected_s1(ClaimReport& r, int n, Execution exec, int cap) {
  std::vector<Graph> expected;
  for (int e : essential_numbers(ClassId::p4_extendible))
    if (!is_connected(named::e(e))) expected.push_back(named::e(e));
  for (const Graph& g : s1_fixed_family(2)) expected.push_back(g);
  std::vector<KeyedGraph> disconnected;
  for (const auto& g : filter_minimal_obstructions(enumerate_graphs(n, exec, cap), PolarSpec::sk_polar(2, 1), exec))
    if (!is_connected(g.graph)) disconnected.push_back(g);
  compare(r, "all graphs sk:2,1 disconnected", keyed(expected), disconnected);
}

void bound(ClaimReport& r, int n, Execution exec, int cap) {
  const auto members = generate_class(ClassId::p4_sparse, n, exec, cap);
  for (int s : {1, 2})
    for (int k : {1, 2}) {
      const auto found = filter_minimal_obstructions(members, PolarSpec::sk_polar(s, k), exec);
      r.checked += found.size();
      for (const auto& g : found)
        if (g.graph.order() > (s + 1) * (k + 1))
          r.counterexamples.push_back("sk:" + std::to_string(s) + "," + std::to_string(k) + ": order " +
                                      std::to_string(g.graph.order()) + " " + graph6_encode(g.graph));
    }
}

void disconnected_polar(ClaimReport& r, int n, Execution exec, int cap) {
  const Graph p3 = named::path(3);
  std::size_t excluded = 0;
  for (ClassId id : kBothClasses) {
    std::vector<Graph> expected;
    if (n >= 4)
      for (const auto& h : enumerate_minimal_obstructions(id, PolarSpec::monopolar(), n - 3, exec, cap)) {
        if (minimal_obstruction(h.graph, PolarSpec::polar())) {
          ++excluded;
          continue;
        }
        expected.push_back(disjoint_union(p3, h.graph));
      }
    std::vector<KeyedGraph> disconnected;
    const auto found = enumerate_minimal_obstructions(id, PolarSpec::polar(), n, exec, cap);
    for (const auto& g : found)
      if (!is_connected(g.graph)) disconnected.push_back(g);
    r.checked += found.size() - disconnected.size();
    compare(r, class_tag(id) + " disconnected polar", keyed(expected), disconnected);
  }
  r.summary = "monopolar obstructions dropped as also minimal polar: " + std::to_string(excluded);
}

void spiders_not_obstructions(ClaimReport& r, int n, Execution exec, int cap) {
  std::vector<Graph> spiders;
  const auto sparse = generate_class(ClassId::p4_sparse, std::max(1, n - 4), exec, cap);
  for (const auto& h : sparse)
    for (int j = 2; h.graph.order() + 2 * j <= n; ++j) {
      spiders.push_back(sigma_j(h.graph, j));
      if (j > 2) spiders.push_back(tau_j(h.graph, j));
    }
  const auto extendible = generate_class(ClassId::p4_extendible, std::max(1, n - 4), exec, cap);
  for (const auto& h : extendible)
    for (ExtKind kind : kSeparableExtKinds)
      if (h.graph.order() + extension_graph(kind).order() <= n) spiders.push_back(sigma_sep(kind, h.graph));
  const auto candidates = keyed(spiders);
  for (int k = 1; k <= 3; ++k) {
    const PolarSpec spec = PolarSpec::sk_polar(1, k);
    for (const auto& g : filter_minimal_obstructions(candidates, spec, exec))
      r.counterexamples.push_back(to_string(spec) + ": spider is a minimal obstruction " + graph6_encode(g.graph));
  }
  r.checked += candidates.size();
}

struct ClaimEntry {
  std::string_view id;
  int scale;
  void (*run)(ClaimReport&, int, Execution, int);
};

constexpr ClaimEntry kClaims[] = {
    {"UNIPOLAR_LISTS", 6, unipolar_lists},   {"NINE_THIRTEEN", 8, nine_thirteen},
    {"INF1_LISTS", 7, inf1_lists},           {"POLAR_LISTS", 9, polar_lists},
    {"SPARSE_COG", 9, sparse_cographs},      {"CONSTRUCT_AGREE", 8, construct_agree},
    {"RECOGNIZERS", 8, recognizers},         {"DISC_S1", 8, disconnected_s1},
    {"BOUND", 9, bound},                     {"DISC_POLAR", 9, disconnected_polar},
    {"SPIDER_NOT_OBS", 9, spiders_not_obstructions},
};

const ClaimEntry& find_claim(std::string_view id) {
  for (const auto& c : kClaims)
    if (c.id == id) return c;
  throw Error(ErrorCode::unknown_claim, "unknown claim '" + std::string(id) + "'");
}

}  // namespace

const std::vector<std::string_view>& claim_ids() {
  static const std::vector<std::string_view> ids = [] {
    std::vector<std::string_view> out;
    for (const auto& c : kClaims) out.push_back(c.id);
    return out;
  }();
  return ids;
}

int default_claim_scale(std::string_view id) { return find_claim(id).scale; }

ClaimReport verify_claim(std::string_view id, std::optional<int> n_max, Execution exec, int cap) {
  const ClaimEntry& claim = find_claim(id);
  const int n = n_max.value_or(claim.scale);
  if (n > cap) throw Error(ErrorCode::cap_exceeded, "claim scale exceeds the enumeration cap");
  if (n < 1) throw Error(ErrorCode::bad_parameter, "claim scale must be positive");
  ClaimReport report;
  report.id = std::string(claim.id);
  report.n_max = n;
  claim.run(report, n, exec, cap);
  report.passed = report.counterexamples.empty();
  std::string counts =
      std::to_string(report.checked) + " checked, " + std::to_string(report.counterexamples.size()) + " counterexamples";
  report.summary = report.summary.empty() ? counts : counts + "; " + report.summary;
  return report;
}

}  // namespace polaritylab
