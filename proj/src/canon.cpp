#include "polaritylab/canon.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace polaritylab {

std::string CanonicalKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c : bytes_) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

namespace {

using Columns = std::array<std::uint32_t, Graph::kMaxOrder>;

struct Partition {
  std::array<std::uint32_t, Graph::kMaxOrder> cells{};
  int count = 0;

  void insert_at(int index, std::uint32_t cell) {
    for (int i = count; i > index; --i) cells[i] = cells[i - 1];
    cells[index] = cell;
    ++count;
  }
};

// Splits one cell by neighbour counts into the splitter; returns true if it split.
bool split_cell(const Graph& g, Partition& p, int c, std::uint32_t splitter) {
  const std::uint32_t cell = p.cells[c];
  std::array<std::uint32_t, Graph::kMaxOrder + 1> by_count{};
  int distinct = 0;
  for (int v : VertexSet(cell)) {
    const int k = std::popcount(g.row(v) & splitter);
    if (by_count[k] == 0) ++distinct;
    by_count[k] |= std::uint32_t{1} << v;
  }
  if (distinct <= 1) return false;
  int at = c;
  bool first = true;
  for (int k = 0; k <= Graph::kMaxOrder; ++k) {
    if (by_count[k] == 0) continue;
    if (first) {
      p.cells[at] = by_count[k];
      first = false;
    } else {
      p.insert_at(at, by_count[k]);
    }
    ++at;
  }
  return true;
}

// Equitable refinement; every decision depends only on cell positions and
// counts, so the result is equivariant under relabelling.
void refine(const Graph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int w = 0; w < p.count && !changed; ++w) {
      const std::uint32_t splitter = p.cells[w];
      for (int c = 0; c < p.count; ++c) {
        if (std::popcount(p.cells[c]) > 1 && split_cell(g, p, c, splitter)) {
          changed = true;
          break;
        }
      }
    }
  }
}

bool twins(const Graph& g, int u, int v) {
  const std::uint32_t bu = std::uint32_t{1} << u;
  const std::uint32_t bv = std::uint32_t{1} << v;
  return (g.row(u) & ~bv) == (g.row(v) & ~bu);
}

struct Search {
  const Graph& g;
  int n;
  bool have_best = false;
  Columns best{};
  std::array<int, Graph::kMaxOrder> best_order{};

  void leaf(const Partition& p) {
    std::array<int, Graph::kMaxOrder> order{};
    for (int i = 0; i < n; ++i) order[i] = std::countr_zero(p.cells[i]);
    Columns cols{};
    bool decided = !have_best;
    bool better = !have_best;
    for (int j = 1; j < n; ++j) {
      std::uint32_t col = 0;
      for (int i = 0; i < j; ++i)
        if (g.adjacent(order[i], order[j])) col |= std::uint32_t{1} << (j - 1 - i);
      cols[j] = col;
      if (!decided && col != best[j]) {
        decided = true;
        better = col < best[j];
        if (!better) return;
      }
    }
    if (better) {
      best = cols;
      best_order = order;
      have_best = true;
    }
  }

  void run(Partition p) {
    refine(g, p);
    if (p.count == n) {
      leaf(p);
      return;
    }
    int target = 0;
    while (std::popcount(p.cells[target]) == 1) ++target;
    const std::uint32_t cell = p.cells[target];
    std::uint32_t tried = 0;
    for (int v : VertexSet(cell)) {
      bool redundant = false;
      for (int u : VertexSet(tried))
        if (twins(g, u, v)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      tried |= std::uint32_t{1} << v;
      Partition q = p;
      q.cells[target] = cell & ~(std::uint32_t{1} << v);
      q.insert_at(target, std::uint32_t{1} << v);
      run(q);
    }
  }
};

CanonicalKey key_from_columns(int n, const Columns& cols) {
  std::string bytes;
  bytes.push_back(static_cast<char>(n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<int>((cols[j] >> (j - 1 - i)) & 1U);
      if (++filled == 8) {
        bytes.push_back(static_cast<char>(acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) bytes.push_back(static_cast<char>(acc << (8 - filled)));
  return CanonicalKey(std::move(bytes));
}

}  // namespace

CanonicalKey labelled_key(const Graph& g) {
  Columns cols{};
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i)
      if (g.adjacent(i, j)) cols[j] |= std::uint32_t{1} << (j - 1 - i);
  return key_from_columns(g.order(), cols);
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  const int n = g.order();
  CanonicalLabeling out;
  out.perm.assign(n, 0);
  if (n == 0) {
    out.form = g;
    out.key = labelled_key(g);
    return out;
  }
  Search search{g, n};
  Partition root;
  root.cells[0] = g.vertices().bits();
  root.count = 1;
  search.run(root);
  for (int i = 0; i < n; ++i) out.perm[search.best_order[i]] = i;
  out.form = relabel(g, out.perm);
  out.key = key_from_columns(n, search.best);
  return out;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_key(g) == canonical_key(h);
}

namespace {

bool extend_embedding(const Graph& g, const Graph& h, std::vector<int>& map, std::uint32_t used) {
  const int i = static_cast<int>(map.size());
  if (i == h.order()) return true;
  std::uint32_t cand = g.vertices().bits() & ~used;
  for (int j = 0; j < i; ++j) {
    const std::uint32_t image = std::uint32_t{1} << map[j];
    if (h.adjacent(i, j))
      cand &= g.row(map[j]);
    else
      cand &= ~g.row(map[j]) & ~image;
  }
  for (int v : VertexSet(cand)) {
    if (g.degree(v) < h.degree(i)) continue;
    map.push_back(v);
    if (extend_embedding(g, h, map, used | (std::uint32_t{1} << v))) return true;
    map.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& h) {
  if (h.order() > g.order()) return std::nullopt;
  std::vector<int> map;
  map.reserve(h.order());
  if (extend_embedding(g, h, map, 0)) return map;
  return std::nullopt;
}

bool induces_p4(const Graph& g, VertexSet w) {
  if (w.size() != 4) return false;
  int ones = 0;
  int twos = 0;
  for (int v : w) {
    const int d = (g.neighbors(v) & w).size();
    if (d == 1) ++ones;
    else if (d == 2) ++twos;
    else return false;
  }
  return ones == 2 && twos == 2;
}

std::vector<VertexSet> list_induced_p4s(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  const std::vector<int> vs = within.to_vector();
  const std::size_t m = vs.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c)
        for (std::size_t d = c + 1; d < m; ++d) {
          VertexSet w;
          w.insert(vs[a]);
          w.insert(vs[b]);
          w.insert(vs[c]);
          w.insert(vs[d]);
          if (induces_p4(g, w)) out.push_back(w);
        }
  return out;
}

std::vector<VertexSet> list_induced_p4s(const Graph& g) { return list_induced_p4s(g, g.vertices()); }

void sort_unique(std::vector<KeyedGraph>& graphs) {
  std::sort(graphs.begin(), graphs.end());
  graphs.erase(std::unique(graphs.begin(), graphs.end()), graphs.end());
}

}  // namespace polaritylab
