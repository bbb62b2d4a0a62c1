#include "msr/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace msr {

namespace {

// Upper-triangle bits in column order: pair (i, j), i < j (1-based), has
// string index (j-1)(j-2)/2 + (i-1). The string is packed MSB-first into a
// uint64 (earlier pairs more significant), so integer comparison matches
// string comparison and decided prefixes dominate undecided tails.
int pair_index(int i, int j) { return (j - 1) * (j - 2) / 2 + (i - 1); }

uint64_t pair_mask(int n, int i, int j) {
  int bits = n * (n - 1) / 2;
  return uint64_t(1) << (bits - 1 - pair_index(i, j));
}

struct CanonSearch {
  const Graph* g;
  int n;
  std::vector<int> perm;  // perm[pos] = original vertex placed at pos (0-based)
  std::vector<char> used;
  uint64_t best;
  bool have_best;

  void search(int pos, uint64_t prefix) {
    if (pos == n) {
      if (!have_best || prefix < best) {
        best = prefix;
        have_best = true;
      }
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v - 1]) continue;
      uint64_t next = prefix;
      for (int q = 0; q < pos; ++q)
        if (g->adjacent(perm[q], v)) next |= pair_mask(n, q + 1, pos + 1);
      if (have_best) {
        // All pairs within positions 0..pos are decided by `next`; those are
        // the most significant C(pos+1,2) bits.
        int bits = n * (n - 1) / 2;
        int decided = (pos + 1) * pos / 2;
        uint64_t mask = decided == 0 ? 0
                                     : (((uint64_t(1) << decided) - 1) << (bits - decided));
        if ((next & mask) > (best & mask)) continue;
      }
      used[v - 1] = 1;
      perm[pos] = v;
      search(pos + 1, next);
      used[v - 1] = 0;
    }
  }
};

}  // namespace

uint64_t canonical_form(const Graph& g) {
  if (g.order() > 11) throw std::invalid_argument("canonical_form limited to n <= 11");
  CanonSearch s;
  s.g = &g;
  s.n = g.order();
  s.perm.assign(s.n, 0);
  s.used.assign(s.n, 0);
  s.best = 0;
  s.have_best = false;
  s.search(0, 0);
  return s.best;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

Graph graph_from_canonical(int n, uint64_t form) {
  std::vector<std::pair<int, int>> e;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      if (form & pair_mask(n, i, j)) e.push_back({i, j});
  return Graph(n, e);
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_graphs needs n >= 1");
  // Level-by-level vertex augmentation with canonical dedup.
  std::vector<uint64_t> level = {0};  // K1
  for (int k = 2; k <= n; ++k) {
    std::map<uint64_t, char> next;
    for (uint64_t form : level) {
      Graph base = graph_from_canonical(k - 1, form);
      for (uint32_t nb = 0; nb < (uint32_t(1) << (k - 1)); ++nb) {
        std::vector<std::pair<int, int>> e = base.edges();
        for (int v = 1; v < k; ++v)
          if (nb >> (v - 1) & 1) e.push_back({v, k});
        next[canonical_form(Graph(k, e))] = 1;
      }
    }
    level.clear();
    for (const auto& [form, _] : next) level.push_back(form);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (uint64_t form : level) out.push_back(graph_from_canonical(n, form));
  return out;
}

std::vector<Graph> enumerate_connected_coconnected(int n) {
  std::vector<Graph> out;
  for (auto& g : enumerate_graphs(n))
    if (is_connected(g) && is_connected(complement(g))) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_trees needs n >= 1");
  std::vector<uint64_t> level = {0};
  for (int k = 2; k <= n; ++k) {
    std::map<uint64_t, char> next;
    for (uint64_t form : level) {
      Graph base = graph_from_canonical(k - 1, form);
      for (int v = 1; v < k; ++v) {
        std::vector<std::pair<int, int>> e = base.edges();
        e.push_back({v, k});
        next[canonical_form(Graph(k, e))] = 1;
      }
    }
    level.clear();
    for (const auto& [form, _] : next) level.push_back(form);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (uint64_t form : level) out.push_back(graph_from_canonical(n, form));
  return out;
}

}  // namespace msr
