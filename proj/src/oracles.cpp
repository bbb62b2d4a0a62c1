#include "msr/oracles.hpp"

#include <algorithm>
#include <functional>

#include "msr/delta.hpp"

namespace msr {

namespace {

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
  std::vector<std::vector<int>> cliques;
  std::vector<int> r, p, x;
  for (int v = 1; v <= g.order(); ++v) p.push_back(v);
  std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> bk =
      [&](std::vector<int>& R, std::vector<int> P, std::vector<int> X) {
        if (P.empty() && X.empty()) {
          cliques.push_back(R);
          return;
        }
        int pivot = !P.empty() ? P.front() : X.front();
        std::vector<int> ext;
        for (int v : P)
          if (!g.adjacent(pivot, v) && v != pivot) ext.push_back(v);
        if (std::find(P.begin(), P.end(), pivot) != P.end()) ext.push_back(pivot);
        for (int v : ext) {
          std::vector<int> np, nx;
          for (int u : P)
            if (g.adjacent(u, v)) np.push_back(u);
          for (int u : X)
            if (g.adjacent(u, v)) nx.push_back(u);
          R.push_back(v);
          bk(R, np, nx);
          R.pop_back();
          P.erase(std::remove(P.begin(), P.end(), v), P.end());
          X.push_back(v);
        }
      };
  bk(r, p, x);
  for (auto& c : cliques) std::sort(c.begin(), c.end());
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

}  // namespace

CliqueCover edge_clique_cover(const Graph& g, int cap) {
  if (g.order() > cap) throw capacity_error("edge_clique_cover: vertex cap exceeded");
  CliqueCover best;
  if (g.edge_count() == 0) return best;

  auto cliques = maximal_cliques(g);
  int ne = g.edge_count();
  std::vector<int> edge_id(static_cast<size_t>(g.order() + 1) * (g.order() + 1), -1);
  for (int i = 0; i < ne; ++i) {
    auto [u, v] = g.edges()[i];
    edge_id[u * (g.order() + 1) + v] = i;
    edge_id[v * (g.order() + 1) + u] = i;
  }
  // Edge set of each maximal clique as a bitmask (ne <= 45 at the cap).
  std::vector<uint64_t> clique_mask;
  for (const auto& c : cliques) {
    uint64_t mask = 0;
    for (size_t a = 0; a < c.size(); ++a)
      for (size_t b = a + 1; b < c.size(); ++b)
        mask |= uint64_t(1) << edge_id[c[a] * (g.order() + 1) + c[b]];
    clique_mask.push_back(mask);
  }
  uint64_t all = ne == 64 ? ~uint64_t(0) : (uint64_t(1) << ne) - 1;

  // Greedy initial upper bound.
  std::vector<int> greedy;
  uint64_t covered = 0;
  while (covered != all) {
    int bestc = -1, gain = -1;
    for (size_t i = 0; i < clique_mask.size(); ++i) {
      int add = __builtin_popcountll(clique_mask[i] & ~covered);
      if (add > gain) {
        gain = add;
        bestc = static_cast<int>(i);
      }
    }
    greedy.push_back(bestc);
    covered |= clique_mask[bestc];
  }
  int best_size = static_cast<int>(greedy.size());
  std::vector<int> best_pick = greedy;

  // Branch on the first uncovered edge; only cliques containing it matter.
  std::vector<int> pick;
  std::function<void(uint64_t)> dfs = [&](uint64_t cov) {
    if (static_cast<int>(pick.size()) >= best_size) return;
    if (cov == all) {
      best_size = static_cast<int>(pick.size());
      best_pick = pick;
      return;
    }
    int e = __builtin_ctzll(~cov & all);
    for (size_t i = 0; i < clique_mask.size(); ++i) {
      if (!(clique_mask[i] >> e & 1)) continue;
      pick.push_back(static_cast<int>(i));
      dfs(cov | clique_mask[i]);
      pick.pop_back();
    }
  };
  dfs(0);

  best.size = best_size;
  for (int i : best_pick) best.cliques.push_back(cliques[i]);
  return best;
}

namespace {

bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || g.edge_count() != g.order()) return false;
  for (int v = 1; v <= g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

bool is_tree(const Graph& g) {
  return is_connected(g) && g.edge_count() == g.order() - 1;
}

bool is_complete(const Graph& g) {
  return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

}  // namespace

MsrVerdict msr_base(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("msr_base needs a connected graph");
  MsrVerdict v;
  int n = g.order();
  if (is_tree(g)) {
    v.value = n - 1;
    v.method = MsrMethod::tree;
    v.trace.push_back("tree on " + std::to_string(n) + " vertices: msr = n-1");
    return v;
  }
  if (is_cycle_graph(g)) {
    v.value = n - 2;
    v.method = MsrMethod::cycle;
    v.trace.push_back("cycle C" + std::to_string(n) + ": msr = n-2");
    return v;
  }
  if (is_complete(g)) {
    v.value = 1;
    v.method = MsrMethod::complete;
    v.trace.push_back("complete graph: msr = 1");
    return v;
  }
  if (is_chordal(g) && n <= 10) {
    auto cover = edge_clique_cover(g);
    v.value = cover.size;
    v.method = MsrMethod::chordal_cc;
    v.trace.push_back("chordal: msr = cc = " + std::to_string(cover.size));
    return v;
  }
  v.method = MsrMethod::unknown;
  return v;
}

std::pair<Graph, int> reduce_pendant(const Graph& g) {
  Graph cur = g;
  int stripped = 0;
  while (cur.order() > 1) {
    int pendant = 0;
    for (int v = 1; v <= cur.order(); ++v) {
      if (cur.degree(v) == 1) {
        pendant = v;
        break;
      }
    }
    if (!pendant) break;
    std::vector<int> keep;
    for (int v = 1; v <= cur.order(); ++v)
      if (v != pendant) keep.push_back(v);
    cur = induced_subgraph(cur, keep);
    ++stripped;
  }
  return {cur, stripped};
}

std::optional<std::vector<Graph>> decompose_cut_vertex(const Graph& g) {
  // Standard lowpoint block decomposition.
  int n = g.order();
  std::vector<int> disc(n + 1, 0), low(n + 1, 0);
  std::vector<std::pair<int, int>> stack;
  std::vector<std::vector<std::pair<int, int>>> block_edges;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = ++timer;
    for (int w : g.neighbors(u)) {
      if (w == parent) continue;
      if (!disc[w]) {
        stack.push_back({u, w});
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::vector<std::pair<int, int>> be;
          while (!stack.empty()) {
            auto e = stack.back();
            stack.pop_back();
            be.push_back(e);
            if (e == std::make_pair(u, w)) break;
          }
          block_edges.push_back(be);
        }
      } else if (disc[w] < disc[u]) {
        stack.push_back({u, w});
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  dfs(1, 0);
  if (block_edges.size() <= 1) return std::nullopt;
  std::vector<Graph> blocks;
  for (const auto& be : block_edges) {
    std::vector<int> vs;
    for (const auto& [a, b] : be) {
      vs.push_back(a);
      vs.push_back(b);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    blocks.push_back(induced_subgraph(g, vs));
  }
  return blocks;
}

MsrVerdict msr_known(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("msr_known needs a connected graph");
  MsrVerdict v;
  auto [core, stripped] = reduce_pendant(g);
  if (stripped > 0)
    v.trace.push_back("stripped " + std::to_string(stripped) + " pendant vertices (+1 each)");
  if (core.order() == 1) {
    v.value = stripped;
    v.method = stripped > 0 ? MsrMethod::pendant_reduction : MsrMethod::tree;
    v.trace.push_back("core is a single vertex: msr = " + std::to_string(stripped));
    return v;
  }
  auto blocks = decompose_cut_vertex(core);
  std::vector<Graph> parts = blocks ? *blocks : std::vector<Graph>{core};
  if (blocks)
    v.trace.push_back("cut-vertex decomposition into " + std::to_string(parts.size()) +
                      " blocks (msr adds over blocks)");
  int total = stripped;
  MsrMethod single_method = MsrMethod::unknown;
  for (const auto& b : parts) {
    MsrVerdict bv = msr_base(b);
    if (!bv.value) {
      v.method = MsrMethod::unknown;
      v.trace.push_back("block on " + std::to_string(b.order()) + " vertices unresolved");
      v.value.reset();
      return v;
    }
    for (const auto& t : bv.trace) v.trace.push_back("block: " + t);
    total += *bv.value;
    single_method = bv.method;
  }
  v.value = total;
  if (blocks)
    v.method = MsrMethod::cut_vertex_sum;
  else if (stripped > 0)
    v.method = MsrMethod::pendant_reduction;
  else
    v.method = single_method;
  return v;
}

ConjectureRecord check_delta_conjecture(const Graph& g, const SolverConfig& config) {
  if (!is_connected(g)) throw std::invalid_argument("conjecture check needs a connected graph");
  ConjectureRecord rec;
  GraphStats s = stats(g);
  rec.bound = g.order() - s.min_degree;
  MsrVerdict known = msr_known(g);
  if (known.value) {
    rec.msr_known_value = known.value;
    rec.status = *known.value <= rec.bound ? ConjectureStatus::verified_exact
                                           : ConjectureStatus::inconclusive;
    rec.tight = *known.value == rec.bound;
    return rec;
  }
  if (g.order() >= 4 && s.complement_connected) {
    auto cert = find_delta_ordering(g);
    if (cert) {
      auto build = build_representation(g, cert->order, rec.bound, config);
      if (build.success && verify_representation(g, *build.rep).ok()) {
        rec.rep_dimension = rec.bound;
        rec.status = ConjectureStatus::verified_constructive;
        return rec;
      }
    }
  }
  rec.status = ConjectureStatus::inconclusive;
  return rec;
}

std::string to_string(MsrMethod m) {
  switch (m) {
    case MsrMethod::tree: return "tree";
    case MsrMethod::cycle: return "cycle";
    case MsrMethod::complete: return "complete";
    case MsrMethod::chordal_cc: return "chordal_cc";
    case MsrMethod::pendant_reduction: return "pendant_reduction";
    case MsrMethod::cut_vertex_sum: return "cut_vertex_sum";
    case MsrMethod::unknown: return "unknown";
  }
  return "?";
}

std::string to_string(ConjectureStatus s) {
  switch (s) {
    case ConjectureStatus::verified_exact: return "verified_exact";
    case ConjectureStatus::verified_constructive: return "verified_constructive";
    case ConjectureStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace msr
