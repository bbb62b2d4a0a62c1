#include "msr/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace msr {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
  if (n <= 0) throw std::invalid_argument("graph order must be positive");
  for (auto& e : edge_list) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first == e.second) throw std::invalid_argument("self-loop rejected");
    if (e.first < 1 || e.second > n) throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(edge_list.begin(), edge_list.end());
  if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
    throw std::invalid_argument("duplicate edge rejected");
  edges_ = std::move(edge_list);
  adj_.assign(n + 1, {});
  mat_.assign(static_cast<size_t>(n) * n, 0);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    mat_[idx(u, v)] = 1;
    mat_[idx(v, u)] = 1;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph generate(Family family, int k) {
  std::vector<std::pair<int, int>> e;
  switch (family) {
    case Family::path:
      if (k < 1) throw std::invalid_argument("path needs k >= 1");
      for (int i = 1; i < k; ++i) e.push_back({i, i + 1});
      return Graph(k, e);
    case Family::cycle:
      if (k < 3) throw std::invalid_argument("cycle needs k >= 3");
      for (int i = 1; i < k; ++i) e.push_back({i, i + 1});
      e.push_back({1, k});
      return Graph(k, e);
    case Family::complete:
      if (k < 1) throw std::invalid_argument("complete graph needs k >= 1");
      for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) e.push_back({i, j});
      return Graph(k, e);
    case Family::mobius_ladder: {
      if (k < 3) throw std::invalid_argument("mobius ladder needs k >= 3");
      int n = 2 * k;
      for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
      e.push_back({1, n});
      for (int i = 1; i <= k; ++i) e.push_back({i, i + k});
      return Graph(n, e);
    }
    case Family::prism: {
      if (k < 3) throw std::invalid_argument("prism needs k >= 3");
      for (int i = 1; i < k; ++i) e.push_back({i, i + 1});
      e.push_back({1, k});
      for (int i = 1; i < k; ++i) e.push_back({k + i, k + i + 1});
      e.push_back({k + 1, 2 * k});
      for (int i = 1; i <= k; ++i) e.push_back({i, i + k});
      return Graph(2 * k, e);
    }
    case Family::star:
      if (k < 2) throw std::invalid_argument("star needs k >= 2");
      for (int i = 2; i <= k; ++i) e.push_back({1, i});
      return Graph(k, e);
  }
  throw std::invalid_argument("unknown family");
}

Graph complement(const Graph& g) {
  int n = g.order();
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!g.adjacent(i, j)) e.push_back({i, j});
  return Graph(n, e);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  int ng = g.order(), nh = h.order();
  auto flat = [nh](int u, int v) { return (u - 1) * nh + v; };
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= ng; ++u)
    for (const auto& [v, vp] : h.edges()) e.push_back({flat(u, v), flat(u, vp)});
  for (const auto& [u, up] : g.edges())
    for (int v = 1; v <= nh; ++v) e.push_back({flat(u, v), flat(up, v)});
  return Graph(ng * nh, e);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
  if (vs.empty()) throw std::invalid_argument("induced subgraph of empty vertex set");
  std::vector<int> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate vertex in subset");
  if (sorted.front() < 1 || sorted.back() > g.order())
    throw std::invalid_argument("vertex out of range");
  std::vector<int> newlabel(g.order() + 1, 0);
  for (size_t i = 0; i < sorted.size(); ++i) newlabel[sorted[i]] = static_cast<int>(i) + 1;
  std::vector<std::pair<int, int>> e;
  for (size_t i = 0; i < sorted.size(); ++i)
    for (size_t j = i + 1; j < sorted.size(); ++j)
      if (g.adjacent(sorted[i], sorted[j]))
        e.push_back({newlabel[sorted[i]], newlabel[sorted[j]]});
  return Graph(static_cast<int>(sorted.size()), e);
}

namespace {

int components_excluding(const Graph& g, int excluded) {
  int n = g.order();
  std::vector<char> seen(n + 1, 0);
  if (excluded >= 1) seen[excluded] = 1;
  int comps = 0;
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
  }
  return comps;
}

}  // namespace

int component_count(const Graph& g) { return components_excluding(g, 0); }

bool is_connected(const Graph& g) { return component_count(g) == 1; }

GraphStats stats(const Graph& g) {
  GraphStats s;
  int n = g.order();
  s.degree_sequence.resize(n);
  s.min_degree = n;
  s.max_degree = 0;
  for (int v = 1; v <= n; ++v) {
    int d = g.degree(v);
    s.degree_sequence[v - 1] = d;
    s.min_degree = std::min(s.min_degree, d);
    s.max_degree = std::max(s.max_degree, d);
  }
  s.connected = is_connected(g);
  s.complement_connected = is_connected(complement(g));
  return s;
}

std::pair<std::vector<int>, std::vector<int>> pendant_and_cut_vertices(const Graph& g) {
  std::vector<int> pendant, cut;
  int n = g.order();
  for (int v = 1; v <= n; ++v)
    if (g.degree(v) == 1) pendant.push_back(v);
  if (n >= 2) {
    int base = component_count(g);
    for (int v = 1; v <= n; ++v)
      if (components_excluding(g, v) > base) cut.push_back(v);
  }
  return {pendant, cut};
}

std::optional<VertexOrdering> is_chordal(const Graph& g) {
  int n = g.order();
  // Maximum-cardinality search; visit order reversed is a perfect
  // elimination ordering iff the graph is chordal.
  std::vector<int> weight(n + 1, 0);
  std::vector<char> visited(n + 1, 0);
  std::vector<int> visit_order;
  visit_order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 1; v <= n; ++v)
      if (!visited[v] && (best < 0 || weight[v] > weight[best])) best = v;
    visited[best] = 1;
    visit_order.push_back(best);
    for (int w : g.neighbors(best))
      if (!visited[w]) ++weight[w];
  }
  VertexOrdering peo(visit_order.rbegin(), visit_order.rend());
  std::vector<int> pos(n + 1, 0);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;
  for (int i = 0; i < n; ++i) {
    int v = peo[i];
    std::vector<int> later;
    for (int w : g.neighbors(v))
      if (pos[w] > i) later.push_back(w);
    if (later.empty()) continue;
    int m = *std::min_element(later.begin(), later.end(),
                              [&](int a, int b) { return pos[a] < pos[b]; });
    for (int w : later)
      if (w != m && !g.adjacent(m, w)) return std::nullopt;
  }
  return peo;
}

std::string graph6_encode(const Graph& g) {
  int n = g.order();
  if (n > 62) throw std::invalid_argument("graph6 short form limited to n <= 62");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bits = n * (n - 1) / 2;
  std::vector<char> bit(bits, 0);
  int k = 0;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) bit[k++] = g.adjacent(i, j) ? 1 : 0;
  for (int start = 0; start < bits; start += 6) {
    int v = 0;
    for (int t = 0; t < 6; ++t) {
      v <<= 1;
      if (start + t < bits && bit[start + t]) v |= 1;
    }
    out.push_back(static_cast<char>(v + 63));
  }
  return out;
}

Graph graph6_decode(const std::string& text) {
  if (text.empty()) throw format_error("graph6: empty string");
  auto val = [](char c) {
    if (c < 63 || c > 126) throw format_error("graph6: character out of range");
    return c - 63;
  };
  int n = val(text[0]);
  if (n == 0) throw format_error("graph6: empty graph (n = 0) rejected");
  if (text[0] == 126) throw format_error("graph6: long form not supported");
  int bits = n * (n - 1) / 2;
  int need = (bits + 5) / 6;
  if (static_cast<int>(text.size()) != 1 + need)
    throw format_error("graph6: truncated or oversized bit vector");
  std::vector<char> bit;
  bit.reserve(need * 6);
  for (int i = 0; i < need; ++i) {
    int v = val(text[1 + i]);
    for (int t = 5; t >= 0; --t) bit.push_back((v >> t) & 1);
  }
  for (int i = bits; i < static_cast<int>(bit.size()); ++i)
    if (bit[i]) throw format_error("graph6: nonzero padding bits");
  std::vector<std::pair<int, int>> e;
  int k = 0;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      if (bit[k++]) e.push_back({i, j});
  return Graph(n, e);
}

}  // namespace msr
