#include "msr/delta.hpp"

#include <algorithm>
#include <stdexcept>

namespace msr {

namespace {

void check_preconditions(const Graph& g) {
  if (g.order() < 4) throw std::invalid_argument("delta-graph check needs |g| >= 4");
  if (!is_connected(g)) throw std::invalid_argument("delta-graph check needs g connected");
  if (!is_connected(complement(g)))
    throw std::invalid_argument("delta-graph check needs complement(g) connected");
}

std::optional<TriplePattern> triple_pattern(const Graph& g, int a, int b, int c) {
  int e = (g.adjacent(a, b) ? 1 : 0) + (g.adjacent(a, c) ? 1 : 0) + (g.adjacent(b, c) ? 1 : 0);
  if (e == 0) return TriplePattern::three_isolated;
  if (e == 1) return TriplePattern::edge_plus_isolated;
  return std::nullopt;
}

}  // namespace

DeltaCheck check_delta_ordering(const Graph& g, const VertexOrdering& order) {
  check_preconditions(g);
  int n = g.order();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("ordering size mismatch");
  std::vector<char> seen(n + 1, 0);
  for (int v : order) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("ordering is not a permutation");
    seen[v] = 1;
  }
  auto pattern = triple_pattern(g, order[0], order[1], order[2]);
  if (!pattern)
    return DeltaViolation{3, "first three vertices induce neither 3K1 nor K2+K1"};
  DeltaCertificate cert;
  cert.order = order;
  cert.first_three_kind = *pattern;
  for (int m = 4; m <= n; ++m) {
    int v = order[m - 1];
    int missed = 0;
    for (int i = 0; i < m - 1; ++i)
      if (!g.adjacent(v, order[i])) ++missed;
    int budget = delta_budget(m);
    if (missed > budget)
      return DeltaViolation{m, "vertex " + std::to_string(v) + " misses " +
                                   std::to_string(missed) + " predecessors, budget " +
                                   std::to_string(budget)};
    cert.missed.push_back(missed);
    cert.budget.push_back(budget);
  }
  return cert;
}

namespace {

bool extend_ordering(const Graph& g, VertexOrdering& order, std::vector<char>& used,
                     DeltaCertificate& cert) {
  int n = g.order();
  int m = static_cast<int>(order.size()) + 1;  // rank being placed
  if (m > n) return true;
  for (int v = 1; v <= n; ++v) {
    if (used[v]) continue;
    bool ok = true;
    int missed = 0;
    if (m == 3) {
      auto pattern = triple_pattern(g, order[0], order[1], v);
      if (!pattern) ok = false;
      else cert.first_three_kind = *pattern;
    } else if (m >= 4) {
      for (int u : order)
        if (!g.adjacent(v, u)) ++missed;
      if (missed > delta_budget(m)) ok = false;
    }
    if (!ok) continue;
    order.push_back(v);
    used[v] = 1;
    if (m >= 4) {
      cert.missed.push_back(missed);
      cert.budget.push_back(delta_budget(m));
    }
    if (extend_ordering(g, order, used, cert)) return true;
    order.pop_back();
    used[v] = 0;
    if (m >= 4) {
      cert.missed.pop_back();
      cert.budget.pop_back();
    }
  }
  return false;
}

}  // namespace

std::optional<DeltaCertificate> find_delta_ordering(const Graph& g) {
  check_preconditions(g);
  int n = g.order();
  DeltaCertificate cert;
  VertexOrdering order;
  std::vector<char> used(n + 1, 0);
  if (!extend_ordering(g, order, used, cert)) return std::nullopt;
  cert.order = order;
  return cert;
}

DeltaClass classify_delta(const Graph& g) {
  check_preconditions(g);
  DeltaClass res;
  res.graph_certificate = find_delta_ordering(g);
  res.complement_certificate = find_delta_ordering(complement(g));
  bool d = res.graph_certificate.has_value();
  bool cd = res.complement_certificate.has_value();
  res.kind = d && cd   ? DeltaKind::both
             : d       ? DeltaKind::delta
             : cd      ? DeltaKind::c_delta
                       : DeltaKind::neither;
  return res;
}

int delta_bound(const Graph& g, const DeltaCertificate& cert) {
  auto check = check_delta_ordering(g, cert.order);
  if (!std::holds_alternative<DeltaCertificate>(check))
    throw std::invalid_argument("delta_bound: certificate does not validate");
  GraphStats sg = stats(g);
  GraphStats sc = stats(complement(g));
  int via_complement = sc.max_degree + 1;
  int via_degree = g.order() - sg.min_degree;
  if (via_complement != via_degree)
    throw std::logic_error("degree identity violated");  // cannot happen
  return via_degree;
}

std::string to_string(DeltaKind kind) {
  switch (kind) {
    case DeltaKind::delta: return "delta";
    case DeltaKind::c_delta: return "c_delta";
    case DeltaKind::both: return "both";
    case DeltaKind::neither: return "neither";
  }
  return "?";
}

}  // namespace msr
