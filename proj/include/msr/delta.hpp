#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "msr/graph.hpp"

namespace msr {

enum class TriplePattern { three_isolated, edge_plus_isolated };

// Witness that an ordering satisfies the delta-graph conditions: the first
// three vertices induce 3K1 or K2 + K1, and vertex at rank m (1-based, m >= 4)
// is non-adjacent to at most floor(m/2) - 1 of its predecessors.
struct DeltaCertificate {
  VertexOrdering order;
  TriplePattern first_three_kind = TriplePattern::three_isolated;
  std::vector<int> missed;  // missed[m-4] for m in 4..n
  std::vector<int> budget;  // budget[m-4] = m/2 - 1
};

struct DeltaViolation {
  int rank = 0;  // 1-based rank of the first failing vertex (3 for the seed triple)
  std::string reason;
};

using DeltaCheck = std::variant<DeltaCertificate, DeltaViolation>;

inline int delta_budget(int m) { return m / 2 - 1; }

// Preconditions for all three entry points (|g| >= 4, g connected,
// complement connected) are enforced with std::invalid_argument.
DeltaCheck check_delta_ordering(const Graph& g, const VertexOrdering& order);

// Exhaustive depth-first search with budget pruning; vertices are tried in
// ascending index order, so the returned certificate is deterministic.
std::optional<DeltaCertificate> find_delta_ordering(const Graph& g);

enum class DeltaKind { delta, c_delta, both, neither };

struct DeltaClass {
  DeltaKind kind = DeltaKind::neither;
  std::optional<DeltaCertificate> graph_certificate;       // for g itself
  std::optional<DeltaCertificate> complement_certificate;  // for complement(g)
};

DeltaClass classify_delta(const Graph& g);

// d = max_degree(complement(g)) + 1; asserts the degree identity
// d == |g| - min_degree(g). Throws if the certificate does not validate.
int delta_bound(const Graph& g, const DeltaCertificate& cert);

std::string to_string(DeltaKind kind);

}  // namespace msr
