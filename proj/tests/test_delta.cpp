#include <doctest.h>

#include <algorithm>

#include "fixture_data.hpp"
#include "msr/delta.hpp"
#include "msr/enumerate.hpp"

using namespace msr;

namespace {

// Exhaustive oracle over all orderings.
int count_valid_orderings(const Graph& g) {
  int n = g.order();
  VertexOrdering perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  int valid = 0;
  do {
    if (std::holds_alternative<DeltaCertificate>(check_delta_ordering(g, perm))) ++valid;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return valid;
}

}  // namespace

TEST_CASE("row-major ordering on the 12-vertex complement target validates") {
  Graph h = fixture::target_h();
  auto check = check_delta_ordering(h, fixture::row_major_order());
  REQUIRE(std::holds_alternative<DeltaCertificate>(check));
  const auto& cert = std::get<DeltaCertificate>(check);
  CHECK(cert.first_three_kind == TriplePattern::edge_plus_isolated);
  CHECK(cert.missed == std::vector<int>{1, 1, 2, 2, 2, 2, 3, 3, 3});
  CHECK(cert.budget == std::vector<int>{1, 1, 2, 2, 3, 3, 4, 4, 5});
}

TEST_CASE("clockwise ordering on C6 validates on the complement, not on C6 itself") {
  Graph c6 = generate(Family::cycle, 6);
  // The C-delta reading: the same clockwise labels form a delta ordering of
  // the complement (the 3-prism).
  auto comp_check = check_delta_ordering(complement(c6), {1, 2, 3, 4, 5, 6});
  REQUIRE(std::holds_alternative<DeltaCertificate>(comp_check));
  CHECK(std::get<DeltaCertificate>(comp_check).missed == std::vector<int>{1, 1, 2});

  // On C6 itself every ordering fails: the last vertex can reach only two of
  // its five predecessors, missing 3 > budget 2, and earlier ranks are worse.
  auto check = check_delta_ordering(c6, {1, 2, 3, 4, 5, 6});
  CHECK(std::holds_alternative<DeltaViolation>(check));
  for (int v = 1; v <= 6; ++v) CHECK(5 - c6.degree(v) == 3);
  CHECK(3 > delta_budget(6));
}

TEST_CASE("preconditions are enforced") {
  CHECK_THROWS_AS(check_delta_ordering(generate(Family::complete, 4), {1, 2, 3, 4}),
                  std::invalid_argument);  // complement disconnected
  CHECK_THROWS_AS(find_delta_ordering(generate(Family::path, 3)), std::invalid_argument);
  Graph disconnected(4, {{1, 2}, {3, 4}});
  CHECK_THROWS_AS(find_delta_ordering(disconnected), std::invalid_argument);
  Graph p4 = generate(Family::path, 4);
  CHECK_THROWS_AS(check_delta_ordering(p4, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(check_delta_ordering(p4, {1, 1, 2, 3}), std::invalid_argument);
}

TEST_CASE("find_delta_ordering fixtures") {
  Graph prism = generate(Family::prism, 3);
  auto cert = find_delta_ordering(prism);
  REQUIRE(cert.has_value());
  CHECK(std::holds_alternative<DeltaCertificate>(check_delta_ordering(prism, cert->order)));

  Graph p4 = generate(Family::path, 4);
  auto p4cert = find_delta_ordering(p4);
  REQUIRE(p4cert.has_value());
  CHECK(count_valid_orderings(p4) > 0);

  Graph c6 = generate(Family::cycle, 6);
  CHECK_FALSE(find_delta_ordering(c6).has_value());
  CHECK(count_valid_orderings(c6) == 0);

  // Deterministic tiebreak: the search reports the lexicographically first
  // valid ordering; for the complement of C6 that is the identity.
  auto comp_cert = find_delta_ordering(complement(c6));
  REQUIRE(comp_cert.has_value());
  CHECK(comp_cert->order == VertexOrdering{1, 2, 3, 4, 5, 6});
}

TEST_CASE("classification fixtures") {
  CHECK(classify_delta(generate(Family::cycle, 6)).kind == DeltaKind::c_delta);
  CHECK(classify_delta(generate(Family::prism, 3)).kind == DeltaKind::delta);

  // C5 is self-complementary; the rank-4/5 budgets force too much adjacency.
  Graph c5 = generate(Family::cycle, 5);
  CHECK(count_valid_orderings(c5) == 0);
  CHECK(count_valid_orderings(complement(c5)) == 0);
  CHECK(classify_delta(c5).kind == DeltaKind::neither);
}

TEST_CASE("delta_bound fixtures and the degree identity") {
  Graph h = fixture::target_h();
  auto cert = std::get<DeltaCertificate>(check_delta_ordering(h, fixture::row_major_order()));
  CHECK(delta_bound(h, cert) == 5);

  Graph prism = generate(Family::prism, 3);
  CHECK(delta_bound(prism, *find_delta_ordering(prism)) == 3);

  Graph p4 = generate(Family::path, 4);
  CHECK(delta_bound(p4, *find_delta_ordering(p4)) == 3);

  // Invalid certificate is rejected.
  DeltaCertificate bogus;
  bogus.order = {1, 2, 3, 4, 5, 6};
  CHECK_THROWS_AS(delta_bound(generate(Family::cycle, 6), bogus), std::invalid_argument);
}

TEST_CASE("found certificates round-trip through the checker (n <= 6)") {
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_coconnected(n)) {
      auto cert = find_delta_ordering(g);
      if (cert)
        CHECK(std::holds_alternative<DeltaCertificate>(check_delta_ordering(g, cert->order)));
    }
  }
}

TEST_CASE("definition duality: g is delta iff complement(g) is C-delta (n <= 6)") {
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_coconnected(n)) {
      DeltaClass a = classify_delta(g);
      DeltaClass b = classify_delta(complement(g));
      bool g_delta = a.kind == DeltaKind::delta || a.kind == DeltaKind::both;
      bool comp_cdelta = b.kind == DeltaKind::c_delta || b.kind == DeltaKind::both;
      CHECK(g_delta == comp_cdelta);
    }
  }
}

TEST_CASE("budgets are nondecreasing and ordering prefixes validate on prefixes") {
  for (int m = 4; m < 40; ++m) CHECK(delta_budget(m) <= delta_budget(m + 1));

  Graph h = fixture::target_h();
  auto cert = std::get<DeltaCertificate>(check_delta_ordering(h, fixture::row_major_order()));
  // The row-major order is the identity, so the induced prefix keeps labels.
  for (int m = 4; m < 12; ++m) {
    std::vector<int> vs(cert.order.begin(), cert.order.begin() + m);
    Graph prefix = induced_subgraph(h, vs);
    VertexOrdering sub(cert.order.begin(), cert.order.begin() + m);
    if (prefix.order() >= 4 && is_connected(prefix) && is_connected(complement(prefix))) {
      auto sub_check = check_delta_ordering(prefix, sub);
      CHECK(std::holds_alternative<DeltaCertificate>(sub_check));
    }
  }
}
