#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msr/graph.hpp"
#include "msr/ratmatrix.hpp"

namespace msr {

// Integer orthogonal representation of a target graph: vectors[v-1] is the
// vector of vertex v, coordinates cleared to integers with gcd 1 per vector.
// Two distinct vertices have orthogonal vectors iff they are non-adjacent.
struct OrthogonalRepresentation {
  Graph graph;
  VertexOrdering order;  // construction ordering
  int dimension = 0;
  std::vector<std::vector<BigInt>> vectors;
};

// Homogenized per-vertex system A w = 0, w in R^(d+p): one row per already
// placed vertex, in rank order. Adjacent pairs get an auxiliary unknown
// (the required-nonzero inner product) with coefficient -1 in its own
// column; orthogonality rows carry no auxiliary column.
struct ConstraintSystem {
  int coord_count = 0;  // d
  int aux_count = 0;    // p
  RationalMatrix matrix;
  std::vector<int> row_aux_col;  // per row: auxiliary column index, or -1
};

enum class SeedPolicy { basis_ascending, basis_descending };

struct SolverConfig {
  // Values tried for free variables, in this fixed order. Free coordinate
  // slots additionally try 0 first; auxiliary slots must stay nonzero.
  std::vector<long> value_pool{1, -1, 2, -2, 3, -3, 4, -4};
  int max_backtracks = 200;
  SeedPolicy seed_vector_policy = SeedPolicy::basis_ascending;
};

struct ExtendOutcome {
  bool feasible = false;
  RationalVector coords;      // length d
  RationalVector aux_values;  // one per adjacency row, in row order
  std::string reason;         // when infeasible: span_blocked / exhausted / empty_nullspace
};

struct TraceEvent {
  enum class Kind { placed, infeasible, revised };
  Kind kind;
  int rank = 0;            // 1-based rank in the construction ordering
  RationalVector vec;      // placed / revised value (empty for infeasible)
  std::string note;
};

struct BuildResult {
  bool success = false;
  std::optional<OrthogonalRepresentation> rep;
  std::vector<TraceEvent> trace;
  int backtracks = 0;
  std::string failure;  // human-readable when !success; not a nonexistence proof
};

struct PatternFailure {
  int i = 0;  // 1-based vertex pair
  int j = 0;
  bool expected_zero = false;
  Rational got;
};

struct VerificationReport {
  bool pattern_ok = false;
  bool pairwise_ok = false;
  int rank = 0;
  bool psd_ok = false;
  int bound = 0;  // dimension used
  std::vector<PatternFailure> failures;
  bool ok() const { return pattern_ok && pairwise_ok && psd_ok; }
};

// previous[r] is the vector at rank r; adjacency[r] tells whether the new
// vertex is adjacent to it in the target graph.
ConstraintSystem build_constraint_system(const std::vector<RationalVector>& previous,
                                         const std::vector<char>& adjacency,
                                         int dimension);

// Solves the nullspace and assigns free variables from the value pool in a
// fixed tier order until the candidate satisfies: (a) every auxiliary value
// nonzero, (b) nonzero vector, (c) pairwise independence with all previous
// vectors, and, while fewer than `dimension` vectors are placed, (d) the
// candidate extends the span of the previous vectors. A candidate passing
// (a)-(c) whose span growth is impossible to salvage by the current
// assignment stops the search: that vertex is reported infeasible and the
// caller backtracks, which reproduces the construction's revision step.
ExtendOutcome extend_vertex(const ConstraintSystem& system,
                            const std::vector<RationalVector>& previous,
                            const SolverConfig& config);

// Places vertices in `order`; on infeasibility revisits the earliest placed
// vertex whose own system retained free variables, re-solves it against all
// placed neighbours/non-neighbours with the next untried assignment, and
// resumes. Failure is a value (trace included), not a nonexistence proof.
BuildResult build_representation(const Graph& h, const VertexOrdering& order,
                                 int dimension, const SolverConfig& config = {});

// Recomputes the full Gram matrix exactly and checks the zero/nonzero
// pattern against E(h), pairwise independence, rank, and exact psd pivots.
VerificationReport verify_representation(const Graph& h,
                                         const OrthogonalRepresentation& rep);

std::vector<RationalVector> to_rational_vectors(const std::vector<std::vector<BigInt>>& v);

// Scales a rational vector to a primitive integer vector (gcd 1).
std::vector<BigInt> clear_denominators(const RationalVector& v);

}  // namespace msr
