#pragma once

#include <functional>
#include <string>
#include <vector>

#include "msr/delta.hpp"
#include "msr/oracles.hpp"

namespace msr {

struct SweepRecord {
  std::string graph6;
  int n = 0;
  int min_degree = 0;
  int bound = 0;  // n - min_degree
  DeltaKind delta_class = DeltaKind::neither;
  std::string solver_status;  // success / failed / not_attempted
  int dimension_used = 0;     // 0 when the solver did not run
  long runtime_ms = 0;
  ConjectureStatus status = ConjectureStatus::inconclusive;
};

struct SweepSummary {
  int graphs = 0;
  int verified_constructive = 0;
  int verified_exact = 0;
  int inconclusive = 0;
  int solver_failures = 0;
};

SweepRecord sweep_one(const Graph& g, const SolverConfig& config = {});

// Connected graphs with connected complement, 4..max_n vertices,
// deduplicated by canonical form, in deterministic order. `emit` is called
// once per record, in order, from the calling thread.
SweepSummary run_sweep(int max_n, int jobs,
                       const std::function<void(const SweepRecord&)>& emit,
                       const SolverConfig& config = {});

std::string sweep_record_json(const SweepRecord& rec);

}  // namespace msr
