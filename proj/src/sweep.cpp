#include "msr/sweep.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "msr/enumerate.hpp"
#include "msr/solver.hpp"

namespace msr {

SweepRecord sweep_one(const Graph& g, const SolverConfig& config) {
  auto t0 = std::chrono::steady_clock::now();
  SweepRecord rec;
  rec.graph6 = graph6_encode(g);
  rec.n = g.order();
  GraphStats s = stats(g);
  rec.min_degree = s.min_degree;
  rec.bound = g.order() - s.min_degree;
  DeltaClass cls = classify_delta(g);
  rec.delta_class = cls.kind;
  bool built_ok = false;
  if (cls.graph_certificate) {
    auto build = build_representation(g, cls.graph_certificate->order, rec.bound, config);
    if (build.success && verify_representation(g, *build.rep).ok()) {
      rec.solver_status = "success";
      rec.dimension_used = rec.bound;
      built_ok = true;
    } else {
      rec.solver_status = "failed";
    }
  } else {
    rec.solver_status = "not_attempted";
  }
  if (built_ok) {
    rec.status = ConjectureStatus::verified_constructive;
  } else {
    MsrVerdict known = msr_known(g);
    if (known.value && *known.value <= rec.bound)
      rec.status = ConjectureStatus::verified_exact;
    else
      rec.status = ConjectureStatus::inconclusive;
  }
  rec.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rec;
}

SweepSummary run_sweep(int max_n, int jobs,
                       const std::function<void(const SweepRecord&)>& emit,
                       const SolverConfig& config) {
  if (max_n < 4 || max_n > 8) throw std::invalid_argument("sweep supports 4 <= max_n <= 8");
  if (jobs < 1) throw std::invalid_argument("sweep needs jobs >= 1");
  std::vector<Graph> graphs;
  for (int n = 4; n <= max_n; ++n)
    for (auto& g : enumerate_connected_coconnected(n)) graphs.push_back(std::move(g));

  std::vector<SweepRecord> records(graphs.size());
  if (jobs == 1) {
    for (size_t i = 0; i < graphs.size(); ++i) {
      records[i] = sweep_one(graphs[i], config);
      emit(records[i]);
    }
  } else {
    std::vector<char> done(graphs.size(), 0);
    std::atomic<size_t> next{0};
    std::mutex mu;
    std::condition_variable cv;
    auto worker = [&]() {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= graphs.size()) return;
        SweepRecord rec = sweep_one(graphs[i], config);
        {
          std::lock_guard<std::mutex> lock(mu);
          records[i] = std::move(rec);
          done[i] = 1;
        }
        cv.notify_all();
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    // Emit in input order as results complete.
    for (size_t i = 0; i < graphs.size(); ++i) {
      std::unique_lock<std::mutex> lock(mu);
      cv.wait(lock, [&] { return done[i] != 0; });
      emit(records[i]);
    }
    for (auto& t : pool) t.join();
  }

  SweepSummary sum;
  sum.graphs = static_cast<int>(records.size());
  for (const auto& r : records) {
    if (r.status == ConjectureStatus::verified_constructive) ++sum.verified_constructive;
    if (r.status == ConjectureStatus::verified_exact) ++sum.verified_exact;
    if (r.status == ConjectureStatus::inconclusive) ++sum.inconclusive;
    if (r.solver_status == "failed") ++sum.solver_failures;
  }
  return sum;
}

std::string sweep_record_json(const SweepRecord& rec) {
  nlohmann::ordered_json j;
  j["graph6"] = rec.graph6;
  j["n"] = rec.n;
  j["min_degree"] = rec.min_degree;
  j["bound"] = rec.bound;
  j["delta_class"] = to_string(rec.delta_class);
  j["solver_status"] = rec.solver_status;
  j["dimension_used"] = rec.dimension_used;
  j["status"] = to_string(rec.status);
  j["runtime_ms"] = rec.runtime_ms;
  return j.dump();
}

}  // namespace msr
