#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msr/graph.hpp"
#include "msr/solver.hpp"

namespace msr {

enum class MsrMethod {
  tree,
  cycle,
  complete,
  chordal_cc,
  pendant_reduction,
  cut_vertex_sum,
  unknown
};

struct MsrVerdict {
  std::optional<int> value;  // present iff method != unknown
  MsrMethod method = MsrMethod::unknown;
  std::vector<std::string> trace;  // reduction steps
};

struct CliqueCover {
  int size = 0;
  std::vector<std::vector<int>> cliques;
};

// Exact minimum number of cliques covering every edge: maximal-clique
// enumeration, then branch-and-bound set cover. Throws capacity_error
// above the vertex cap.
CliqueCover edge_clique_cover(const Graph& g, int cap = 10);

// tree -> n-1; cycle -> n-2; complete -> 1; chordal -> clique cover;
// otherwise unknown. Requires a connected graph.
MsrVerdict msr_base(const Graph& g);

// Repeatedly strips degree-1 vertices; each strip adds exactly 1.
std::pair<Graph, int> reduce_pendant(const Graph& g);

// Blocks of the graph (maximal 2-connected subgraphs / bridge edges),
// relabeled; nullopt when the graph has no cut vertex.
std::optional<std::vector<Graph>> decompose_cut_vertex(const Graph& g);

// Pendant reduction, then per-block dispatch; unknown when any block resists.
MsrVerdict msr_known(const Graph& g);

enum class ConjectureStatus { verified_exact, verified_constructive, inconclusive };

struct ConjectureRecord {
  int bound = 0;  // |g| - min_degree
  std::optional<int> msr_known_value;
  std::optional<int> rep_dimension;
  ConjectureStatus status = ConjectureStatus::inconclusive;
  bool tight = false;
};

// Never reports a refutation from solver failure alone: failure to build is
// inconclusive, a verified build certifies the bound constructively.
ConjectureRecord check_delta_conjecture(const Graph& g, const SolverConfig& config = {});

std::string to_string(MsrMethod m);
std::string to_string(ConjectureStatus s);

}  // namespace msr
