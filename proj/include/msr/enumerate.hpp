#pragma once

#include <cstdint>
#include <vector>

#include "msr/graph.hpp"

namespace msr {

// Canonical form for n <= 11: minimum upper-triangle bitstring (column
// order, packed into a uint64) over all vertex permutations, found by
// branch-and-bound on bit prefixes. Equal forms <=> isomorphic graphs.
uint64_t canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

Graph graph_from_canonical(int n, uint64_t form);

// All non-isomorphic simple graphs on n vertices (n <= 8 practical),
// ascending by canonical form. Built by vertex augmentation.
std::vector<Graph> enumerate_graphs(int n);

// Subset with g and complement(g) both connected.
std::vector<Graph> enumerate_connected_coconnected(int n);

// All non-isomorphic trees on n vertices (leaf augmentation).
std::vector<Graph> enumerate_trees(int n);

}  // namespace msr
