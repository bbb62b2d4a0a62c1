#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace msr {

struct format_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Permutation of 1..n; order[k] is the vertex at rank k.
using VertexOrdering = std::vector<int>;

// Simple undirected graph on vertices 1..n. Immutable after construction;
// safe to share across threads.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edge_list);

  int order() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool adjacent(int u, int v) const { return mat_[idx(u, v)] != 0; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  size_t idx(int u, int v) const {
    return static_cast<size_t>(u - 1) * n_ + (v - 1);
  }
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // normalized i<j, sorted
  std::vector<std::vector<int>> adj_;       // 1-based, adj_[0] unused
  std::vector<char> mat_;
};

struct GraphStats {
  int min_degree = 0;
  int max_degree = 0;
  bool connected = false;
  bool complement_connected = false;
  std::vector<int> degree_sequence;  // by vertex index 1..n
};

enum class Family { path, cycle, complete, mobius_ladder, prism, star };

// Named graphs with canonical numbering 1..n; cycles and ladders are numbered
// clockwise around the circular embedding. mobius_ladder(k) has 2k vertices:
// the cycle C_2k plus the k antipodal chords {i, i+k}.
Graph generate(Family family, int k);

Graph complement(const Graph& g);

// Vertex (u, v) of g x h is flattened to (u-1)*|h| + v (row-major by the
// first factor); (u,v) ~ (u',v') iff u=u' and vv' in E(h), or v=v' and
// uu' in E(g).
Graph cartesian_product(const Graph& g, const Graph& h);

// Relabels to 1..|vs| preserving the ascending order of vs.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vs);

GraphStats stats(const Graph& g);

bool is_connected(const Graph& g);
int component_count(const Graph& g);

// pendant = degree-1 vertices; cut vertices found by component counting
// after single-vertex deletion.
std::pair<std::vector<int>, std::vector<int>> pendant_and_cut_vertices(const Graph& g);

// Perfect elimination ordering via maximum-cardinality search, or nullopt
// when the graph is not chordal. order[0] is eliminated first.
std::optional<VertexOrdering> is_chordal(const Graph& g);

// Standard graph6, short form (n <= 62): 6-bit big-endian packing of the
// upper triangle in column order, offset 63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& text);

}  // namespace msr
