#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tough/graph.hpp"

namespace tough {

struct EdgeCut {
  std::size_t value = 0;  // kappa'
  std::vector<Edge> cut;  // a minimum edge cut, each edge (u, v) with u < v, sorted
};

struct VertexCut {
  std::size_t value = 0;  // kappa
  VertexSet cut;          // a minimum vertex cut; empty for complete graphs
  bool complete = false;  // kappa := n - 1 by convention
};

struct ConnectivityReport {
  EdgeCut edge;
  VertexCut vertex;
};

/// Unit-capacity max-flow from vertex 0 to every other vertex; the cut comes from
/// the source side of the final residual graph. Disconnected input gives 0 and an
/// empty cut.
EdgeCut edge_connectivity(const Graph& g);

/// Vertex connectivity by vertex-split max-flow over non-adjacent pairs. The reported
/// cut belongs to the lexicographically first pair attaining the minimum.
/// `threads` = 0 uses the OpenMP default.
VertexCut vertex_connectivity(const Graph& g, unsigned threads = 0);

/// Serial reference for vertex_connectivity (same pair order, no OpenMP).
VertexCut vertex_connectivity_serial(const Graph& g);

ConnectivityReport connectivity(const Graph& g, unsigned threads = 0);

/// Minimum number of vertices separating s from t (s, t non-adjacent), with the cut.
std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, VertexSet* cut = nullptr,
                                      std::size_t limit = static_cast<std::size_t>(-1));

/// Every vertex subset of exactly `size` vertices whose removal disconnects g,
/// lexicographically sorted. Exponential; intended for small graphs.
std::vector<VertexSet> disconnecting_sets_of_size(const Graph& g, std::size_t size);

struct IndependenceResult {
  std::size_t alpha = 0;
  VertexSet witness;
  std::optional<std::vector<VertexSet>> all_maximum;  // lexicographically sorted
};

/// Exact maximum independent set by branch-and-bound: branch on the lowest-index
/// maximum-degree vertex of the residual graph, prune with a greedy clique cover.
IndependenceResult max_independent_set(const Graph& g, bool enumerate_all = false);

bool is_independent(const Graph& g, const VertexSet& s);

}  // namespace tough
