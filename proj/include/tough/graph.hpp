#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tough/vertex_set.hpp"

namespace tough {

using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges (in either orientation)
  /// are merged; self-loops and out-of-range endpoints throw GraphError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph empty(std::size_t n) { return Graph(n); }

  std::size_t order() const { return n_; }
  std::size_t size() const { return m_; }
  std::size_t words_per_row() const { return wpr_; }

  std::span<const Word> row(Vertex v) const { return {adj_.data() + v * wpr_, wpr_}; }
  VertexSet neighbors(Vertex v) const { return VertexSet::from_words(n_, row(v)); }
  bool adjacent(Vertex u, Vertex v) const { return bits::test(row(u), v); }
  std::size_t degree(Vertex v) const { return bits::count(row(v)); }
  std::vector<std::size_t> degrees() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  explicit Graph(std::size_t n) : n_(n), wpr_(words_for(n)), adj_(n * words_for(n), 0) {}

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t wpr_ = 0;
  std::vector<Word> adj_;
};

Graph complement(const Graph& g);
Graph disjoint_union(std::span<const Graph> gs);
Graph join(const Graph& g, const Graph& h);
Graph line_graph(const Graph& g);
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

struct Components {
  std::size_t count = 0;
  std::vector<VertexSet> parts;  // ordered by smallest member
};

/// Connected components of g with the vertices of `removed` deleted.
Components components_after_removal(const Graph& g, const VertexSet& removed);

/// Component count only; avoids materialising the parts.
std::size_t count_components(const Graph& g, const VertexSet& removed);

bool is_connected(const Graph& g);
std::optional<std::size_t> regularity(const Graph& g);
std::size_t min_degree(const Graph& g);
bool is_bipartite(const Graph& g);

/// Checks symmetry, loop-freeness and the cached edge count.
bool audit(const Graph& g);

// Text interchange format: "n m" then m lines "u v", u < v, sorted.
void write_graph(std::ostream& os, const Graph& g);
Graph read_graph(std::istream& is);
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace tough
