#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tough/graph.hpp"

namespace tough {

// Small standard graphs.
Graph complete(std::size_t v);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph cycle(std::size_t n);
Graph hypercube(std::size_t d);

/// Cocktail-party graph on t vertices: complement of t/2 disjoint edges (2i, 2i+1).
Graph matching_complement(std::size_t t);

/// Perfect matching on t vertices (t/2 disjoint edges).
Graph matching(std::size_t t);

/// Smallest-spectral-radius member of the near-regular family with maximum degree k:
/// odd k joins the cocktail party on k-1 vertices with K_2, even k joins the one on
/// k-2 vertices with K_3. Cocktail-party vertices come first.
Graph extremal_x(std::size_t k);

/// k-regular graph for odd k built from k copies of extremal_x(k) and an independent
/// set T = {0..k-2}; T-vertex i is matched to the i-th degree-(k-1) vertex of every copy.
Graph gadget_odd(std::size_t k);

/// k-regular graph for even k built from k-1 copies of extremal_x(k) and a perfect
/// matching T = {0..k-3}; T-vertex i is matched to the i-th degree-(k-1) vertex of every copy.
Graph gadget_even(std::size_t k);

/// k copies of K_{k,k} minus an edge plus two new vertices 0 and 1; vertex 0 takes the
/// first endpoint of each missing edge, vertex 1 the second. Bipartite and k-regular.
Graph bipartite_sparse_cut(std::size_t k);

/// Rook's graph on a v x v grid; vertex (i, j) has index i*v + j.
Graph lattice(std::size_t v);

/// Line graph of K_v; vertices are the 2-subsets of {0..v-1} in lexicographic order.
Graph triangular(std::size_t v);

/// r-subsets of {0..v-1} in lexicographic order, adjacent when disjoint.
Graph kneser(std::size_t v, std::size_t r);

/// All r-subsets of {0..v-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t v, std::size_t r);

/// Point/line incidence structure with explicit lines.
struct GeneralizedQuadrangle {
  std::size_t num_points = 0;
  std::vector<std::vector<Vertex>> lines;  // each sorted, list sorted
  std::size_t s = 0;
  std::size_t t = 0;
  std::string name;
};

struct GqAudit {
  bool ok = true;
  std::size_t checked_instances = 0;  // number of quantified axiom instances evaluated
  std::vector<std::string> violations;
};

/// Checks line sizes, point degrees, counts, "two points share at most one line",
/// and the unique-collinear-point axiom for every anti-flag (p, L).
GqAudit audit_gq(const GeneralizedQuadrangle& gq);

/// (s+1) x (s+1) grid: points are cells, lines are rows and columns; order (s, 1).
GeneralizedQuadrangle gq_grid(std::size_t s);

/// Symplectic quadrangle W(q) over the prime field of order q; order (q, q).
GeneralizedQuadrangle gq_symplectic(std::size_t q);

/// The unique GQ of order (2, 4), on the 27 double-six labels a1..a6, b1..b6, c_ij.
GeneralizedQuadrangle gq_2_4();

/// Collinearity graph of the quadrangle's points.
Graph gq_point_graph(const GeneralizedQuadrangle& gq);

/// Lines as vertex sets of the point graph.
std::vector<VertexSet> gq_line_sets(const GeneralizedQuadrangle& gq);

}  // namespace tough
