#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tough/connectivity.hpp"
#include "tough/families.hpp"

using namespace tough;

TEST_CASE("connectivity of named families") {
  for (std::size_t d = 2; d <= 6; ++d) {
    CHECK(vertex_connectivity(hypercube(d)).value == d);
    CHECK(edge_connectivity(hypercube(d)).value == d);
  }
  CHECK(vertex_connectivity(kneser(5, 2)).value == 3);
  CHECK(vertex_connectivity(lattice(4)).value == 6);
  CHECK(vertex_connectivity(cycle(7)).value == 2);
  CHECK(vertex_connectivity(complete_bipartite(2, 5)).value == 2);

  const VertexCut k5 = vertex_connectivity(complete(5));
  CHECK(k5.complete);
  CHECK(k5.value == 4);
  CHECK(k5.cut.empty());
  CHECK(edge_connectivity(complete(5)).value == 4);

  const Graph split = bipartite_sparse_cut(3);
  const VertexCut c = vertex_connectivity(split);
  CHECK(c.value == 2);
  CHECK(count_components(split, c.cut) >= 2);
}

TEST_CASE("disconnected input") {
  const Graph two[] = {cycle(3), cycle(4)};
  const Graph g = disjoint_union(two);
  CHECK(edge_connectivity(g).value == 0);
  CHECK(edge_connectivity(g).cut.empty());
  CHECK(vertex_connectivity(g).value == 0);
}

TEST_CASE("kappa and kappa' agree with the subset oracles") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + static_cast<std::size_t>(trial % 10);
    const Graph g = oracle::random_connected(n, 0.1 + 0.012 * trial, rng);
    CAPTURE(trial);
    const VertexCut vc = vertex_connectivity(g);
    CHECK(vc.value == oracle::kappa(g));
    if (!vc.complete) {
      CHECK(vc.cut.size() == vc.value);
      CHECK(count_components(g, vc.cut) >= 2);
    }
    const VertexCut serial = vertex_connectivity_serial(g);
    CHECK(serial.value == vc.value);
    CHECK(serial.cut == vc.cut);

    const EdgeCut ec = edge_connectivity(g);
    CHECK(ec.value == oracle::kappa_prime(g));
    CHECK(ec.cut.size() == ec.value);
    std::vector<Edge> keep;
    for (const Edge& e : g.edges())
      if (!std::binary_search(ec.cut.begin(), ec.cut.end(), e)) keep.push_back(e);
    CHECK_FALSE(is_connected(Graph::from_edges(n, keep)));
    CHECK(vc.value <= ec.value);
    CHECK(ec.value <= min_degree(g));
  }
}

TEST_CASE("thread count does not change the reported cut") {
  for (const Graph& g : {lattice(5), kneser(7, 2), gadget_odd(3), bipartite_sparse_cut(4)}) {
    const VertexCut ref = vertex_connectivity_serial(g);
    for (unsigned t : {1u, 2u, 4u, 8u}) {
      const VertexCut par = vertex_connectivity(g, t);
      CHECK(par.value == ref.value);
      CHECK(par.cut == ref.cut);
    }
  }
}

TEST_CASE("local vertex connectivity") {
  const Graph g = lattice(3);
  VertexSet cut(9);
  CHECK(local_vertex_connectivity(g, 0, 4, &cut) == 4);
  CHECK(cut.size() == 4);
  CHECK(count_components(g, cut) >= 2);
  CHECK(local_vertex_connectivity(cycle(6), 0, 3) == 2);
}

TEST_CASE("disconnecting sets of a given size") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 5 + static_cast<std::size_t>(trial % 5);
    const Graph g = oracle::random_connected(n, 0.35, rng);
    const auto adj = oracle::masks(g);
    const std::uint32_t full = (1u << n) - 1;
    for (std::size_t size = 1; size + 2 <= n; ++size) {
      std::vector<VertexSet> want;
      for (std::uint32_t s = 0; s <= full; ++s)
        if (static_cast<std::size_t>(__builtin_popcount(s)) == size && oracle::components(adj, full & ~s) >= 2)
          want.push_back(oracle::to_set(n, s));
      std::sort(want.begin(), want.end(), LexLess{});
      CHECK(disconnecting_sets_of_size(g, size) == want);
    }
  }
  // Every 3-cut of the Petersen graph is a neighborhood.
  CHECK(disconnecting_sets_of_size(kneser(5, 2), 3).size() == 10);
}

TEST_CASE("maximum independent sets") {
  const IndependenceResult p = max_independent_set(kneser(5, 2), true);
  CHECK(p.alpha == 4);
  CHECK(is_independent(kneser(5, 2), p.witness));
  REQUIRE(p.all_maximum);
  CHECK(p.all_maximum->size() == 5);
  CHECK(std::is_sorted(p.all_maximum->begin(), p.all_maximum->end(), LexLess{}));

  const IndependenceResult l = max_independent_set(lattice(4), true);
  CHECK(l.alpha == 4);
  CHECK(l.all_maximum->size() == 24);

  const IndependenceResult k = max_independent_set(kneser(6, 2), true);
  CHECK(k.alpha == 5);
  CHECK(k.all_maximum->size() == 6);

  CHECK(max_independent_set(gadget_odd(3)).alpha == oracle::alpha(gadget_odd(3)));
  CHECK_FALSE(max_independent_set(cycle(5)).all_maximum.has_value());

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_connected(6 + static_cast<std::size_t>(trial % 12), 0.25, rng);
    const IndependenceResult r = max_independent_set(g);
    CHECK(r.alpha == oracle::alpha(g));
    CHECK(r.witness.size() == r.alpha);
    CHECK(is_independent(g, r.witness));
  }
}
