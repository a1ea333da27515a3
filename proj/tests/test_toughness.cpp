#include <doctest.h>

#include <mutex>
#include <random>

#include "oracles.hpp"
#include "tough/connectivity.hpp"
#include "tough/families.hpp"
#include "tough/toughness.hpp"

using namespace tough;

namespace {

ToughnessOptions with_minimizers(unsigned threads = 0) {
  ToughnessOptions o;
  o.want_minimizers = true;
  o.threads = threads;
  return o;
}

}  // namespace

TEST_CASE("toughness of a single set") {
  const Graph p = kneser(5, 2);
  // Petersen: an independent set of size 4 is isolated by the other six vertices.
  const IndependenceResult mis = max_independent_set(p);
  CHECK(toughness_of_set(p, mis.witness.complement()) == Rational(6, 4));
  CHECK(toughness_of_set(p, p.neighbors(0)) == Rational(3, 2));
  CHECK(toughness_of_set(lattice(3), lattice(3).neighbors(0)) == Rational(4, 2));
  CHECK_THROWS_AS(toughness_of_set(p, VertexSet(10, {0})), ToughnessError);
  CHECK_THROWS_AS(toughness_of_set(p, VertexSet(10)), ToughnessError);
}

TEST_CASE("exact toughness on named families") {
  struct Case {
    Graph g;
    Rational t;
  };
  const Case cases[] = {
      {kneser(5, 2), Rational(4, 3)}, {cycle(7), Rational(1)},        {lattice(3), Rational(2)},
      {lattice(4), Rational(3)},      {triangular(5), Rational(3)},   {hypercube(3), Rational(1)},
      {complete_bipartite(2, 5), Rational(2, 5)},                      {matching_complement(8), Rational(3)},
  };
  for (const auto& [g, t] : cases) {
    const ToughnessCertificate c = toughness_exact(g);
    CHECK(c.value == t);
    CHECK(c.exhaustive);
    CHECK(toughness_of_set(g, c.witness) == c.value);
    CHECK(count_components(g, c.witness) == c.components);
  }
}

TEST_CASE("degenerate inputs") {
  const Graph two[] = {cycle(3), cycle(4)};
  const ToughnessCertificate d = toughness_exact(disjoint_union(two));
  CHECK(d.value == Rational(0));
  CHECK(d.witness.empty());
  CHECK(d.exhaustive);
  CHECK_THROWS_AS(toughness_exact(complete(6)), ToughnessError);
  CHECK_THROWS_AS(toughness_exact(Graph::empty(0)), ToughnessError);
}

TEST_CASE("exact solver matches the subset oracle, minimizers included") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 4 + static_cast<std::size_t>(trial % 9);
    const Graph g = oracle::random_connected(n, 0.1 + 0.005 * trial, rng);
    const auto want = oracle::toughness(g);
    CAPTURE(trial);
    if (!want) {
      CHECK_THROWS_AS(toughness_exact(g), ToughnessError);
      continue;
    }
    const ToughnessCertificate c = toughness_exact(g, with_minimizers());
    CHECK(c.value == want->value);
    CHECK(c.exhaustive);
    REQUIRE(c.minimizers);
    CHECK(*c.minimizers == want->minimizers);
    CHECK(c.witness == want->minimizers.front());
    CHECK(c.components <= oracle::alpha(g));
  }
}

TEST_CASE("serial and parallel solvers agree for every thread count") {
  std::vector<Graph> graphs{kneser(5, 2), lattice(4), gadget_odd(3), extremal_x(5), bipartite_sparse_cut(3)};
  std::mt19937_64 rng(4);
  for (int i = 0; i < 10; ++i) graphs.push_back(oracle::random_connected(14, 0.25, rng));
  for (const Graph& g : graphs) {
    const ToughnessCertificate ref = toughness_exact_serial(g, with_minimizers());
    for (unsigned t : {1u, 2u, 4u, 8u}) {
      const ToughnessCertificate par = toughness_exact(g, with_minimizers(t));
      CHECK(par.value == ref.value);
      CHECK(par.witness == ref.witness);
      CHECK(par.minimizers == ref.minimizers);
    }
  }
}

TEST_CASE("incumbent improvements are strictly decreasing") {
  std::vector<Rational> seen;
  std::mutex m;
  ToughnessOptions o;
  o.threads = 4;
  o.on_improve = [&](const Rational& r) {
    std::lock_guard lock(m);
    seen.push_back(r);
  };
  const ToughnessCertificate c = toughness_exact(gadget_odd(5), o);
  REQUIRE_FALSE(seen.empty());
  for (std::size_t i = 1; i < seen.size(); ++i) CHECK(seen[i] < seen[i - 1]);
  CHECK(seen.back() == c.value);
}

TEST_CASE("budget exhaustion gives an upper bound") {
  const Graph g = kneser(7, 2);
  const ToughnessCertificate full = toughness_exact(g);
  ToughnessOptions o;
  o.budget = 1;
  const ToughnessCertificate part = toughness_exact(g, o);
  CHECK_FALSE(part.exhaustive);
  CHECK_FALSE(part.minimizers.has_value());
  CHECK(part.value >= full.value);
  CHECK(toughness_of_set(g, part.witness) == part.value);
}

TEST_CASE("component range restriction") {
  const Graph p = kneser(5, 2);
  ToughnessOptions o;
  o.min_components = 3;
  CHECK(toughness_exact(p, o).value == Rational(4, 3));
  o.min_components = 2;
  o.max_components = 2;
  const ToughnessCertificate two = toughness_exact(p, o);
  CHECK(two.value == Rational(3, 2));
  CHECK(two.components == 2);
  o.min_components = 5;
  o.max_components = 0;
  CHECK_THROWS_AS(toughness_exact(p, o), ToughnessError);
}

TEST_CASE("minimizer classification") {
  const Graph l = lattice(4);
  const ToughnessCertificate c = toughness_exact(l, with_minimizers());
  const MinimizerClassification k = classify_minimizers(l, c);
  CHECK(k.kinds.size() == c.minimizers->size());
  CHECK(k.other_empty());
  CHECK(k.total_maximum_independent_sets == 24);
  CHECK(k.independent_complements == 24);

  const Graph p = kneser(5, 2);
  const MinimizerClassification pk = classify_minimizers(p, toughness_exact(p, with_minimizers()));
  CHECK(pk.total_neighborhoods_disconnecting == 10);
  CHECK(pk.independent_complements == 0);

  CHECK_THROWS_AS(classify_minimizers(p, toughness_exact(p)), ToughnessError);
  CHECK(to_string(MinimizerKind::kNeighborhood) == "neighborhood");
}
