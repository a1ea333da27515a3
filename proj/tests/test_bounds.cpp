#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tough/bounds.hpp"
#include "tough/families.hpp"

using namespace tough;

TEST_CASE("Petersen graph bounds") {
  const BoundsReport b = bounds(kneser(5, 2));
  CHECK(b.k == 3);
  CHECK(b.lambda2 == doctest::Approx(1.0));
  CHECK(b.lambda_min == doctest::Approx(-2.0));
  CHECK(b.brouwer_lower == doctest::Approx(-0.5));
  CHECK(b.alon_lower == doctest::Approx(-1.0 / 30.0));
  CHECK(b.thm5_one_tough);
  CHECK(b.kappa_prime == 3);
  REQUIRE(b.thm4_tau_exact);
  CHECK(*b.thm4_tau_exact == Rational(1));
  CHECK_FALSE(b.thm4_tau_is_supremum);
  CHECK(b.alpha == 4);
  CHECK(b.hoffman_ratio == doctest::Approx(4.0));
  REQUIRE(b.hoffman_upper);
  CHECK(b.hoffman_upper->value == Rational(3, 2));
  REQUIRE(b.neighborhood_upper);
  CHECK(*b.neighborhood_upper == Rational(3, 2));
}

TEST_CASE("Schlafli graph bounds") {
  const BoundsReport b = bounds(complement(gq_point_graph(gq_2_4())));
  CHECK(b.k == 16);
  CHECK(b.lambda_abs == doctest::Approx(4.0));
  CHECK(b.brouwer_lower == doctest::Approx(2.0));
  CHECK(b.alpha == 3);
  REQUIRE(b.hoffman_upper);
  CHECK(b.hoffman_upper->value == Rational(8));
  CHECK(b.hoffman_upper->components == 3);
}

TEST_CASE("Hoffman equality witnesses") {
  const auto t6 = hoffman_equality_upper(triangular(6));
  REQUIRE(t6);
  CHECK(t6->value == Rational(4));
  const auto k62 = hoffman_equality_upper(kneser(6, 2));
  REQUIRE(k62);
  CHECK(k62->value == Rational(2));
  CHECK(k62->components == 5);
  CHECK_FALSE(hoffman_equality_upper(cycle(7)).has_value());
}

TEST_CASE("spectral one-tough threshold") {
  CHECK(bounds(hypercube(3)).thm5_one_tough);
  CHECK(liu_chen_threshold(3) == doctest::Approx(2.5));
  CHECK(liu_chen_threshold(4) == doctest::Approx(3.6));
  // The gadgets are not 1-tough, so the threshold must fail for them.
  for (std::size_t k : {3, 5}) CHECK_FALSE(bounds(gadget_odd(k)).thm5_one_tough);
  for (std::size_t k : {4, 6}) CHECK_FALSE(bounds(gadget_even(k)).thm5_one_tough);
  const BoundsReport c = bounds(cycle(8));
  CHECK(c.thm5_extrapolated);
}

TEST_CASE("irregular or disconnected input is rejected") {
  CHECK_THROWS_AS(bounds(complete_bipartite(2, 3)), SpectralError);
  const Graph two[] = {cycle(3), cycle(3)};
  CHECK_THROWS_AS(bounds(disjoint_union(two)), SpectralError);
}

TEST_CASE("bounds bracket the exact toughness of random circulants") {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = oracle::random_circulant(6 + static_cast<std::size_t>(trial % 7), rng);
    const auto t = oracle::toughness(g);
    if (!t) continue;
    ++checked;
    const double v = t->value.to_double();
    const BoundsReport b = bounds(g);
    CAPTURE(trial);
    CHECK(v > b.brouwer_lower);
    CHECK(v > b.alon_lower);
    if (b.thm5_one_tough && !b.thm5_extrapolated) CHECK(v >= 1.0);
    if (b.liu_chen_one_tough) CHECK(v >= 1.0);
    if (b.thm4_tau) CHECK(v >= *b.thm4_tau - 1e-12);
    if (b.hoffman_upper) CHECK(t->value <= b.hoffman_upper->value);
    if (b.neighborhood_upper) CHECK(t->value <= *b.neighborhood_upper);
    CHECK(double(b.alpha) <= b.hoffman_ratio + 1e-9);
  }
  CHECK(checked > 40);
}
