#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "tough/families.hpp"
#include "tough/spectral.hpp"

using namespace tough;

namespace {

// Eigenvalues against an explicit list, both sorted descending.
void check_values(const Spectrum& sp, std::vector<double> want, double tol = 1e-9) {
  std::sort(want.begin(), want.end(), std::greater<>());
  REQUIRE(sp.eigenvalues.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(sp.eigenvalues[i] == doctest::Approx(want[i]).epsilon(tol));
}

double power_sum(const Spectrum& sp, int p) {
  double s = 0;
  for (double x : sp.eigenvalues) s += std::pow(x, p);
  return s;
}

std::size_t triangles(const Graph& g) {
  std::size_t t = 0;
  for (auto [u, v] : g.edges())
    for (Vertex w = v + 1; w < g.order(); ++w) t += g.adjacent(u, w) && g.adjacent(v, w);
  return t;
}

}  // namespace

TEST_CASE("Jacobi eigenvalues match closed forms") {
  for (std::size_t n : {5, 6, 9}) {
    std::vector<double> want;
    for (std::size_t j = 0; j < n; ++j) want.push_back(2.0 * std::cos(2.0 * std::numbers::pi * double(j) / double(n)));
    check_values(spectrum(cycle(n)), want);
  }
  {
    std::vector<double> want;
    const std::size_t d = 4;
    for (std::size_t mask = 0; mask < (1u << d); ++mask) want.push_back(double(d) - 2.0 * std::popcount(mask));
    check_values(spectrum(hypercube(d)), want);
  }
  {
    std::vector<double> want(7, -1.0);
    want[0] = 6.0;
    check_values(spectrum(complete(7)), want);
  }
  {
    std::vector<double> want(5, 0.0);
    want.push_back(std::sqrt(12.0));
    want.push_back(-std::sqrt(12.0));
    check_values(spectrum(complete_bipartite(3, 4)), want);
  }
}

TEST_CASE("spectral moments match edge and triangle counts") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_connected(5 + static_cast<std::size_t>(trial % 14), 0.3, rng);
    const Spectrum sp = spectrum(g);
    CHECK(power_sum(sp, 1) == doctest::Approx(0.0).scale(1.0));
    CHECK(power_sum(sp, 2) == doctest::Approx(2.0 * double(g.size())));
    CHECK(power_sum(sp, 3) == doctest::Approx(6.0 * double(triangles(g))));
    CHECK(std::is_sorted(sp.eigenvalues.begin(), sp.eigenvalues.end(), std::greater<>()));
  }
}

TEST_CASE("grouping and integer recognition") {
  const Spectrum sp = spectrum(kneser(5, 2));
  REQUIRE(sp.grouped.size() == 3);
  CHECK(sp.grouped[0].multiplicity == 1);
  CHECK(sp.grouped[1].multiplicity == 5);
  CHECK(sp.grouped[2].multiplicity == 4);
  CHECK(sp.grouped[0].integer == std::optional<long long>(3));
  CHECK(sp.grouped[2].integer == std::optional<long long>(-2));

  const auto g = group_eigenvalues({2.0, 1.0 + 1e-9, 1.0, 0.5}, 1e-6);
  REQUIRE(g.size() == 3);
  CHECK(g[1].multiplicity == 2);
  CHECK_FALSE(g[2].integer.has_value());
  CHECK(group_eigenvalues({1.0, 1.0 - 1e-3}, 1e-6).size() == 2);
}

TEST_CASE("lambda summary") {
  const LambdaSummary ls = lambda_summary(spectrum(kneser(5, 2)), 3);
  CHECK(ls.lambda2 == doctest::Approx(1.0));
  CHECK(ls.lambda_min == doctest::Approx(-2.0));
  CHECK(ls.lambda_abs == doctest::Approx(2.0));
  CHECK_THROWS_AS(lambda_summary(spectrum(kneser(5, 2)), 4), SpectralError);
}

TEST_CASE("spectral threshold theta(k)") {
  CHECK(theta(3) == doctest::Approx((1.0 + std::sqrt(17.0)) / 2.0).epsilon(1e-12));
  CHECK(theta(4) == doctest::Approx(1.0 + std::sqrt(7.0)).epsilon(1e-12));
  CHECK(theta(5) == doctest::Approx((3.0 + std::sqrt(33.0)) / 2.0).epsilon(1e-12));
  CHECK(theta(2) == doctest::Approx(2.0));
  CHECK_THROWS(theta(1));
  for (std::size_t k = 3; k <= 9; ++k) CHECK(spectrum(extremal_x(k)).eigenvalues.front() == doctest::Approx(theta(k)));
}

TEST_CASE("equitable partitions") {
  const std::size_t k = 5;
  const Graph x = extremal_x(k);
  // Cocktail-party vertices first, then the two vertices of degree k.
  std::vector<VertexSet> parts(2, VertexSet(x.order()));
  for (Vertex v = 0; v < x.order(); ++v) parts[v < k - 1 ? 0 : 1].insert(v);
  const QuotientMatrix q = check_equitable(x, parts);
  CHECK(q.at(0, 0) == doctest::Approx(double(k - 3)));
  CHECK(q.at(0, 1) == doctest::Approx(2.0));
  CHECK(q.at(1, 0) == doctest::Approx(double(k - 1)));
  CHECK(q.at(1, 1) == doctest::Approx(1.0));
  const auto ev = quotient_eigenvalues(q);
  CHECK(*std::max_element(ev.begin(), ev.end()) == doctest::Approx(theta(k)));

  CHECK_THROWS_AS(check_equitable(cycle(6), {VertexSet(6, {0, 1}), VertexSet(6, {2, 3, 4, 5})}), NotEquitable);

  // Non-symmetric 3x3 quotient of the odd gadget.
  QuotientMatrix g3{3, {0, 3, 0, 1, 0, 2, 0, 2, 1}};
  auto e3 = quotient_eigenvalues(g3);
  std::sort(e3.begin(), e3.end());
  CHECK(e3[0] == doctest::Approx(-1.0 - std::sqrt(2.0)));
  CHECK(e3[1] == doctest::Approx(-1.0 + std::sqrt(2.0)));
  CHECK(e3[2] == doctest::Approx(3.0));
}

TEST_CASE("strongly regular spectra from parameters") {
  for (const Graph& g : {lattice(4), triangular(7), kneser(7, 2), kneser(5, 2), complement(gq_point_graph(gq_2_4()))}) {
    const auto p = srg_check(g);
    REQUIRE(p);
    const auto want = srg_spectrum(*p);
    const Spectrum sp = spectrum(g);
    REQUIRE(want.size() == sp.grouped.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
      CHECK(want[i].value == doctest::Approx(sp.grouped[i].value));
      CHECK(want[i].multiplicity == sp.grouped[i].multiplicity);
    }
  }
}

TEST_CASE("interlacing") {
  const Graph p = kneser(5, 2);
  const Spectrum whole = spectrum(p);
  CHECK(interlacing_holds(whole, spectrum(induced_subgraph(p, VertexSet(10, {0, 1, 2, 5, 7, 9})))));
  CHECK(interlacing_holds(spectrum(gadget_odd(3)), spectrum(extremal_x(3))));
  // lambda1(K_5) = 4 exceeds lambda1 of the Petersen graph.
  CHECK_FALSE(interlacing_holds(whole, spectrum(complete(5))));
}

TEST_CASE("Hoffman ratio bound") {
  const HoffmanBound h = hoffman_ratio_bound(kneser(5, 2));
  CHECK(h.value == doctest::Approx(4.0));
  REQUIRE(h.exact);
  CHECK(*h.exact == Rational(4));
  const HoffmanBound t5 = hoffman_ratio_bound(triangular(5));
  REQUIRE(t5.exact);
  CHECK(*t5.exact == Rational(5, 2));
  CHECK_FALSE(hoffman_ratio_bound(cycle(5)).exact.has_value());
}
