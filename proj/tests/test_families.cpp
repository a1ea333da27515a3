#include <doctest.h>

#include <sstream>

#include "tough/families.hpp"
#include "tough/family_spec.hpp"
#include "tough/spectral.hpp"

using namespace tough;

namespace {

std::size_t choose2(std::size_t v) { return v * (v - 1) / 2; }

std::size_t count_degree(const Graph& g, std::size_t d) {
  std::size_t c = 0;
  for (auto x : g.degrees()) c += (x == d);
  return c;
}

}  // namespace

TEST_CASE("basic families") {
  CHECK(complete(5).size() == 10);
  CHECK(complete_bipartite(2, 3).size() == 6);
  CHECK(cycle(6).size() == 6);
  CHECK(hypercube(4).order() == 16);
  CHECK(regularity(hypercube(4)) == std::optional<std::size_t>(4));
  CHECK(matching(6).size() == 3);
  CHECK(regularity(matching_complement(6)) == std::optional<std::size_t>(4));
  CHECK(subsets(5, 2).size() == 10);
  CHECK(subsets(5, 2).front() == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(matching(3), std::invalid_argument);
  CHECK_THROWS_AS(kneser(4, 3), std::invalid_argument);
}

TEST_CASE("line graphs and Kneser graphs are strongly regular with the expected parameters") {
  for (std::size_t v = 2; v <= 6; ++v)
    CHECK(srg_check(lattice(v)) == std::optional<SrgParams>({v * v, 2 * v - 2, v - 2, 2}));
  for (std::size_t v = 4; v <= 8; ++v)
    CHECK(srg_check(triangular(v)) == std::optional<SrgParams>({choose2(v), 2 * v - 4, v - 2, 4}));
  for (std::size_t v = 5; v <= 8; ++v)
    CHECK(srg_check(kneser(v, 2)) ==
          std::optional<SrgParams>({choose2(v), choose2(v - 2), choose2(v - 4), choose2(v - 3)}));
  CHECK(srg_check(kneser(5, 2)) == std::optional<SrgParams>({10, 3, 0, 1}));
  CHECK(regularity(kneser(7, 3)) == std::optional<std::size_t>(4));
  CHECK_FALSE(srg_check(cycle(6)).has_value());
}

TEST_CASE("extremal graph X_k degree profile") {
  for (std::size_t k = 3; k <= 8; ++k) {
    const Graph x = extremal_x(k);
    CHECK(x.order() == k + 1);
    CHECK(is_connected(x));
    CHECK(count_degree(x, k) == (k % 2 == 1 ? 2u : 3u));
    CHECK(count_degree(x, k - 1) == (k % 2 == 1 ? k - 1 : k - 2));
    CHECK(2 * x.size() >= k * (k + 1) - k + 1);
  }
}

TEST_CASE("gadgets are connected k-regular with the expected orders") {
  for (std::size_t k : {3, 5, 7}) {
    const Graph g = gadget_odd(k);
    CHECK(g.order() == k * k + 2 * k - 1);
    CHECK(regularity(g) == k);
    CHECK(is_connected(g));
  }
  for (std::size_t k : {4, 6, 8}) {
    const Graph g = gadget_even(k);
    CHECK(g.order() == k * k + k - 3);
    CHECK(regularity(g) == k);
    CHECK(is_connected(g));
  }
  CHECK_THROWS_AS(gadget_odd(4), std::invalid_argument);
  CHECK_THROWS_AS(gadget_even(5), std::invalid_argument);
}

TEST_CASE("bipartite graph with a two-vertex cut") {
  for (std::size_t k = 3; k <= 5; ++k) {
    const Graph g = bipartite_sparse_cut(k);
    CHECK(g.order() == 2 + 2 * k * k);
    CHECK(is_bipartite(g));
    CHECK(regularity(g) == k);
    CHECK(is_connected(g));
    CHECK(count_components(g, VertexSet(g.order(), {0, 1})) == k);
  }
}

TEST_CASE("generalized quadrangles pass the full audit") {
  for (const auto& gq : {gq_grid(2), gq_grid(3), gq_symplectic(2), gq_symplectic(3), gq_2_4()}) {
    const GqAudit a = audit_gq(gq);
    CAPTURE(gq.name);
    CHECK(a.ok);
    CHECK(a.violations.empty());
    CHECK(a.checked_instances > 0);
    CHECK(gq.num_points == (gq.s + 1) * (gq.s * gq.t + 1));
  }
  CHECK(gq_symplectic(3).s == 3);
  CHECK(gq_2_4().lines.size() == 45);
  CHECK_THROWS_AS(gq_symplectic(4), std::invalid_argument);
}

TEST_CASE("audit catches broken quadrangles") {
  GeneralizedQuadrangle gq = gq_symplectic(2);
  gq.lines.pop_back();
  CHECK_FALSE(audit_gq(gq).ok);

  gq = gq_grid(2);
  std::swap(gq.lines[0][0], gq.lines[3][0]);  // move a point between lines
  for (auto& l : gq.lines) std::sort(l.begin(), l.end());
  CHECK_FALSE(audit_gq(gq).ok);
}

TEST_CASE("quadrangle point graphs") {
  for (const auto& gq : {gq_grid(2), gq_symplectic(2), gq_2_4(), gq_symplectic(3)}) {
    const std::size_t s = gq.s, t = gq.t, n = (s + 1) * (s * t + 1);
    const Graph p = gq_point_graph(gq);
    CHECK(srg_check(p) == std::optional<SrgParams>({n, s * (t + 1), s - 1, t + 1}));
    const std::size_t lam = t * (s * s + 1) - s * (t + 1), mu = s * t * (s - 1);
    CHECK(srg_check(complement(p)) == std::optional<SrgParams>({n, s * s * t, lam, mu}));
  }
  // GQ(s,1) is the (s+1)x(s+1) grid.
  CHECK(srg_check(gq_point_graph(gq_grid(3))) == srg_check(lattice(4)));
  // Schlafli graph parameters.
  CHECK(srg_check(complement(gq_point_graph(gq_2_4()))) == std::optional<SrgParams>({27, 16, 10, 8}));
  // The complement of W(2) has the parameters of T_6.
  CHECK(srg_check(complement(gq_point_graph(gq_symplectic(2)))) == srg_check(triangular(6)));
}

TEST_CASE("family specs") {
  CHECK(build_family("lattice:v=4") == lattice(4));
  CHECK(build_family("petersen") == kneser(5, 2));
  CHECK(build_family(" kneser:v=6, r=2 ") == kneser(6, 2));
  CHECK(build_family("complement(point-graph(gq24))") == complement(gq_point_graph(gq_2_4())));
  CHECK(build_family("point-graph(complement(gq24))") == complement(gq_point_graph(gq_2_4())));
  CHECK(build_family("gq-w:q=2") == gq_point_graph(gq_symplectic(2)));
  CHECK(build_family("gadget:k=3") == gadget_odd(3));
  CHECK(build_family("gadget:k=4") == gadget_even(4));
  CHECK(build_family("complement(lattice:v=3)") == complement(lattice(3)));

  const FamilySpec s = parse_family_spec("complement(kneser:v=7,r=2)");
  CHECK(s.name == "kneser");
  CHECK(s.complemented);
  CHECK(s.params.at("v") == 7);

  CHECK_THROWS_AS(parse_family_spec("nosuch:v=3"), SpecError);
  CHECK_THROWS_AS(parse_family_spec("lattice"), SpecError);
  CHECK_THROWS_AS(parse_family_spec("lattice:v=x"), SpecError);
  CHECK_THROWS_AS(parse_family_spec("lattice:w=3"), SpecError);
  CHECK_THROWS_AS(parse_family_spec("complement(complement(lattice:v=3))"), SpecError);
  CHECK_THROWS_AS(parse_family_spec("point-graph(lattice:v=3)"), SpecError);
  CHECK_THROWS_AS(parse_family_spec("complement(lattice:v=3"), SpecError);
  CHECK_THROWS_AS(build_family("cycle:n=2"), SpecError);
  CHECK_THROWS_AS(build_family("gq-w:q=4"), SpecError);
  CHECK(known_families().size() >= 15);
}

TEST_CASE("every family spec survives write and read") {
  for (const char* spec : {"lattice:v=5", "triangular:v=7", "kneser:v=7,r=2", "kneser:v=7,r=3", "petersen",
                           "gadget:k=5", "gadget:k=6", "xk:k=4", "bipartite-cut:k=3", "matching-complement:t=8",
                           "hypercube:d=5", "cycle:n=9", "complete:v=6", "complete-bipartite:a=2,b=5",
                           "gq-grid:s=3", "gq-w:q=3", "gq24", "complement(point-graph(gq-w:q=3))"}) {
    CAPTURE(spec);
    const Graph g = build_family(spec);
    std::stringstream ss;
    write_graph(ss, g);
    CHECK(read_graph(ss) == g);
    CHECK(audit(g));
  }
}
