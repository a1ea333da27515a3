#include "tough/families.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace tough {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph complete(std::size_t v) {
  std::vector<Edge> e;
  for (Vertex a = 0; a < v; ++a)
    for (Vertex b = a + 1; b < v; ++b) e.emplace_back(a, b);
  return Graph::from_edges(v, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  require(a >= 1 && b >= 1, "complete_bipartite: both sides must be non-empty");
  std::vector<Edge> e;
  for (Vertex x = 0; x < a; ++x)
    for (Vertex y = 0; y < b; ++y) e.emplace_back(x, a + y);
  return Graph::from_edges(a + b, e);
}

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle: n must be at least 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph hypercube(std::size_t d) {
  require(d >= 1 && d <= 16, "hypercube: dimension must be in 1..16");
  const std::size_t n = std::size_t{1} << d;
  std::vector<Edge> e;
  for (Vertex x = 0; x < n; ++x)
    for (std::size_t b = 0; b < d; ++b) {
      Vertex y = x ^ (std::size_t{1} << b);
      if (x < y) e.emplace_back(x, y);
    }
  return Graph::from_edges(n, e);
}

Graph matching(std::size_t t) {
  require(t >= 2 && t % 2 == 0, "matching: t must be even and positive");
  std::vector<Edge> e;
  for (Vertex i = 0; i < t; i += 2) e.emplace_back(i, i + 1);
  return Graph::from_edges(t, e);
}

Graph matching_complement(std::size_t t) {
  require(t >= 2 && t % 2 == 0, "matching_complement: t must be even and positive");
  return complement(matching(t));
}

Graph extremal_x(std::size_t k) {
  require(k >= 3, "extremal_x: k must be at least 3");
  if (k % 2 == 1) return join(matching_complement(k - 1), complete(2));
  return join(matching_complement(k - 2), complete(3));
}

namespace {

// T occupies indices [0, t_size); copy c starts at t_size + c * (k + 1) and its
// first `t_size` vertices are the degree-(k-1) cocktail-party vertices.
Graph attach_copies(std::size_t k, std::size_t copies, const Graph& t_graph) {
  const Graph x = extremal_x(k);
  const std::size_t t_size = t_graph.order();
  const std::size_t block = x.order();
  std::vector<Edge> e = t_graph.edges();
  for (std::size_t c = 0; c < copies; ++c) {
    const std::size_t base = t_size + c * block;
    for (auto [u, v] : x.edges()) e.emplace_back(base + u, base + v);
    for (Vertex i = 0; i < t_size; ++i) e.emplace_back(i, base + i);
  }
  return Graph::from_edges(t_size + copies * block, e);
}

}  // namespace

Graph gadget_odd(std::size_t k) {
  require(k >= 3 && k % 2 == 1, "gadget_odd: k must be odd and at least 3");
  return attach_copies(k, k, Graph::empty(k - 1));
}

Graph gadget_even(std::size_t k) {
  require(k >= 4 && k % 2 == 0, "gadget_even: k must be even and at least 4");
  return attach_copies(k, k - 1, matching(k - 2));
}

Graph bipartite_sparse_cut(std::size_t k) {
  require(k >= 3, "bipartite_sparse_cut: k must be at least 3");
  // Copy c: side A = base..base+k-1, side B = base+k..base+2k-1; the missing edge is
  // (A0, B0), whose endpoints are reattached to vertex 0 and vertex 1 respectively.
  std::vector<Edge> e;
  for (std::size_t c = 0; c < k; ++c) {
    const std::size_t base = 2 + c * 2 * k;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        if (a != 0 || b != 0) e.emplace_back(base + a, base + k + b);
    e.emplace_back(0, base);
    e.emplace_back(1, base + k);
  }
  return Graph::from_edges(2 + 2 * k * k, e);
}

Graph lattice(std::size_t v) {
  require(v >= 2, "lattice: v must be at least 2");
  std::vector<Edge> e;
  for (std::size_t a = 0; a < v * v; ++a)
    for (std::size_t b = a + 1; b < v * v; ++b)
      if (a / v == b / v || a % v == b % v) e.emplace_back(a, b);
  return Graph::from_edges(v * v, e);
}

std::vector<std::vector<std::size_t>> subsets(std::size_t v, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() == r) {
      out.push_back(cur);
      return;
    }
    for (std::size_t x = from; x + (r - cur.size()) <= v; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

Graph subset_graph(std::size_t v, std::size_t r, bool adjacent_when_disjoint) {
  auto sets = subsets(v, r);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      std::size_t common = 0;
      for (std::size_t x : sets[i])
        for (std::size_t y : sets[j]) common += (x == y);
      if (adjacent_when_disjoint ? common == 0 : common == r - 1) e.emplace_back(i, j);
    }
  return Graph::from_edges(sets.size(), e);
}

}  // namespace

Graph triangular(std::size_t v) {
  require(v >= 4, "triangular: v must be at least 4");
  return subset_graph(v, 2, false);
}

Graph kneser(std::size_t v, std::size_t r) {
  require(r >= 1 && v >= 2 * r, "kneser: need r >= 1 and v >= 2r");
  return subset_graph(v, r, true);
}

// ---------------------------------------------------------------------------
// Generalized quadrangles

GqAudit audit_gq(const GeneralizedQuadrangle& gq) {
  GqAudit a;
  auto fail = [&](std::string msg) {
    a.ok = false;
    if (a.violations.size() < 20) a.violations.push_back(std::move(msg));
  };
  const std::size_t s = gq.s, t = gq.t, np = gq.num_points;
  if (np != (s + 1) * (s * t + 1)) fail("point count differs from (s+1)(st+1)");
  if (gq.lines.size() != (t + 1) * (s * t + 1)) fail("line count differs from (t+1)(st+1)");

  std::vector<VertexSet> line_sets;
  std::vector<std::size_t> lines_through(np, 0);
  for (std::size_t li = 0; li < gq.lines.size(); ++li) {
    ++a.checked_instances;
    const auto& l = gq.lines[li];
    if (l.size() != s + 1) fail("line " + std::to_string(li) + " has " + std::to_string(l.size()) + " points");
    VertexSet ls(np);
    for (Vertex p : l) {
      if (p >= np) {
        fail("line " + std::to_string(li) + " names an unknown point");
        continue;
      }
      ls.insert(p);
      ++lines_through[p];
    }
    line_sets.push_back(std::move(ls));
  }
  for (Vertex p = 0; p < np; ++p) {
    ++a.checked_instances;
    if (lines_through[p] != t + 1)
      fail("point " + std::to_string(p) + " lies on " + std::to_string(lines_through[p]) + " lines");
  }
  // Two distinct lines share at most one point (equivalently two points share at most one line).
  for (std::size_t i = 0; i < line_sets.size(); ++i)
    for (std::size_t j = i + 1; j < line_sets.size(); ++j) {
      ++a.checked_instances;
      if (bits::count_and(line_sets[i].words(), line_sets[j].words()) > 1)
        fail("lines " + std::to_string(i) + " and " + std::to_string(j) + " share two points");
    }
  // Collinearity: union of lines through p.
  std::vector<VertexSet> collinear(np, VertexSet(np));
  for (const auto& ls : line_sets)
    bits::for_each(ls.words(), [&](Vertex p) { collinear[p] |= ls; });
  for (Vertex p = 0; p < np; ++p) collinear[p].erase(p);
  for (std::size_t li = 0; li < line_sets.size(); ++li)
    for (Vertex p = 0; p < np; ++p) {
      if (line_sets[li].contains(p)) continue;
      ++a.checked_instances;
      std::size_t c = bits::count_and(collinear[p].words(), line_sets[li].words());
      if (c != 1)
        fail("point " + std::to_string(p) + " is collinear with " + std::to_string(c) + " points of line " +
             std::to_string(li));
    }
  return a;
}

GeneralizedQuadrangle gq_grid(std::size_t s) {
  require(s >= 1, "gq_grid: s must be at least 1");
  const std::size_t w = s + 1;
  GeneralizedQuadrangle gq;
  gq.num_points = w * w;
  gq.s = s;
  gq.t = 1;
  gq.name = "GQ(" + std::to_string(s) + ",1) grid";
  for (std::size_t r = 0; r < w; ++r) {
    std::vector<Vertex> row, col;
    for (std::size_t c = 0; c < w; ++c) {
      row.push_back(r * w + c);
      col.push_back(c * w + r);
    }
    gq.lines.push_back(row);
    gq.lines.push_back(col);
  }
  std::sort(gq.lines.begin(), gq.lines.end());
  return gq;
}

namespace {

bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace

GeneralizedQuadrangle gq_symplectic(std::size_t q) {
  require(is_prime(q) && q <= 31, "gq_symplectic: q must be a prime (at most 31)");
  using Vec = std::array<std::size_t, 4>;
  // Canonical projective representatives: first nonzero coordinate equals 1,
  // enumerated in lexicographic order.
  std::vector<Vec> pts;
  for (std::size_t x0 = 0; x0 < q; ++x0)
    for (std::size_t x1 = 0; x1 < q; ++x1)
      for (std::size_t x2 = 0; x2 < q; ++x2)
        for (std::size_t x3 = 0; x3 < q; ++x3) {
          Vec x{x0, x1, x2, x3};
          std::size_t lead = 0;
          while (lead < 4 && x[lead] == 0) ++lead;
          if (lead < 4 && x[lead] == 1) pts.push_back(x);
        }
  auto index_of = [&](Vec x) {
    std::size_t lead = 0;
    while (x[lead] == 0) ++lead;
    std::size_t inv = 1;
    while ((x[lead] * inv) % q != 1) ++inv;
    for (auto& c : x) c = (c * inv) % q;
    auto it = std::lower_bound(pts.begin(), pts.end(), x);
    return static_cast<Vertex>(it - pts.begin());
  };
  auto form = [&](const Vec& x, const Vec& y) {
    // x1*y2 - x2*y1 + x3*y4 - x4*y3 (1-based coordinates)
    std::size_t pos = (x[0] * y[1] + x[2] * y[3]) % q;
    std::size_t neg = (x[1] * y[0] + x[3] * y[2]) % q;
    return (pos + q - neg) % q;
  };
  GeneralizedQuadrangle gq;
  gq.num_points = pts.size();
  gq.s = q;
  gq.t = q;
  gq.name = "W(" + std::to_string(q) + ")";
  std::set<std::vector<Vertex>> lines;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (form(pts[i], pts[j]) != 0) continue;
      std::vector<Vertex> line;
      for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) {
          if (a == 0 && b == 0) continue;
          Vec z;
          for (std::size_t c = 0; c < 4; ++c) z[c] = (a * pts[i][c] + b * pts[j][c]) % q;
          line.push_back(index_of(z));
        }
      std::sort(line.begin(), line.end());
      line.erase(std::unique(line.begin(), line.end()), line.end());
      lines.insert(line);
    }
  gq.lines.assign(lines.begin(), lines.end());
  return gq;
}

GeneralizedQuadrangle gq_2_4() {
  // Labels: a_i -> i, b_i -> 6 + i (i = 0..5), c_ij -> 12 + index of {i,j} among 2-subsets of 6.
  const auto pairs = subsets(6, 2);
  const std::size_t np = 27;
  auto collinear = [&](std::size_t x, std::size_t y) {
    if (x > y) std::swap(x, y);
    if (y < 6) return false;                            // a-a
    if (x < 6 && y < 12) return x != y - 6;             // a_i ~ b_j iff i != j
    if (x >= 6 && y < 12) return false;                 // b-b
    if (x < 12) {                                       // a or b with c
      std::size_t i = x < 6 ? x : x - 6;
      const auto& p = pairs[y - 12];
      return p[0] == i || p[1] == i;
    }
    const auto& p = pairs[x - 12];
    const auto& r = pairs[y - 12];
    return p[0] != r[0] && p[0] != r[1] && p[1] != r[0] && p[1] != r[1];
  };
  GeneralizedQuadrangle gq;
  gq.num_points = np;
  gq.s = 2;
  gq.t = 4;
  gq.name = "GQ(2,4)";
  // Lines are the triangles of the collinearity graph.
  for (std::size_t x = 0; x < np; ++x)
    for (std::size_t y = x + 1; y < np; ++y) {
      if (!collinear(x, y)) continue;
      for (std::size_t z = y + 1; z < np; ++z)
        if (collinear(x, z) && collinear(y, z)) gq.lines.push_back({x, y, z});
    }
  return gq;
}

Graph gq_point_graph(const GeneralizedQuadrangle& gq) {
  std::vector<Edge> e;
  for (const auto& l : gq.lines)
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = i + 1; j < l.size(); ++j) e.emplace_back(std::min(l[i], l[j]), std::max(l[i], l[j]));
  return Graph::from_edges(gq.num_points, e);
}

std::vector<VertexSet> gq_line_sets(const GeneralizedQuadrangle& gq) {
  std::vector<VertexSet> out;
  for (const auto& l : gq.lines) out.emplace_back(gq.num_points, std::span<const Vertex>(l));
  return out;
}

}  // namespace tough
