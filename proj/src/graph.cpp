#include "tough/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tough {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside 0.." +
                       std::to_string(n == 0 ? 0 : n - 1));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    std::span<Word> ru{g.adj_.data() + u * g.wpr_, g.wpr_};
    if (bits::test(ru, v)) continue;
    bits::set(ru, v);
    bits::set(std::span<Word>{g.adj_.data() + v * g.wpr_, g.wpr_}, u);
    ++g.m_;
  }
  return g;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(n_);
  for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (std::size_t v = bits::find_next(row(u), u + 1); v != bits::npos; v = bits::find_next(row(u), v + 1))
      out.emplace_back(u, v);
  return out;
}

Graph complement(const Graph& g) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return Graph::from_edges(g.order(), e);
}

Graph disjoint_union(std::span<const Graph> gs) {
  std::size_t n = 0;
  std::vector<Edge> e;
  for (const Graph& g : gs) {
    for (auto [u, v] : g.edges()) e.emplace_back(u + n, v + n);
    n += g.order();
  }
  return Graph::from_edges(n, e);
}

Graph join(const Graph& g, const Graph& h) {
  const Graph parts[] = {g, h};
  Graph u = disjoint_union(parts);
  std::vector<Edge> e = u.edges();
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = 0; b < h.order(); ++b) e.emplace_back(a, g.order() + b);
  return Graph::from_edges(u.order(), e);
}

Graph line_graph(const Graph& g) {
  const std::vector<Edge> base = g.edges();
  std::vector<Edge> e;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i + 1; j < base.size(); ++j) {
      auto [a, b] = base[i];
      auto [c, d] = base[j];
      if (a == c || a == d || b == c || b == d) e.emplace_back(i, j);
    }
  return Graph::from_edges(base.size(), e);
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> idx = keep.to_vector();
  std::vector<std::size_t> pos(g.order(), bits::npos);
  for (std::size_t i = 0; i < idx.size(); ++i) pos[idx[i]] = i;
  std::vector<Edge> e;
  for (auto [u, v] : g.edges())
    if (pos[u] != bits::npos && pos[v] != bits::npos) e.emplace_back(pos[u], pos[v]);
  return Graph::from_edges(idx.size(), e);
}

namespace {

// Grows the component of `start` inside `alive`, clearing it from `alive`.
void flood(const Graph& g, std::span<Word> alive, Vertex start, std::span<Word> part, std::vector<Word>& frontier,
           std::vector<Word>& next) {
  std::fill(frontier.begin(), frontier.end(), 0);
  bits::set(frontier, start);
  bits::reset(alive, start);
  if (!part.empty()) bits::set(part, start);
  while (bits::any(frontier)) {
    std::fill(next.begin(), next.end(), 0);
    bits::for_each(frontier, [&](Vertex v) {
      auto r = g.row(v);
      for (std::size_t i = 0; i < next.size(); ++i) next[i] |= r[i];
    });
    for (std::size_t i = 0; i < next.size(); ++i) {
      next[i] &= alive[i];
      alive[i] &= ~next[i];
      if (!part.empty()) part[i] |= next[i];
    }
    frontier.swap(next);
  }
}

}  // namespace

Components components_after_removal(const Graph& g, const VertexSet& removed) {
  if (removed.universe() != g.order()) throw GraphError("vertex set universe does not match graph order");
  VertexSet alive = removed.complement();
  std::vector<Word> frontier(g.words_per_row()), next(g.words_per_row());
  Components out;
  for (std::size_t v = bits::find_first(alive.words()); v != bits::npos; v = bits::find_first(alive.words())) {
    VertexSet part(g.order());
    flood(g, alive.words(), v, part.words(), frontier, next);
    out.parts.push_back(std::move(part));
  }
  out.count = out.parts.size();
  return out;
}

std::size_t count_components(const Graph& g, const VertexSet& removed) {
  if (removed.universe() != g.order()) throw GraphError("vertex set universe does not match graph order");
  VertexSet alive = removed.complement();
  std::vector<Word> frontier(g.words_per_row()), next(g.words_per_row());
  std::size_t c = 0;
  for (std::size_t v = bits::find_first(alive.words()); v != bits::npos; v = bits::find_first(alive.words())) {
    flood(g, alive.words(), v, {}, frontier, next);
    ++c;
  }
  return c;
}

bool is_connected(const Graph& g) { return g.order() == 0 || count_components(g, VertexSet(g.order())) == 1; }

std::optional<std::size_t> regularity(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const std::size_t k = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != k) return std::nullopt;
  return k;
}

std::size_t min_degree(const Graph& g) {
  std::size_t d = g.order();
  for (Vertex v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return g.order() == 0 ? 0 : d;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      Vertex u = queue[h];
      bool ok = true;
      bits::for_each(g.row(u), [&](Vertex w) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool audit(const Graph& g) {
  std::size_t twice = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.adjacent(u, u)) return false;
    // No bits beyond n in the last word.
    if (bits::find_next(g.row(u), g.order()) != bits::npos) return false;
    bool sym = true;
    bits::for_each(g.row(u), [&](Vertex v) { sym = sym && g.adjacent(v, u); });
    if (!sym) return false;
    twice += g.degree(u);
  }
  return twice == 2 * g.size();
}

void write_graph(std::ostream& os, const Graph& g) {
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

Graph read_graph(std::istream& is) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(is, out)) {
      auto p = out.find_first_not_of(" \t\r");
      if (p != std::string::npos && out[p] != '#') return true;
    }
    return false;
  };
  if (!next_line(line)) throw GraphError("graph file: missing header line \"n m\"");
  std::istringstream head(line);
  long long n = -1, m = -1;
  if (!(head >> n >> m) || n < 0 || m < 0) throw GraphError("graph file: malformed header \"" + line + "\"");
  std::vector<Edge> e;
  e.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line)) throw GraphError("graph file: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    std::istringstream es(line);
    long long u = -1, v = -1;
    if (!(es >> u >> v) || u < 0 || v < 0) throw GraphError("graph file: malformed edge line \"" + line + "\"");
    e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  return read_graph(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write " + path);
  write_graph(out, g);
}

}  // namespace tough
