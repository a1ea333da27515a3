#include "tough/connectivity.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tough {

namespace {

// Residual network with paired arcs (arc i and i ^ 1 are mutual reverses).
class UnitFlow {
 public:
  explicit UnitFlow(std::size_t nodes) : head_(nodes, npos) {}

  void add_arc(std::size_t u, std::size_t v, int cap, int rev_cap = 0) {
    push(u, v, cap);
    push(v, u, rev_cap);
  }

  // Augments along shortest paths until no path remains or `limit` is reached.
  std::size_t run(std::size_t s, std::size_t t, std::size_t limit) {
    std::size_t flow = 0;
    std::vector<std::size_t> via(head_.size());
    std::vector<std::size_t> queue;
    while (flow < limit) {
      std::fill(via.begin(), via.end(), npos);
      via[s] = npos - 1;
      queue.assign(1, s);
      for (std::size_t h = 0; h < queue.size() && via[t] == npos; ++h) {
        const std::size_t u = queue[h];
        for (std::size_t a = head_[u]; a != npos; a = next_[a])
          if (cap_[a] > 0 && via[to_[a]] == npos) {
            via[to_[a]] = a;
            queue.push_back(to_[a]);
          }
      }
      if (via[t] == npos) break;
      for (std::size_t v = t; v != s; v = to_[via[v] ^ 1]) {
        --cap_[via[v]];
        ++cap_[via[v] ^ 1];
      }
      ++flow;
    }
    return flow;
  }

  std::vector<bool> reachable(std::size_t s) const {
    std::vector<bool> seen(head_.size(), false);
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t a = head_[u]; a != npos; a = next_[a])
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = true;
          stack.push_back(to_[a]);
        }
    }
    return seen;
  }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  void push(std::size_t u, std::size_t v, int cap) {
    to_.push_back(v);
    cap_.push_back(cap);
    next_.push_back(head_[u]);
    head_[u] = to_.size() - 1;
  }

  std::vector<std::size_t> head_, next_, to_;
  std::vector<int> cap_;
};

}  // namespace

EdgeCut edge_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  EdgeCut best;
  if (n <= 1) return best;
  if (!is_connected(g)) return best;
  best.value = std::numeric_limits<std::size_t>::max();
  for (Vertex t = 1; t < n; ++t) {
    UnitFlow f(n);
    for (auto [u, v] : g.edges()) f.add_arc(u, v, 1, 1);
    const std::size_t val = f.run(0, t, best.value);
    if (val < best.value) {
      best.value = val;
      const auto side = f.reachable(0);
      best.cut.clear();
      for (auto [u, v] : g.edges())
        if (side[u] != side[v]) best.cut.emplace_back(u, v);
    }
  }
  return best;
}

std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, VertexSet* cut, std::size_t limit) {
  const std::size_t n = g.order();
  // v_in = 2v, v_out = 2v + 1.
  UnitFlow f(2 * n);
  const int inf = static_cast<int>(n);
  for (Vertex v = 0; v < n; ++v) f.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? inf : 1);
  for (auto [u, v] : g.edges()) {
    f.add_arc(2 * u + 1, 2 * v, inf);
    f.add_arc(2 * v + 1, 2 * u, inf);
  }
  const std::size_t val = f.run(2 * s + 1, 2 * t, limit);
  if (cut) {
    *cut = VertexSet(n);
    const auto side = f.reachable(2 * s + 1);
    for (Vertex v = 0; v < n; ++v)
      if (side[2 * v] && !side[2 * v + 1]) cut->insert(v);
  }
  return val;
}

namespace {

std::vector<Edge> non_adjacent_pairs(const Graph& g) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) pairs.emplace_back(u, v);
  return pairs;
}

VertexCut finish_complete(const Graph& g) {
  VertexCut r;
  r.value = g.order() == 0 ? 0 : g.order() - 1;
  r.cut = VertexSet(g.order());
  r.complete = true;
  return r;
}

VertexCut cut_for_pair(const Graph& g, Edge p, std::size_t value) {
  VertexCut r;
  r.value = value;
  local_vertex_connectivity(g, p.first, p.second, &r.cut);
  return r;
}

}  // namespace

VertexCut vertex_connectivity_serial(const Graph& g) {
  const auto pairs = non_adjacent_pairs(g);
  if (pairs.empty()) return finish_complete(g);
  if (!is_connected(g)) return VertexCut{0, VertexSet(g.order()), false};
  std::size_t best = g.order();
  std::size_t best_pair = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::size_t val = local_vertex_connectivity(g, pairs[i].first, pairs[i].second, nullptr, best);
    if (val < best) {
      best = val;
      best_pair = i;
    }
  }
  return cut_for_pair(g, pairs[best_pair], best);
}

VertexCut vertex_connectivity(const Graph& g, unsigned threads) {
  const auto pairs = non_adjacent_pairs(g);
  if (pairs.empty()) return finish_complete(g);
  if (!is_connected(g)) return VertexCut{0, VertexSet(g.order()), false};
  std::vector<std::size_t> value(pairs.size());
  const auto count = static_cast<long long>(pairs.size());
#ifdef _OPENMP
  const int nt = threads ? static_cast<int>(threads) : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(nt)
#endif
  for (long long i = 0; i < count; ++i) {
    const auto& p = pairs[static_cast<std::size_t>(i)];
    value[static_cast<std::size_t>(i)] = local_vertex_connectivity(g, p.first, p.second);
  }
  (void)threads;
  const auto it = std::min_element(value.begin(), value.end());
  return cut_for_pair(g, pairs[static_cast<std::size_t>(it - value.begin())], *it);
}

ConnectivityReport connectivity(const Graph& g, unsigned threads) {
  return ConnectivityReport{edge_connectivity(g), vertex_connectivity(g, threads)};
}

std::vector<VertexSet> disconnecting_sets_of_size(const Graph& g, std::size_t size) {
  std::vector<VertexSet> out;
  const std::size_t n = g.order();
  if (size + 2 > n) return out;
  std::vector<Vertex> pick(size);
  for (std::size_t i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    VertexSet s(n, std::span<const Vertex>(pick));
    if (count_components(g, s) >= 2) out.push_back(std::move(s));
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  bits::for_each(s.words(), [&](Vertex v) { ok = ok && !bits::intersects(g.row(v), s.words()); });
  return ok;
}

namespace {

class MisSearch {
 public:
  MisSearch(const Graph& g, bool enumerate) : g_(g), w_(g.words_per_row()), enumerate_(enumerate) {}

  void run(std::size_t target) {
    target_ = target;
    std::vector<Word> cand(w_, 0);
    for (Vertex v = 0; v < g_.order(); ++v) bits::set(cand, v);
    std::vector<Word> chosen(w_, 0);
    recurse(cand, chosen, 0);
  }

  std::size_t best = 0;
  std::vector<Word> best_set;
  std::vector<VertexSet> found;

 private:
  // Greedy clique cover of the candidate set; an upper bound on its independence number.
  std::size_t clique_cover(std::vector<Word> rest) const {
    std::size_t cliques = 0;
    std::vector<Word> grow(w_);
    for (std::size_t v = bits::find_first(rest); v != bits::npos; v = bits::find_first(rest)) {
      ++cliques;
      bits::reset(rest, v);
      for (std::size_t i = 0; i < w_; ++i) grow[i] = rest[i] & g_.row(v)[i];
      for (std::size_t u = bits::find_first(grow); u != bits::npos; u = bits::find_first(grow)) {
        bits::reset(rest, u);
        for (std::size_t i = 0; i < w_; ++i) grow[i] &= g_.row(u)[i];
        bits::reset(grow, u);
      }
    }
    return cliques;
  }

  void record(const std::vector<Word>& chosen, std::size_t size) {
    if (enumerate_) {
      if (size == target_) found.push_back(VertexSet::from_words(g_.order(), chosen));
      return;
    }
    if (size > best) {
      best = size;
      best_set = chosen;
    }
  }

  void recurse(const std::vector<Word>& cand, std::vector<Word>& chosen, std::size_t size) {
    const std::size_t left = bits::count(cand);
    const std::size_t need = enumerate_ ? target_ : best + 1;
    if (size + left < need) return;
    if (left == 0) {
      record(chosen, size);
      return;
    }
    if (size + clique_cover(cand) < need) return;

    std::size_t branch = bits::npos, deg = 0;
    bits::for_each(cand, [&](Vertex v) {
      const std::size_t d = bits::count_and(g_.row(v), cand);
      if (branch == bits::npos || d > deg) {
        branch = v;
        deg = d;
      }
    });
    if (deg == 0) {
      std::vector<Word> all = chosen;
      for (std::size_t i = 0; i < w_; ++i) all[i] |= cand[i];
      record(all, size + left);
      return;
    }
    std::vector<Word> next(w_);
    for (std::size_t i = 0; i < w_; ++i) next[i] = cand[i] & ~g_.row(branch)[i];
    bits::reset(next, branch);
    bits::set(chosen, branch);
    recurse(next, chosen, size + 1);
    bits::reset(chosen, branch);

    next = cand;
    bits::reset(next, branch);
    recurse(next, chosen, size);
  }

  const Graph& g_;
  std::size_t w_;
  bool enumerate_;
  std::size_t target_ = 0;
};

}  // namespace

IndependenceResult max_independent_set(const Graph& g, bool enumerate_all) {
  IndependenceResult r;
  MisSearch first(g, false);
  first.best_set.assign(g.words_per_row(), 0);
  first.run(0);
  r.alpha = first.best;
  r.witness = VertexSet::from_words(g.order(), first.best_set);
  if (enumerate_all) {
    MisSearch all(g, true);
    all.run(r.alpha);
    std::sort(all.found.begin(), all.found.end(), LexLess{});
    r.all_maximum = std::move(all.found);
  }
  return r;
}

}  // namespace tough
