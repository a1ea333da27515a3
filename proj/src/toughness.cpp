#include "tough/toughness.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

#include "tough/connectivity.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tough {

Rational toughness_of_set(const Graph& g, const VertexSet& s) {
  const std::size_t c = count_components(g, s);
  if (c < 2) throw ToughnessError("set of size " + std::to_string(s.size()) + " leaves " + std::to_string(c) +
                                  " component(s); not a disconnecting set");
  return Rational(static_cast<std::int64_t>(s.size()), static_cast<std::int64_t>(c));
}

namespace {

constexpr std::uint64_t kFlushEvery = 256;

// Best value seen so far. Reads are lock-free; improvements take the lock so the
// callback observes a non-increasing sequence.
class Incumbent {
 public:
  Incumbent(Rational start, const std::function<void(const Rational&)>* cb) : best_(start), cb_(cb) {
    packed_.store(pack(start), std::memory_order_relaxed);
  }

  Rational load() const { return unpack(packed_.load(std::memory_order_relaxed)); }

  void offer(const Rational& r) {
    if (r >= load()) return;
    std::lock_guard lock(mu_);
    if (r < best_) {
      best_ = r;
      packed_.store(pack(r), std::memory_order_relaxed);
      if (cb_ && *cb_) (*cb_)(r);
    }
  }

 private:
  static std::uint64_t pack(const Rational& r) {
    return (static_cast<std::uint64_t>(r.num()) << 32) | static_cast<std::uint64_t>(r.den());
  }
  static Rational unpack(std::uint64_t p) {
    return Rational(static_cast<std::int64_t>(p >> 32), static_cast<std::int64_t>(p & 0xffffffffULL));
  }

  std::atomic<std::uint64_t> packed_;
  std::mutex mu_;
  Rational best_;
  const std::function<void(const Rational&)>* cb_;
};

// Optimal candidates seen by one worker: all sets at the worker's best ratio, or
// only the lexicographically smallest one when minimizers are not requested.
struct Collected {
  std::optional<Rational> ratio;
  std::vector<VertexSet> sets;

  void add(const Rational& r, VertexSet s, bool keep_all) {
    if (!ratio || r < *ratio) {
      ratio = r;
      sets.clear();
      sets.push_back(std::move(s));
    } else if (r == *ratio) {
      if (keep_all) sets.push_back(std::move(s));
      else if (lex_less(s, sets.front())) sets.front() = std::move(s);
    }
  }
};

struct Shared {
  const Graph& g;
  Incumbent& incumbent;
  std::uint64_t budget;
  bool keep_all;
  std::atomic<std::uint64_t> work{0};
  std::atomic<bool> aborted{false};
};

class SeedSearch {
 public:
  SeedSearch(Shared& sh, std::size_t classes)
      : sh_(sh),
        g_(sh.g),
        n_(sh.g.order()),
        w_(sh.g.words_per_row()),
        c_(classes),
        flush_(std::max<std::uint64_t>(1, std::min(kFlushEvery, sh.budget))),
        frame_(w_ * (2 * classes + 1)),
        stack_((n_ + 2) * frame_),
        low_(classes * w_),
        once_(w_),
        two_(w_),
        front_(w_),
        reach_(w_),
        grow_(w_),
        next_(w_) {}

  void run(const std::vector<Vertex>& seeds, Collected& out) {
    out_ = &out;
    std::fill(stack_.begin(), stack_.begin() + static_cast<std::ptrdiff_t>(frame_), 0);
    std::fill(low_.begin(), low_.end(), 0);
    Word* f = stack_.data();
    for (std::size_t i = 0; i < c_; ++i) {
      bits::set(cls(f, i), seeds[i]);
      auto nb = g_.row(seeds[i]);
      std::copy(nb.begin(), nb.end(), nbr(f, i).begin());
      for (Vertex v = 0; v < seeds[i]; ++v) bits::set(std::span<Word>(low_.data() + i * w_, w_), v);
    }
    auto u = und(f);
    for (Vertex v = seeds[0] + 1; v < n_; ++v) bits::set(u, v);
    for (Vertex s : seeds) bits::reset(u, s);
    recurse(0, c_);
  }

  std::uint64_t pending = 0;

 private:
  std::span<Word> cls(Word* f, std::size_t i) const { return {f + i * w_, w_}; }
  std::span<Word> nbr(Word* f, std::size_t i) const { return {f + (c_ + i) * w_, w_}; }
  std::span<Word> und(Word* f) const { return {f + 2 * c_ * w_, w_}; }

  bool tick() {
    if (++pending >= flush_) {
      const std::uint64_t total = sh_.work.fetch_add(pending, std::memory_order_relaxed) + pending;
      pending = 0;
      if (total > sh_.budget) sh_.aborted.store(true, std::memory_order_relaxed);
    }
    return !sh_.aborted.load(std::memory_order_relaxed);
  }

  void recurse(std::size_t depth, std::size_t colored) {
    if (!tick()) return;
    Word* f = stack_.data() + depth * frame_;
    auto u = und(f);

    // Undecided vertices touching two classes, or touching one class below its seed,
    // can only go to S.
    std::fill(once_.begin(), once_.end(), 0);
    std::fill(two_.begin(), two_.end(), 0);
    for (std::size_t i = 0; i < c_; ++i) {
      auto ni = nbr(f, i);
      const Word* lo = low_.data() + i * w_;
      for (std::size_t k = 0; k < w_; ++k) {
        two_[k] |= (once_[k] & ni[k]) | (ni[k] & lo[k]);
        once_[k] |= ni[k];
      }
    }
    bool frontier = false;
    for (std::size_t k = 0; k < w_; ++k) {
      u[k] &= ~two_[k];
      front_[k] = u[k] & once_[k];
      frontier = frontier || front_[k];
    }

    if (!frontier) {
      leaf(f, colored);
      return;
    }

    // Upper bound on the final |R|: colored plus undecided vertices reachable from the frontier.
    reach_ = front_;
    grow_ = front_;
    while (true) {
      std::fill(next_.begin(), next_.end(), 0);
      bits::for_each(std::span<const Word>(grow_), [&](Vertex v) {
        auto r = g_.row(v);
        for (std::size_t k = 0; k < w_; ++k) next_[k] |= r[k];
      });
      bool more = false;
      for (std::size_t k = 0; k < w_; ++k) {
        next_[k] &= u[k] & ~reach_[k];
        reach_[k] |= next_[k];
        more = more || next_[k];
      }
      if (!more) break;
      grow_.swap(next_);
    }
    const std::size_t max_r = colored + bits::count(reach_);
    if (worse(n_ - max_r)) return;

    const Vertex v = bits::find_first(front_);
    std::size_t j = 0;
    while (!bits::test(nbr(f, j), v)) ++j;

    Word* child = f + frame_;
    std::copy(f, f + frame_, child);
    bits::set(cls(child, j), v);
    {
      auto nj = nbr(child, j);
      auto r = g_.row(v);
      for (std::size_t k = 0; k < w_; ++k) nj[k] |= r[k];
    }
    bits::reset(und(child), v);
    recurse(depth + 1, colored + 1);
    if (sh_.aborted.load(std::memory_order_relaxed)) return;

    std::copy(f, f + frame_, child);
    bits::reset(und(child), v);
    recurse(depth + 1, colored);
  }

  // True when a set of `s_size` vertices over c_ components is strictly worse than the incumbent.
  bool worse(std::size_t s_size) const {
    const Rational best = sh_.incumbent.load();
    return static_cast<__int128>(s_size) * best.den() > static_cast<__int128>(best.num()) * c_;
  }

  void leaf(Word* f, std::size_t colored) {
    const std::size_t s_size = n_ - colored;
    if (worse(s_size)) return;
    VertexSet s = VertexSet::full(n_);
    for (std::size_t i = 0; i < c_; ++i) {
      auto ci = cls(f, i);
      auto sw = s.words();
      for (std::size_t k = 0; k < w_; ++k) sw[k] &= ~ci[k];
    }
    const Rational r(static_cast<std::int64_t>(s_size), static_cast<std::int64_t>(c_));
    sh_.incumbent.offer(r);
    out_->add(r, std::move(s), sh_.keep_all);
  }

  Shared& sh_;
  const Graph& g_;
  std::size_t n_, w_, c_;
  std::uint64_t flush_;  // small budgets are checked node by node
  std::size_t frame_;
  std::vector<Word> stack_, low_, once_, two_, front_, reach_, grow_, next_;
  Collected* out_ = nullptr;
};

// Independent c-sets in increasing order with smallest member at most `first_limit`.
std::vector<std::vector<Vertex>> seed_sets(const Graph& g, std::size_t c, std::size_t first_limit) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur;
  const std::size_t n = g.order(), w = g.words_per_row();
  std::vector<std::vector<Word>> allowed(c + 1, std::vector<Word>(w, 0));
  for (Vertex v = 0; v < n; ++v) bits::set(allowed[0], v);
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == c) {
      out.push_back(cur);
      return;
    }
    const auto& av = allowed[depth];
    for (std::size_t v = bits::find_first(av); v != bits::npos; v = bits::find_next(av, v + 1)) {
      if (depth == 0 && v > first_limit) break;
      auto& nx = allowed[depth + 1];
      const auto row = g.row(v);
      for (std::size_t k = 0; k < w; ++k) nx[k] = av[k] & ~row[k];
      // Later seeds are larger than v.
      for (std::size_t u = 0; u <= v; ++u) bits::reset(nx, u);
      if (bits::count(nx) + depth + 1 < c) continue;
      cur.push_back(v);
      self(self, depth + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

ToughnessCertificate solve(const Graph& g, const ToughnessOptions& opts, bool parallel) {
  const std::size_t n = g.order();
  if (n == 0) throw ToughnessError("toughness of the empty graph is undefined");

  ToughnessCertificate cert;
  const VertexSet none(n);
  const std::size_t base_components = count_components(g, none);
  if (base_components >= 2) {
    cert.value = Rational(0);
    cert.witness = none;
    cert.components = base_components;
    cert.exhaustive = true;
    if (opts.want_minimizers) cert.minimizers = std::vector<VertexSet>{none};
    return cert;
  }

  const VertexCut kappa = parallel ? vertex_connectivity(g, opts.threads) : vertex_connectivity_serial(g);
  if (kappa.complete) throw ToughnessError("complete graph has no disconnecting set");
  const IndependenceResult mis = max_independent_set(g);

  // Starting incumbent from three explicit disconnecting sets.
  const std::size_t c_lo = std::max<std::size_t>(opts.min_components, 2);
  const std::size_t c_hi = opts.max_components ? std::min(opts.max_components, mis.alpha) : mis.alpha;
  if (c_lo > c_hi) throw ToughnessError("component range is empty for this graph");

  Collected seeded;
  auto consider = [&](const VertexSet& s) {
    const std::size_t c = count_components(g, s);
    if (c >= c_lo && c <= c_hi) seeded.add(Rational(static_cast<std::int64_t>(s.size()), static_cast<std::int64_t>(c)), s, true);
  };
  consider(kappa.cut);
  consider(mis.witness.complement());
  for (Vertex v = 0; v < n; ++v) consider(g.neighbors(v));

  // Without a starting set the incumbent is n/1, above every ratio in range.
  const Rational start = seeded.ratio ? *seeded.ratio : Rational(static_cast<std::int64_t>(n));
  Incumbent incumbent(start, &opts.on_improve);
  if (opts.on_improve) opts.on_improve(start);
  Shared shared{g, incumbent, opts.budget, opts.want_minimizers};

  int workers = 1;
#ifdef _OPENMP
  if (parallel) workers = opts.threads ? static_cast<int>(opts.threads) : omp_get_max_threads();
#endif
  std::vector<Collected> found(static_cast<std::size_t>(workers));

  for (std::size_t c = c_lo; c <= c_hi && !shared.aborted.load(); ++c) {
    const Rational best = incumbent.load();
    // Every disconnecting set has at least kappa vertices.
    if (static_cast<__int128>(kappa.value) * best.den() > static_cast<__int128>(best.num()) * c) continue;
    // Vertices below the first seed all belong to S.
    const auto limit = static_cast<std::size_t>((static_cast<__int128>(best.num()) * c) / best.den());
    const auto jobs = seed_sets(g, c, limit);
    const auto count = static_cast<long long>(jobs.size());
    if (parallel && workers > 1) {
#ifdef _OPENMP
#pragma omp parallel num_threads(workers)
      {
        SeedSearch search(shared, c);
        auto& mine = found[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 1)
        for (long long i = 0; i < count; ++i) {
          if (shared.aborted.load(std::memory_order_relaxed)) continue;
          search.run(jobs[static_cast<std::size_t>(i)], mine);
        }
        shared.work.fetch_add(search.pending);
      }
#endif
    } else {
      SeedSearch search(shared, c);
      for (const auto& seeds : jobs) {
        if (shared.aborted.load(std::memory_order_relaxed)) break;
        search.run(seeds, found[0]);
      }
      shared.work.fetch_add(search.pending);
    }
  }

  const Rational best = incumbent.load();
  std::vector<VertexSet> optimal;
  auto harvest = [&](Collected& col) {
    if (col.ratio && *col.ratio == best)
      for (auto& s : col.sets) optimal.push_back(std::move(s));
  };
  harvest(seeded);
  for (auto& col : found) harvest(col);
  std::sort(optimal.begin(), optimal.end(), LexLess{});
  optimal.erase(std::unique(optimal.begin(), optimal.end()), optimal.end());

  if (optimal.empty()) throw ToughnessError("no disconnecting set with a component count in range");
  cert.value = best;
  cert.witness = optimal.front();
  cert.components = count_components(g, cert.witness);
  cert.exhaustive = !shared.aborted.load();
  cert.work = shared.work.load();
  if (opts.want_minimizers && cert.exhaustive) cert.minimizers = std::move(optimal);
  return cert;
}

}  // namespace

ToughnessCertificate toughness_exact(const Graph& g, const ToughnessOptions& opts) { return solve(g, opts, true); }

ToughnessCertificate toughness_exact_serial(const Graph& g, const ToughnessOptions& opts) {
  return solve(g, opts, false);
}

std::string to_string(MinimizerKind k) {
  switch (k) {
    case MinimizerKind::kNeighborhood: return "neighborhood";
    case MinimizerKind::kIndependentComplement: return "mis-complement";
    case MinimizerKind::kBoth: return "neighborhood+mis-complement";
    case MinimizerKind::kOther: return "other";
  }
  return "other";
}

MinimizerClassification classify_minimizers(const Graph& g, const ToughnessCertificate& cert) {
  if (!cert.exhaustive || !cert.minimizers) throw ToughnessError("classification needs an exhaustive certificate with minimizers");
  const std::size_t n = g.order();
  const IndependenceResult mis = max_independent_set(g, true);
  std::vector<VertexSet> neighborhoods;
  for (Vertex v = 0; v < n; ++v) {
    VertexSet nb = g.neighbors(v);
    if (count_components(g, nb) >= 2) neighborhoods.push_back(std::move(nb));
  }
  MinimizerClassification out;
  out.total_neighborhoods_disconnecting = neighborhoods.size();
  out.total_maximum_independent_sets = mis.all_maximum->size();
  for (const auto& s : *cert.minimizers) {
    const bool is_nb = std::find(neighborhoods.begin(), neighborhoods.end(), s) != neighborhoods.end();
    const VertexSet rest = s.complement();
    const bool is_mis = rest.size() == mis.alpha && is_independent(g, rest);
    MinimizerKind k = MinimizerKind::kOther;
    if (is_nb && is_mis) k = MinimizerKind::kBoth;
    else if (is_nb) k = MinimizerKind::kNeighborhood;
    else if (is_mis) k = MinimizerKind::kIndependentComplement;
    out.kinds.push_back(k);
    out.neighborhoods += is_nb;
    out.independent_complements += is_mis;
    out.other += (k == MinimizerKind::kOther);
  }
  return out;
}

}  // namespace tough
