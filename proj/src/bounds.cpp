#include "tough/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "tough/connectivity.hpp"

namespace tough {

double liu_chen_threshold(std::size_t k) {
  const double kd = static_cast<double>(k);
  return kd - 1.0 + (k % 2 == 0 ? 3.0 : 2.0) / (kd + 1.0);
}

namespace {

std::optional<HoffmanUpper> hoffman_upper_from(const Graph& g, std::size_t k, const Spectrum& sp,
                                               const IndependenceResult& mis) {
  const HoffmanBound hb = hoffman_ratio_bound(g.order(), k, sp);
  if (!hb.exact || *hb.exact != Rational(static_cast<std::int64_t>(mis.alpha))) return std::nullopt;
  HoffmanUpper h;
  h.witness = mis.witness.complement();
  h.components = count_components(g, h.witness);
  if (h.components != mis.alpha) return std::nullopt;
  h.value = Rational(static_cast<std::int64_t>(h.witness.size()), static_cast<std::int64_t>(h.components));
  return h;
}

}  // namespace

std::optional<HoffmanUpper> hoffman_equality_upper(const Graph& g) {
  const auto k = regularity(g);
  if (!k || !is_connected(g)) return std::nullopt;
  const Spectrum sp = spectrum(g);
  if (sp.eigenvalues.back() >= 0.0) return std::nullopt;
  return hoffman_upper_from(g, *k, sp, max_independent_set(g));
}

BoundsReport bounds(const Graph& g) {
  const auto k = regularity(g);
  if (!k) throw SpectralError("bounds: graph is not regular");
  if (!is_connected(g)) throw SpectralError("bounds: graph is not connected");
  const Spectrum sp = spectrum(g);
  const LambdaSummary ls = lambda_summary(sp, *k);

  BoundsReport b;
  b.k = *k;
  b.lambda2 = ls.lambda2;
  b.lambda_min = ls.lambda_min;
  b.lambda_abs = ls.lambda_abs;
  const double kd = static_cast<double>(*k), lam = ls.lambda_abs;

  b.alon_lower = (kd * kd / (kd * lam + lam * lam) - 1.0) / 3.0;
  b.brouwer_lower = kd / lam - 2.0;

  b.liu_chen_threshold = liu_chen_threshold(*k);
  b.liu_chen_one_tough = ls.lambda2 < b.liu_chen_threshold - kHypothesisTol;

  if (*k >= 2) {
    b.theta = theta(*k);
    b.thm5_one_tough = ls.lambda2 < b.theta - kHypothesisTol;
    b.thm5_extrapolated = (*k == 2);
  }

  b.kappa_prime = edge_connectivity(g).value;
  if (*k >= 3) {
    const Rational edge_term(static_cast<std::int64_t>(b.kappa_prime), static_cast<std::int64_t>(*k));
    const double spectral_term = (kd - ls.lambda2) * (kd + 1.0) / kd;
    if (edge_term.to_double() < spectral_term - kHypothesisTol) {
      b.thm4_tau = edge_term.to_double();
      b.thm4_tau_exact = edge_term;
    } else {
      b.thm4_tau = spectral_term;
      b.thm4_tau_is_supremum = true;
    }
    if (*b.thm4_tau <= 0.0) {
      b.thm4_tau.reset();
      b.thm4_tau_exact.reset();
      b.thm4_tau_is_supremum = false;
    }
  }

  const IndependenceResult mis = max_independent_set(g);
  b.alpha = mis.alpha;
  if (ls.lambda_min < 0.0) {
    b.hoffman_ratio = hoffman_ratio_bound(g.order(), *k, sp).value;
    b.hoffman_upper = hoffman_upper_from(g, *k, sp, mis);
  }

  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexSet nb = g.neighbors(v);
    const std::size_t c = count_components(g, nb);
    if (c < 2) continue;
    const Rational r(static_cast<std::int64_t>(nb.size()), static_cast<std::int64_t>(c));
    if (!b.neighborhood_upper || r < *b.neighborhood_upper) b.neighborhood_upper = r;
  }
  return b;
}

}  // namespace tough
