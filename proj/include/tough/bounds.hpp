#pragma once

#include <cstddef>
#include <optional>

#include "tough/graph.hpp"
#include "tough/rational.hpp"
#include "tough/spectral.hpp"

namespace tough {

/// Tolerance used when a theorem hypothesis compares an irrational eigenvalue to a threshold.
inline constexpr double kHypothesisTol = 1e-9;

struct HoffmanUpper {
  Rational value;     // k / (-lambda_min) = (n - alpha) / alpha
  VertexSet witness;  // complement of a maximum independent set
  std::size_t components = 0;
};

/// k/(-lambda_min) with its witness when alpha(g) attains the Hoffman ratio bound exactly.
/// The witness's component count is recomputed, not assumed.
std::optional<HoffmanUpper> hoffman_equality_upper(const Graph& g);

struct BoundsReport {
  std::size_t k = 0;
  double lambda2 = 0.0, lambda_min = 0.0, lambda_abs = 0.0;

  double alon_lower = 0.0;     // (k^2/(k*lam + lam^2) - 1)/3, strict
  double brouwer_lower = 0.0;  // k/lam - 2, strict

  double liu_chen_threshold = 0.0;  // k-1+3/(k+1) (even k), k-1+2/(k+1) (odd k)
  bool liu_chen_one_tough = false;

  double theta = 0.0;          // theta(k); 0 when k < 2
  bool thm5_one_tough = false; // lambda2 < theta(k)
  bool thm5_extrapolated = false;  // k = 2: threshold formula used outside k >= 3

  std::size_t kappa_prime = 0;
  /// Largest tau with tau <= kappa'/k and lambda2 < k - tau*k/(k+1) (k >= 3, tau > 0).
  std::optional<double> thm4_tau;
  /// Set when kappa'/k is the binding term (the bound is then an attained rational).
  std::optional<Rational> thm4_tau_exact;
  /// True when the spectral term binds: every tau below it qualifies, so t >= sup still holds.
  bool thm4_tau_is_supremum = false;

  std::size_t alpha = 0;
  double hoffman_ratio = 0.0;
  std::optional<HoffmanUpper> hoffman_upper;
  std::optional<Rational> neighborhood_upper;  // min over v of |N(v)| / c(G - N(v))
};

/// Every spectral toughness bound for a connected k-regular graph (k >= 1). Throws
/// SpectralError for irregular or disconnected input.
BoundsReport bounds(const Graph& g);

/// Liu-Chen threshold on lambda2 for 1-toughness.
double liu_chen_threshold(std::size_t k);

}  // namespace tough
