#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tough/graph.hpp"
#include "tough/rational.hpp"

namespace tough {

class SpectralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EigenGroup {
  double value = 0.0;
  std::size_t multiplicity = 0;
  std::optional<long long> integer;  // set when value is within 1e-6 of an integer
};

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  std::vector<EigenGroup> grouped;  // descending by value
  double group_tol = 1e-6;
};

/// Eigenvalues of a dense symmetric matrix (row-major, dim x dim) by cyclic Jacobi
/// rotations, descending. Converges when every off-diagonal magnitude drops below
/// 1e-10 * dim; throws SpectralError if the sweep cap is hit first.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t dim);

std::vector<EigenGroup> group_eigenvalues(const std::vector<double>& descending, double tol);

Spectrum spectrum(const Graph& g, double group_tol = 1e-6);

struct LambdaSummary {
  double lambda2 = 0.0;
  double lambda_min = 0.0;
  double lambda_abs = 0.0;  // max(|lambda2|, |lambda_min|)
};

/// Requires the largest eigenvalue to equal k (within 1e-8 * max(1,k)).
LambdaSummary lambda_summary(const Spectrum& sp, std::size_t k);

/// Spectral threshold for 1-toughness of k-regular graphs:
/// (k-2+sqrt(k^2+8))/2 for odd k, (k-2+sqrt(k^2+12))/2 for even k. Defined for k >= 2;
/// k = 2 evaluates the even formula outside the range where it was derived.
double theta(std::size_t k);

struct QuotientMatrix {
  std::size_t size = 0;
  std::vector<double> entries;  // row-major
  double at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
};

class NotEquitable : public SpectralError {
 public:
  using SpectralError::SpectralError;
};

/// Quotient matrix of an equitable partition; throws NotEquitable naming the first
/// violating pair of vertices, or when `parts` is not a partition of V.
QuotientMatrix check_equitable(const Graph& g, const std::vector<VertexSet>& parts);

/// Roots of the characteristic polynomial of a 1x1, 2x2 or 3x3 quotient, descending.
std::vector<double> quotient_eigenvalues(const QuotientMatrix& q);

struct SrgParams {
  std::size_t n = 0, k = 0, lam = 0, mu = 0;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Parameters by direct common-neighbour counting, or nullopt when g is not a
/// connected strongly regular graph.
std::optional<SrgParams> srg_check(const Graph& g);

/// {k:1, r:f, s:g} from the standard eigenvalue formulas; throws SpectralError on
/// non-integral multiplicities.
std::vector<EigenGroup> srg_spectrum(const SrgParams& p);

/// Cauchy interlacing: parent_i >= sub_i >= parent_{i+n-m} for all i, within 1e-7.
bool interlacing_holds(const Spectrum& parent, const Spectrum& sub);

struct HoffmanBound {
  double value = 0.0;
  std::optional<Rational> exact;  // when lambda_min is an integer
};

/// n(-lambda_min)/(k - lambda_min) for a connected regular graph.
HoffmanBound hoffman_ratio_bound(const Graph& g);
HoffmanBound hoffman_ratio_bound(std::size_t n, std::size_t k, const Spectrum& sp);

}  // namespace tough
