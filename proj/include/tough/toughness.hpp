#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tough/graph.hpp"
#include "tough/rational.hpp"

namespace tough {

class ToughnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// |S| / c(G - S); throws ToughnessError when S leaves fewer than two components.
Rational toughness_of_set(const Graph& g, const VertexSet& s);

struct ToughnessOptions {
  /// Upper limit on search nodes (each node performs one component-structure update).
  std::uint64_t budget = 1'000'000'000ULL;
  bool want_minimizers = false;
  /// OpenMP worker count; 0 uses the runtime default. Ignored by the serial solver.
  unsigned threads = 0;
  /// Restricts the search to disconnecting sets leaving between `min_components` and
  /// `max_components` components (0 = alpha(G)); the result is then the minimum over
  /// that range only.
  std::size_t min_components = 2;
  std::size_t max_components = 0;
  /// Called whenever the incumbent value strictly improves, under the incumbent lock.
  std::function<void(const Rational&)> on_improve;
};

struct ToughnessCertificate {
  Rational value;
  VertexSet witness;           // lexicographically smallest optimal S (when exhaustive)
  std::size_t components = 0;  // c(G - witness)
  bool exhaustive = false;     // search finished within budget: value is exact
  std::optional<std::vector<VertexSet>> minimizers;  // all optimal S, lexicographically sorted
  std::uint64_t work = 0;      // search nodes spent
};

/// Exact toughness of a connected non-complete graph.
///
/// For every component count c = 2..alpha(G), the search enumerates independent seed
/// sets s_1 < ... < s_c and grows each seed into a connected class whose smallest
/// vertex is that seed, so every disconnecting set with exactly c components is
/// visited once. Subtrees are cut when even the vertices still reachable from the
/// classes cannot bring |S|/c down to the incumbent. Ties are never pruned, which
/// makes the witness and minimizer list independent of the thread schedule.
///
/// Disconnected input yields value 0 with the empty witness. Complete graphs throw.
/// When the budget runs out the certificate carries the best value found and
/// `exhaustive == false`.
ToughnessCertificate toughness_exact(const Graph& g, const ToughnessOptions& opts = {});

/// Single-threaded run of the same search; kept as the reference for the OpenMP path.
ToughnessCertificate toughness_exact_serial(const Graph& g, const ToughnessOptions& opts = {});

enum class MinimizerKind { kNeighborhood, kIndependentComplement, kBoth, kOther };

std::string to_string(MinimizerKind k);

struct MinimizerClassification {
  std::vector<MinimizerKind> kinds;  // parallel to cert.minimizers
  std::size_t neighborhoods = 0;     // count of S equal to some N(v)
  std::size_t independent_complements = 0;  // count of S = V - I, I maximum independent
  std::size_t other = 0;
  std::size_t total_neighborhoods_disconnecting = 0;    // vertices v with N(v) disconnecting
  std::size_t total_maximum_independent_sets = 0;
  bool other_empty() const { return other == 0; }
};

/// Labels each minimizer of an exhaustive certificate with populated minimizers.
MinimizerClassification classify_minimizers(const Graph& g, const ToughnessCertificate& cert);

}  // namespace tough
