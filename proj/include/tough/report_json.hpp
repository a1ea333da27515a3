#pragma once

#include <string>

#include <json.hpp>

#include "tough/bounds.hpp"
#include "tough/connectivity.hpp"
#include "tough/paperlab.hpp"
#include "tough/spectral.hpp"
#include "tough/toughness.hpp"

namespace tough {

using Json = nlohmann::ordered_json;

/// {n, k, eigenvalues, grouped: [{value, multiplicity, integer?}], lambda2, lambda_min, lambda_abs}.
/// The lambda fields are present only for connected regular graphs.
Json spectrum_json(const Graph& g, const Spectrum& sp);

/// {value: "p/q", witness, components, exhaustive, work, minimizers?}
Json certificate_json(const ToughnessCertificate& cert);

Json bounds_json(const BoundsReport& b);

/// {kappa, kappa_cut, kappa_prime, kappa_prime_cut, alpha, alpha_witness}
Json connectivity_json(const ConnectivityReport& c, const IndependenceResult& mis);

Json check_json(const TheoremCheck& c);

/// {profile: {...}, seconds, counts, checks: [...]}
Json report_json(const VerificationReport& r);

/// Flattens a JSON value into CSV. An array of objects gives one row per element;
/// a single object gives one row. Nested arrays are joined with spaces and ';'.
std::string to_csv(const Json& j);

}  // namespace tough
