#include "tough/report_json.hpp"

#include <sstream>

namespace tough {

namespace {

Json vertices(const VertexSet& s) { return Json(s.to_vector()); }

}  // namespace

Json spectrum_json(const Graph& g, const Spectrum& sp) {
  Json j;
  j["n"] = g.order();
  const auto k = regularity(g);
  j["k"] = k ? Json(*k) : Json(nullptr);
  j["eigenvalues"] = sp.eigenvalues;
  Json grouped = Json::array();
  for (const auto& e : sp.grouped) {
    Json row{{"value", e.value}, {"multiplicity", e.multiplicity}};
    if (e.integer) row["integer"] = *e.integer;
    grouped.push_back(row);
  }
  j["grouped"] = grouped;
  if (k && is_connected(g)) {
    const LambdaSummary ls = lambda_summary(sp, *k);
    j["lambda2"] = ls.lambda2;
    j["lambda_min"] = ls.lambda_min;
    j["lambda_abs"] = ls.lambda_abs;
  }
  return j;
}

Json certificate_json(const ToughnessCertificate& cert) {
  Json j;
  j["value"] = cert.value.str();
  j["witness"] = vertices(cert.witness);
  j["components"] = cert.components;
  j["exhaustive"] = cert.exhaustive;
  j["work"] = cert.work;
  if (cert.minimizers) {
    Json m = Json::array();
    for (const auto& s : *cert.minimizers) m.push_back(vertices(s));
    j["minimizers"] = m;
  }
  return j;
}

Json bounds_json(const BoundsReport& b) {
  Json j;
  j["k"] = b.k;
  j["lambda2"] = b.lambda2;
  j["lambda_min"] = b.lambda_min;
  j["lambda_abs"] = b.lambda_abs;
  j["alon_lower"] = b.alon_lower;
  j["brouwer_lower"] = b.brouwer_lower;
  j["liu_chen_threshold"] = b.liu_chen_threshold;
  j["liu_chen_one_tough"] = b.liu_chen_one_tough;
  j["theta"] = b.theta;
  j["thm5_one_tough"] = b.thm5_one_tough;
  j["thm5_extrapolated"] = b.thm5_extrapolated;
  j["kappa_prime"] = b.kappa_prime;
  if (b.thm4_tau_exact) j["thm4_tau"] = b.thm4_tau_exact->str();
  else if (b.thm4_tau) j["thm4_tau"] = *b.thm4_tau;
  else j["thm4_tau"] = nullptr;
  j["thm4_tau_is_supremum"] = b.thm4_tau_is_supremum;
  j["alpha"] = b.alpha;
  j["hoffman_ratio"] = b.hoffman_ratio;
  if (b.hoffman_upper) {
    j["hoffman_upper"] = b.hoffman_upper->value.str();
    j["hoffman_witness"] = vertices(b.hoffman_upper->witness);
  } else {
    j["hoffman_upper"] = nullptr;
  }
  j["neighborhood_upper"] = b.neighborhood_upper ? Json(b.neighborhood_upper->str()) : Json(nullptr);
  return j;
}

Json connectivity_json(const ConnectivityReport& c, const IndependenceResult& mis) {
  Json j;
  j["kappa"] = c.vertex.value;
  j["kappa_cut"] = vertices(c.vertex.cut);
  j["complete"] = c.vertex.complete;
  j["kappa_prime"] = c.edge.value;
  Json edges = Json::array();
  for (const auto& e : c.edge.cut) edges.push_back({e.first, e.second});
  j["kappa_prime_cut"] = edges;
  j["alpha"] = mis.alpha;
  j["alpha_witness"] = vertices(mis.witness);
  return j;
}

Json check_json(const TheoremCheck& c) {
  return Json{{"id", c.id},           {"instance", c.instance},           {"claimed", c.claimed},
              {"computed", c.computed}, {"status", to_string(c.status)}, {"notes", c.notes},
              {"seconds", c.seconds}};
}

Json report_json(const VerificationReport& r) {
  Json j;
  j["profile"] = {{"name", r.profile.name},
                  {"max_n", r.profile.max_n},
                  {"budget", r.profile.budget},
                  {"threads", r.profile.threads}};
  j["seconds"] = r.seconds;
  j["counts"] = {{"pass", r.count(CheckStatus::kPass)},
                 {"fail", r.count(CheckStatus::kFail)},
                 {"skipped", r.count(CheckStatus::kSkipped)}};
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  j["checks"] = checks;
  return j;
}

namespace {

std::string cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    const bool nested = !v.empty() && (v.front().is_array() || v.front().is_object());
    for (const auto& e : v) {
      if (!out.empty()) out += nested ? ";" : " ";
      if (e.is_object()) {
        std::string obj;
        for (const auto& [key, val] : e.items()) obj += (obj.empty() ? "" : " ") + key + "=" + cell(val);
        out += obj;
      } else {
        out += cell(e);
      }
    }
    return out;
  }
  if (v.is_object()) {
    std::string out;
    for (const auto& [key, val] : v.items()) out += (out.empty() ? "" : " ") + key + "=" + cell(val);
    return out;
  }
  return v.dump();
}

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const Json& j) {
  std::vector<Json> rows;
  if (j.is_array()) rows.assign(j.begin(), j.end());
  else rows.push_back(j);
  std::ostringstream os;
  if (rows.empty() || !rows.front().is_object()) return os.str();
  bool first = true;
  for (const auto& [key, _] : rows.front().items()) {
    os << (first ? "" : ",") << quote(key);
    first = false;
  }
  os << "\n";
  for (const auto& row : rows) {
    first = true;
    for (const auto& [key, _] : rows.front().items()) {
      os << (first ? "" : ",") << quote(row.contains(key) ? cell(row[key]) : "");
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace tough
