#include "tough/paperlab.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>

#include "tough/bounds.hpp"
#include "tough/connectivity.hpp"
#include "tough/families.hpp"
#include "tough/family_spec.hpp"
#include "tough/spectral.hpp"
#include "tough/toughness.hpp"

namespace tough {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "skipped";
}

Profile profile_named(const std::string& name) {
  Profile p;
  p.name = name;
  if (name == "quick") p.max_n = 16;
  else if (name == "desk") p.max_n = 27;
  else if (name == "full") p.max_n = 64;
  else throw std::invalid_argument("unknown profile \"" + name + "\" (expected quick, desk or full)");
  return p;
}

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.status == s; }));
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kSpectralTol = 1e-7;
constexpr double kGroupTol = 1e-6;

std::string num(double x) {
  char buf[64];
  if (std::abs(x) < 1e-12) x = 0.0;
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

Rational rat(std::size_t p, std::size_t q = 1) {
  return Rational(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q));
}

std::size_t choose2(std::size_t v) { return v < 2 ? 0 : v * (v - 1) / 2; }

std::string set_str(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s.to_vector()) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string gq_complement(const std::string& gq) { return "complement(point-graph(" + gq + "))"; }

std::string lattice_spec(std::size_t v) { return "lattice:v=" + std::to_string(v); }
std::string triangular_spec(std::size_t v) { return "triangular:v=" + std::to_string(v); }
std::string kneser_spec(std::size_t v) { return v == 5 ? "petersen" : "kneser:v=" + std::to_string(v) + ",r=2"; }
std::string gadget_spec(std::size_t k) { return "gadget:k=" + std::to_string(k); }

struct GqCase {
  std::string gq;  // family spec of the quadrangle
  std::size_t s, t;
};

const std::vector<GqCase>& gq_cases() {
  static const std::vector<GqCase> c = {{"gq-grid:s=2", 2, 1}, {"gq-w:q=2", 2, 2}, {"gq24", 2, 4}, {"gq-w:q=3", 3, 3}};
  return c;
}

// Closed-form facts for the strongly regular families.
struct ClosedForm {
  SrgParams params;
  std::vector<std::pair<double, std::size_t>> spectrum;  // (value, multiplicity), descending
  std::size_t alpha = 0;
  Rational toughness;
  bool hoffman_equality = true;
  bool claw_free = false;  // line graphs: toughness is kappa/2
  bool petersen = false;
  std::optional<std::pair<std::size_t, std::size_t>> gq_order;
};

SrgParams complement_params(const SrgParams& p) {
  return {p.n, p.n - p.k - 1, p.n - 2 - 2 * p.k + p.mu, p.n - 2 * p.k + p.lam};
}

std::optional<ClosedForm> closed_form(const std::string& text) {
  const FamilySpec spec = parse_family_spec(text);
  ClosedForm f;
  auto get = [&](const char* key) { return spec.params.at(key); };
  if (auto gq = build_gq(spec)) {
    if (!spec.complemented) return std::nullopt;
    const std::size_t s = gq->s, t = gq->t, n = (s + 1) * (s * t + 1);
    f.params = complement_params({n, s * (t + 1), s - 1, t + 1});
    // t carries s^2(st+1)/(s+t) and -s carries st(s+1)(t+1)/(s+t); the other
    // assignment gives a nonzero trace.
    f.spectrum = {{double(s * s * t), 1},
                  {double(t), s * s * (s * t + 1) / (s + t)},
                  {-double(s), s * t * (s + 1) * (t + 1) / (s + t)}};
    f.gq_order = {s, t};
    f.alpha = s + 1;
    f.toughness = rat(s * t);
    return f;
  }
  if (spec.complemented) return std::nullopt;
  if (spec.name == "lattice") {
    const std::size_t v = get("v");
    f.params = {v * v, 2 * v - 2, v - 2, 2};
    f.spectrum = {{double(2 * v - 2), 1}, {double(v) - 2, 2 * v - 2}, {-2.0, (v - 1) * (v - 1)}};
    f.alpha = v;
    f.toughness = rat(v - 1);
    f.claw_free = true;
  } else if (spec.name == "triangular") {
    const std::size_t v = get("v");
    if (v < 4) return std::nullopt;
    f.params = {choose2(v), 2 * v - 4, v - 2, 4};
    f.spectrum = {{double(2 * v - 4), 1}, {double(v) - 4, v - 1}, {-2.0, v * (v - 3) / 2}};
    f.alpha = v / 2;
    f.toughness = rat(v - 2);
    f.hoffman_equality = v % 2 == 0;
    f.claw_free = true;
  } else if (spec.name == "kneser" || spec.name == "petersen") {
    const std::size_t v = spec.name == "petersen" ? 5 : get("v");
    if (spec.name == "kneser" && get("r") != 2) return std::nullopt;
    if (v < 5) return std::nullopt;
    f.params = {choose2(v), choose2(v - 2), choose2(v - 4), choose2(v - 3)};
    f.spectrum = {{double(choose2(v - 2)), 1}, {1.0, v * (v - 3) / 2}, {3.0 - double(v), v - 1}};
    f.alpha = v - 1;
    f.petersen = v == 5;
    f.toughness = f.petersen ? rat(4, 3) : rat(v - 2, 2);
  } else {
    return std::nullopt;
  }
  std::erase_if(f.spectrum, [](const auto& e) { return e.second == 0; });
  return f;
}

// Facts derived once per instance and shared between checks.
class Lab {
 public:
  explicit Lab(Profile p) : profile_(std::move(p)) {}

  const Profile& profile() const { return profile_; }

  const Graph& graph(const std::string& spec) {
    auto it = graphs_.find(spec);
    if (it == graphs_.end()) it = graphs_.emplace(spec, build_family(spec)).first;
    return it->second;
  }

  bool fits(const std::string& spec) { return graph(spec).order() <= profile_.max_n; }

  // Exact certificate with all minimizers; nullopt when the graph exceeds max_n.
  const std::optional<ToughnessCertificate>& exact(const std::string& spec) {
    auto it = exact_.find(spec);
    if (it == exact_.end()) {
      std::optional<ToughnessCertificate> cert;
      if (fits(spec)) {
        ToughnessOptions opts;
        opts.budget = profile_.budget;
        opts.threads = profile_.threads;
        opts.want_minimizers = true;
        cert = toughness_exact(graph(spec), opts);
      }
      it = exact_.emplace(spec, std::move(cert)).first;
    }
    return it->second;
  }

  const Spectrum& spectrum_of(const std::string& spec) {
    auto it = spectra_.find(spec);
    if (it == spectra_.end()) it = spectra_.emplace(spec, spectrum(graph(spec), kGroupTol)).first;
    return it->second;
  }

  const IndependenceResult& independence(const std::string& spec) {
    auto it = mis_.find(spec);
    if (it == mis_.end()) it = mis_.emplace(spec, max_independent_set(graph(spec), true)).first;
    return it->second;
  }

  struct GqCertificate {
    std::size_t kappa = 0;
    Rational two_components;                 // kappa / 2: the best ratio with exactly two components
    std::optional<ToughnessCertificate> many;  // best ratio with 3..alpha components
    std::optional<Rational> value;           // set when the case analysis is complete
  };

  // Toughness of a GQ complement from the two-case split: c = 2 via kappa, c >= 3 by search.
  const GqCertificate& gq_certificate(const std::string& spec) {
    auto it = gq_.find(spec);
    if (it == gq_.end()) {
      const Graph& g = graph(spec);
      GqCertificate c;
      c.kappa = vertex_connectivity(g, profile_.threads).value;
      c.two_components = rat(c.kappa, 2);
      ToughnessOptions opts;
      opts.budget = profile_.budget;
      opts.threads = profile_.threads;
      opts.min_components = 3;
      c.many = toughness_exact(g, opts);
      if (c.many->exhaustive) c.value = std::min(c.two_components, c.many->value);
      it = gq_.emplace(spec, std::move(c)).first;
    }
    return it->second;
  }

  // Exact toughness when known: from the solver within max_n, or from the GQ case analysis.
  std::optional<Rational> known_value(const std::string& spec) {
    if (const auto& cert = exact(spec); cert && cert->exhaustive) return cert->value;
    const FamilySpec fs = parse_family_spec(spec);
    if (build_gq(fs) && fs.complemented) return gq_certificate(spec).value;
    return std::nullopt;
  }

 private:
  Profile profile_;
  std::map<std::string, Graph> graphs_;
  std::map<std::string, std::optional<ToughnessCertificate>> exact_;
  std::map<std::string, Spectrum> spectra_;
  std::map<std::string, IndependenceResult> mis_;
  std::map<std::string, GqCertificate> gq_;
};

void verdict(TheoremCheck& c, bool ok) { c.status = ok ? CheckStatus::kPass : CheckStatus::kFail; }

void note(TheoremCheck& c, const std::string& text) { c.notes += (c.notes.empty() ? "" : "; ") + text; }

TheoremCheck timed(const std::string& id, const std::string& instance, const std::function<void(TheoremCheck&)>& body) {
  TheoremCheck c;
  c.id = id;
  c.instance = instance;
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.status = CheckStatus::kFail;
    note(c, std::string("error: ") + e.what());
  }
  c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return c;
}

// Skips with a reason when the instance exceeds max_n; returns the certificate otherwise.
const ToughnessCertificate* exact_or_skip(Lab& lab, TheoremCheck& c, const std::string& spec) {
  const auto& cert = lab.exact(spec);
  if (!cert) {
    c.status = CheckStatus::kSkipped;
    c.computed = "-";
    note(c, "n=" + std::to_string(lab.graph(spec).order()) + " exceeds max_n=" + std::to_string(lab.profile().max_n));
    return nullptr;
  }
  if (!cert->exhaustive) {
    c.status = CheckStatus::kSkipped;
    c.computed = "<= " + cert->value.str();
    note(c, "budget exhausted; value is an upper bound");
    return nullptr;
  }
  return &*cert;
}

TheoremCheck exact_value_check(Lab& lab, const std::string& id, const std::string& spec, Rational claimed) {
  return timed(id, spec, [&](TheoremCheck& c) {
    c.claimed = claimed.str();
    const ToughnessCertificate* cert = exact_or_skip(lab, c, spec);
    if (!cert) return;
    c.computed = cert->value.str();
    note(c, "witness " + set_str(cert->witness) + " leaves " + std::to_string(cert->components) + " components");
    verdict(c, cert->value == claimed);
  });
}

// Set equality between all optimal S and the union of the named families of sets.
TheoremCheck minimizer_check(Lab& lab, const std::string& id, const std::string& spec, bool neighborhoods,
                             bool mis_complements) {
  return timed(id, spec, [&](TheoremCheck& c) {
    const Graph& g = lab.graph(spec);
    std::vector<VertexSet> expected;
    std::size_t nb = 0, mc = 0;
    if (neighborhoods) {
      for (Vertex v = 0; v < g.order(); ++v) expected.push_back(g.neighbors(v));
      nb = g.order();
    }
    if (mis_complements) {
      for (const auto& i : *lab.independence(spec).all_maximum) expected.push_back(i.complement());
      mc = lab.independence(spec).all_maximum->size();
    }
    std::sort(expected.begin(), expected.end(), LexLess{});
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    c.claimed = "minimizers = ";
    if (neighborhoods) c.claimed += std::to_string(nb) + " neighborhoods";
    if (neighborhoods && mis_complements) c.claimed += " + ";
    if (mis_complements) c.claimed += std::to_string(mc) + " MIS complements";
    c.claimed += " (" + std::to_string(expected.size()) + " sets)";

    const ToughnessCertificate* cert = exact_or_skip(lab, c, spec);
    if (!cert) return;
    const MinimizerClassification cls = classify_minimizers(g, *cert);
    c.computed = std::to_string(cert->minimizers->size()) + " sets: " + std::to_string(cls.neighborhoods) +
                 " neighborhoods, " + std::to_string(cls.independent_complements) + " MIS complements, " +
                 std::to_string(cls.other) + " other";
    verdict(c, *cert->minimizers == expected);
  });
}

// ---- line graphs and Kneser graphs ----

TheoremCheck lattice_check(Lab& lab, std::size_t v) {
  return exact_value_check(lab, "Thm-L2v", lattice_spec(v), rat(v - 1));
}
TheoremCheck lattice_min_check(Lab& lab, std::size_t v) {
  return minimizer_check(lab, "Thm-L2v-min", lattice_spec(v), true, true);
}
TheoremCheck triangular_check(Lab& lab, std::size_t v) {
  return exact_value_check(lab, "Thm-Tv", triangular_spec(v), rat(v - 2));
}
TheoremCheck triangular_min_check(Lab& lab, std::size_t v) {
  return minimizer_check(lab, "Thm-Tv-min", triangular_spec(v), true, v % 2 == 0);
}

TheoremCheck petersen_check(Lab& lab) { return exact_value_check(lab, "Petersen", "petersen", rat(4, 3)); }

TheoremCheck petersen_gap_check(Lab& lab) {
  return timed("Petersen-Hoffman-gap", "petersen", [&](TheoremCheck& c) {
    c.claimed = "t = 4/3 < k/(-lambda_min) = 3/2";
    const auto h = hoffman_equality_upper(lab.graph("petersen"));
    const auto t = lab.known_value("petersen");
    if (!h || !t) throw std::runtime_error("Hoffman upper bound or exact value unavailable");
    c.computed = "t = " + t->str() + ", upper = " + h->value.str();
    verdict(c, *t == rat(4, 3) && h->value == rat(3, 2));
  });
}

TheoremCheck kneser_check(Lab& lab, std::size_t v) {
  if (v == 5) {
    TheoremCheck c = petersen_check(lab);
    note(c, "requested v=5; the v>=6 statement does not cover it, ran the Petersen case");
    return c;
  }
  return exact_value_check(lab, "Thm-cTv", kneser_spec(v), rat(v - 2, 2));
}
TheoremCheck kneser_min_check(Lab& lab, std::size_t v) {
  return minimizer_check(lab, "Thm-cTv-min", kneser_spec(v), false, true);
}

// ---- generalized quadrangle complements ----

const GqCase& gq_case(const std::string& gq) {
  for (const auto& c : gq_cases())
    if (c.gq == gq) return c;
  // Any other quadrangle family: order read from the structure.
  static thread_local GqCase other;
  const auto q = build_gq(parse_family_spec(gq));
  if (!q) throw SpecError("not a quadrangle family: \"" + gq + "\"");
  other = {gq, q->s, q->t};
  return other;
}

TheoremCheck gq_check(Lab& lab, const GqCase& q) {
  TheoremCheck c = exact_value_check(lab, "Thm-GQ", gq_complement(q.gq), rat(q.s * q.t));
  if (c.status == CheckStatus::kSkipped) note(c, "see Thm-GQ-cert for the case-analysis value");
  return c;
}

TheoremCheck gq_min_check(Lab& lab, const GqCase& q) {
  return minimizer_check(lab, "Thm-GQ-min", gq_complement(q.gq), q.s == 2, true);
}

TheoremCheck gq_upper_check(Lab& lab, const GqCase& q) {
  const std::string spec = gq_complement(q.gq);
  return timed("Thm-GQ-upper", spec, [&](TheoremCheck& c) {
    c.claimed = "k/(-lambda_min) = " + rat(q.s * q.t).str();
    const auto h = hoffman_equality_upper(lab.graph(spec));
    if (!h) {
      c.computed = "no Hoffman equality";
      verdict(c, false);
      return;
    }
    c.computed = h->value.str();
    note(c, "witness " + set_str(h->witness));
    verdict(c, h->value == rat(q.s * q.t));
  });
}

TheoremCheck gq_two_components_check(Lab& lab, const GqCase& q) {
  const std::string spec = gq_complement(q.gq);
  return timed("Thm-GQ-c2", spec, [&](TheoremCheck& c) {
    const std::size_t k = q.s * q.s * q.t;
    c.claimed = "kappa = " + std::to_string(k) + ", kappa/2 >= " + std::to_string(q.s * q.t);
    const auto& cert = lab.gq_certificate(spec);
    c.computed = "kappa = " + std::to_string(cert.kappa) + ", kappa/2 = " + cert.two_components.str();
    verdict(c, cert.kappa == k && cert.two_components >= rat(q.s * q.t));
  });
}

TheoremCheck gq_many_components_check(Lab& lab, const GqCase& q) {
  const std::string spec = gq_complement(q.gq);
  return timed("Thm-GQ-c3", spec, [&](TheoremCheck& c) {
    c.claimed = "min |S|/c over c = 3.." + std::to_string(q.s + 1) + " is " + rat(q.s * q.t).str();
    const auto& cert = lab.gq_certificate(spec);
    if (!cert.many->exhaustive) {
      c.status = CheckStatus::kSkipped;
      c.computed = "<= " + cert.many->value.str();
      note(c, "budget exhausted");
      return;
    }
    c.computed = cert.many->value.str();
    note(c, "witness leaves " + std::to_string(cert.many->components) + " components");
    verdict(c, cert.many->value == rat(q.s * q.t));
  });
}

TheoremCheck gq_cert_check(Lab& lab, const GqCase& q) {
  const std::string spec = gq_complement(q.gq);
  return timed("Thm-GQ-cert", spec, [&](TheoremCheck& c) {
    c.claimed = rat(q.s * q.t).str();
    const auto& cert = lab.gq_certificate(spec);
    if (!cert.value) {
      c.status = CheckStatus::kSkipped;
      c.computed = "-";
      note(c, "search over c >= 3 exhausted the budget");
      return;
    }
    c.computed = cert.value->str();
    note(c, "min(kappa/2 = " + cert.two_components.str() + ", best over c>=3 = " + cert.many->value.str() + ")");
    verdict(c, *cert.value == rat(q.s * q.t));
  });
}

TheoremCheck gq_alpha_check(Lab& lab, const GqCase& q) {
  const std::string spec = gq_complement(q.gq);
  return timed("Thm-GQ-alpha", spec, [&](TheoremCheck& c) {
    const auto gq = build_gq(parse_family_spec(q.gq));
    std::vector<VertexSet> lines = gq_line_sets(*gq);
    std::sort(lines.begin(), lines.end(), LexLess{});
    c.claimed = "alpha = " + std::to_string(q.s + 1) + ", maximum independent sets = the " +
                std::to_string(lines.size()) + " lines";
    const auto& mis = lab.independence(spec);
    c.computed = "alpha = " + std::to_string(mis.alpha) + ", " + std::to_string(mis.all_maximum->size()) +
                 " maximum independent sets";
    verdict(c, mis.alpha == q.s + 1 && *mis.all_maximum == lines);
  });
}

TheoremCheck gq_axioms_check(const std::string& gq_spec) {
  return timed("GQ-axioms", gq_spec, [&](TheoremCheck& c) {
    const auto gq = build_gq(parse_family_spec(gq_spec));
    if (!gq) throw SpecError("not a quadrangle family: \"" + gq_spec + "\"");
    c.claimed = "GQ(" + std::to_string(gq->s) + "," + std::to_string(gq->t) + ") axioms";
    const GqAudit a = audit_gq(*gq);
    c.computed = std::to_string(a.checked_instances) + " axiom instances, " + std::to_string(a.violations.size()) +
                 " violations";
    if (!a.violations.empty()) note(c, a.violations.front());
    verdict(c, a.ok);
  });
}

// ---- tightness of the spectral 1-tough threshold ----

TheoremCheck tightness_spectral_check(Lab& lab, std::size_t k) {
  const std::string spec = gadget_spec(k);
  return timed("Thm-5-tightness", spec, [&](TheoremCheck& c) {
    const double th = theta(k);
    c.claimed = "lambda2 = theta(" + std::to_string(k) + ") = " + num(th);
    const LambdaSummary ls = lambda_summary(lab.spectrum_of(spec), k);
    c.computed = "lambda2 = " + num(ls.lambda2);
    note(c, "|difference| = " + num(std::abs(ls.lambda2 - th)) + ", tolerance 1e-7");
    verdict(c, std::abs(ls.lambda2 - th) <= kSpectralTol);
  });
}

// T is the first k-1 (odd) or k-2 (even) vertices of the gadget.
VertexSet gadget_separator(std::size_t k, std::size_t n) {
  VertexSet t(n);
  for (Vertex v = 0; v < (k % 2 == 1 ? k - 1 : k - 2); ++v) t.insert(v);
  return t;
}

TheoremCheck tightness_toughness_check(Lab& lab, std::size_t k) {
  const std::string spec = gadget_spec(k);
  return timed("Thm-5-tightness-t", spec, [&](TheoremCheck& c) {
    const Graph& g = lab.graph(spec);
    const Rational bound = k % 2 == 1 ? rat(k - 1, k) : rat(k - 2, k - 1);
    c.claimed = "t <= " + bound.str() + " < 1";
    const Rational via_t = toughness_of_set(g, gadget_separator(k, g.order()));
    c.computed = "S = T gives " + via_t.str();
    bool ok = via_t == bound && regularity(g) == k && is_connected(g);
    if (const auto& cert = lab.exact(spec); cert && cert->exhaustive) {
      c.computed += ", exact t = " + cert->value.str();
      ok = ok && cert->value <= bound;
    } else {
      note(c, cert ? "exact search exhausted the budget" : "exact value not computed (n exceeds max_n)");
    }
    verdict(c, ok);
  });
}

// Vertex classes of a gadget: T, the cocktail-party vertices, the clique vertices.
std::vector<VertexSet> gadget_parts(std::size_t k, std::size_t n) {
  const std::size_t t = k % 2 == 1 ? k - 1 : k - 2, copies = k % 2 == 1 ? k : k - 1, block = k + 1;
  std::vector<VertexSet> parts(3, VertexSet(n));
  for (Vertex v = 0; v < t; ++v) parts[0].insert(v);
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < block; ++i) parts[i < t ? 1 : 2].insert(t + c * block + i);
  return parts;
}

bool in_spectrum(const Spectrum& sp, double x) {
  return std::any_of(sp.eigenvalues.begin(), sp.eigenvalues.end(), [&](double e) { return std::abs(e - x) <= kSpectralTol; });
}

TheoremCheck gadget_quotient_check(Lab& lab, std::size_t k) {
  const std::string spec = gadget_spec(k);
  return timed("Gadget-quotient", spec, [&](TheoremCheck& c) {
    const Graph& g = lab.graph(spec);
    const QuotientMatrix q = check_equitable(g, gadget_parts(k, g.order()));
    std::vector<double> ev = quotient_eigenvalues(q);
    std::sort(ev.begin(), ev.end(), std::greater<>());
    const Spectrum& sp = lab.spectrum_of(spec);
    bool ok = std::all_of(ev.begin(), ev.end(), [&](double x) { return in_spectrum(sp, x); });
    std::string list;
    for (double x : ev) list += (list.empty() ? "" : ", ") + num(x);
    c.computed = "quotient eigenvalues " + list;
    if (k % 2 == 1) {
      c.claimed = "3-part quotient eigenvalues k, -1+sqrt2, -1-sqrt2, all in the spectrum";
      const double want[3] = {double(k), -1.0 + std::sqrt(2.0), -1.0 - std::sqrt(2.0)};
      for (int i = 0; i < 3; ++i) ok = ok && ev.size() == 3 && std::abs(ev[i] - want[i]) <= kSpectralTol;
    } else {
      c.claimed = "3-part quotient eigenvalues lie in the spectrum, largest = k";
      ok = ok && std::abs(ev.front() - double(k)) <= kSpectralTol;
    }
    verdict(c, ok);
  });
}

// T (k-1 independent vertices) joined by perfect matchings to k copies of the cocktail party graph on k-1 vertices.
Graph gadget_residual(std::size_t k) {
  const Graph m = matching_complement(k - 1);
  const std::size_t t = k - 1;
  std::vector<Edge> e;
  for (std::size_t c = 0; c < k; ++c) {
    const std::size_t base = t + c * t;
    for (auto [u, v] : m.edges()) e.emplace_back(base + u, base + v);
    for (Vertex i = 0; i < t; ++i) e.emplace_back(i, base + i);
  }
  return Graph::from_edges(t + k * t, e);
}

TheoremCheck gadget_residual_check(std::size_t k) {
  return timed("Gadget-residual", "k=" + std::to_string(k), [&](TheoremCheck& c) {
    const Graph g = gadget_residual(k);
    std::vector<VertexSet> parts(2, VertexSet(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) parts[v < k - 1 ? 0 : 1].insert(v);
    const QuotientMatrix q = check_equitable(g, parts);
    const double kd = double(k), th = theta(k);
    const double root = (kd - 3.0 + std::sqrt(kd * kd - 2.0 * kd + 9.0)) / 2.0;
    const double quoted = (kd - 3.0 + std::sqrt(kd * kd - 6.0 * kd + 25.0)) / 2.0;
    const double top = spectrum(g).eigenvalues.front();
    const std::vector<double> qev = quotient_eigenvalues(q);
    const double qtop = *std::max_element(qev.begin(), qev.end());
    c.claimed = "lambda1 < theta(k) = " + num(th);
    c.computed = "lambda1 = " + num(top);
    note(c, "quotient [[0,k],[1,k-3]] root (k-3+sqrt(k^2-2k+9))/2 = " + num(root));
    if (std::abs(quoted - root) > kSpectralTol)
      note(c, "closed form (k-3+sqrt(k^2-6k+25))/2 = " + num(quoted) + " does not match the quotient root");
    verdict(c, std::abs(top - root) <= kSpectralTol && std::abs(qtop - root) <= kSpectralTol && top < th);
  });
}

// ---- Extremal graph X_k ----

TheoremCheck xk_spectral_check(std::size_t k) {
  const std::string spec = "xk:k=" + std::to_string(k);
  return timed("Lemma-Xk", spec, [&](TheoremCheck& c) {
    const double th = theta(k);
    c.claimed = "lambda1 = theta(" + std::to_string(k) + ") = " + num(th);
    const double top = spectrum(build_family(spec)).eigenvalues.front();
    c.computed = "lambda1 = " + num(top);
    verdict(c, std::abs(top - th) <= kSpectralTol);
  });
}

bool isomorphic_small(const Graph& a, const Graph& b) {
  const std::size_t n = a.order();
  if (n != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  do {
    bool same = true;
    for (Vertex u = 0; u < n && same; ++u)
      for (Vertex v = u + 1; v < n && same; ++v) same = a.adjacent(u, v) == b.adjacent(p[u], p[v]);
    if (same) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Every member of the extremal class on n vertices other than X_k has larger spectral radius.
TheoremCheck xk_minimality_check(std::size_t k, std::size_t n) {
  return timed("Lemma-Xk-min", "k=" + std::to_string(k) + ",n=" + std::to_string(n), [&](TheoremCheck& c) {
    const Graph xk = extremal_x(k);
    const double th = theta(k);
    const std::size_t need_top = k % 2 == 1 ? 2 : 3;
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::size_t members = 0, at_threshold = 0, isomorphic = 0;
    double runner_up = 1e300;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<std::size_t> deg(n, 0);
      std::vector<Edge> e;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (mask >> i & 1) {
          e.emplace_back(slots[i].first, slots[i].second);
          ++deg[slots[i].first];
          ++deg[slots[i].second];
        }
      const std::size_t top = *std::max_element(deg.begin(), deg.end());
      const std::size_t low = *std::min_element(deg.begin(), deg.end());
      if (top != k || low == k || 2 * e.size() + k < k * n + 1) continue;
      if (static_cast<std::size_t>(std::count(deg.begin(), deg.end(), k)) < need_top) continue;
      const Graph g = Graph::from_edges(n, e);
      if (!is_connected(g)) continue;
      ++members;
      const double r = spectrum(g).eigenvalues.front();
      if (r <= th + 1e-9) {
        ++at_threshold;
        isomorphic += isomorphic_small(g, xk);
      } else {
        runner_up = std::min(runner_up, r);
      }
    }
    c.claimed = "only copies of X_k reach theta(k) = " + num(th);
    c.computed = std::to_string(members) + " labelled members, " + std::to_string(at_threshold) +
                 " at theta(k), " + std::to_string(isomorphic) + " of them isomorphic to X_k";
    if (runner_up < 1e300) note(c, "smallest other lambda1 = " + num(runner_up));
    verdict(c, members > 0 && at_threshold == isomorphic);
  });
}

// ---- positive direction on bipartite graphs ----

TheoremCheck one_tough_check(Lab& lab, const std::string& spec) {
  return timed("Cor-bipartite", spec, [&](TheoremCheck& c) {
    const Graph& g = lab.graph(spec);
    const std::size_t k = *regularity(g);
    c.claimed = "lambda2 < theta(k) and t = 1/1";
    const LambdaSummary ls = lambda_summary(lab.spectrum_of(spec), k);
    const bool hyp = ls.lambda2 < theta(k) - kHypothesisTol;
    c.computed = "lambda2 = " + num(ls.lambda2) + (hyp ? " < " : " >= ") + num(theta(k));
    if (k == 2) note(c, "k = 2 lies outside the k >= 3 statement; threshold extrapolated");
    const ToughnessCertificate* cert = exact_or_skip(lab, c, spec);
    if (!cert) return;
    c.computed += ", t = " + cert->value.str();
    verdict(c, hyp && cert->value == rat(1) && is_bipartite(g));
  });
}

// ---- soundness of every spectral bound ----

TheoremCheck bounds_check(Lab& lab, const std::string& spec) {
  return timed("Bounds", spec, [&](TheoremCheck& c) {
    c.claimed = "t > Alon, t > Brouwer, t >= tau, 1-tough when either threshold holds, t <= Hoffman upper";
    const auto t = lab.known_value(spec);
    if (!t) {
      c.status = CheckStatus::kSkipped;
      c.computed = "-";
      note(c, "exact toughness unavailable under this profile");
      return;
    }
    const BoundsReport b = bounds(lab.graph(spec));
    const double td = t->to_double();
    std::vector<std::string> broken;
    if (!(td - b.alon_lower > kHypothesisTol)) broken.push_back("Alon");
    if (!(td - b.brouwer_lower > kHypothesisTol)) broken.push_back("Brouwer");
    if (b.liu_chen_one_tough && *t < rat(1)) broken.push_back("Liu-Chen");
    if (b.thm5_one_tough && *t < rat(1)) broken.push_back("theta(k)");
    if (b.thm4_tau) {
      if (b.thm4_tau_exact ? *t < *b.thm4_tau_exact : td < *b.thm4_tau - kHypothesisTol) broken.push_back("tau");
    }
    if (b.hoffman_upper && *t > b.hoffman_upper->value) broken.push_back("Hoffman");
    c.computed = "t = " + t->str() + ", Alon " + num(b.alon_lower) + ", Brouwer " + num(b.brouwer_lower);
    c.computed += ", tau " + (b.thm4_tau ? (b.thm4_tau_exact ? b.thm4_tau_exact->str() : num(*b.thm4_tau)) : "-");
    c.computed += std::string(", Liu-Chen ") + (b.liu_chen_one_tough ? "1-tough" : "n/a");
    c.computed += std::string(", theta ") + (b.thm5_one_tough ? "1-tough" : "n/a");
    c.computed += ", Hoffman " + (b.hoffman_upper ? b.hoffman_upper->value.str() : "-");
    if (b.thm4_tau_is_supremum) note(c, "tau is a supremum (spectral hypothesis is strict)");
    if (b.thm5_extrapolated) note(c, "theta(2) extrapolated");
    for (const auto& name : broken) note(c, "violated: " + name);
    verdict(c, broken.empty());
  });
}

// ---- structure of the strongly regular instances ----

TheoremCheck hoffman_equality_check(Lab& lab, const std::string& spec) {
  return timed("Hoffman-equality", spec, [&](TheoremCheck& c) {
    const auto cf = closed_form(spec);
    if (!cf) throw SpecError("no closed form for \"" + spec + "\"");
    const Graph& g = lab.graph(spec);
    const HoffmanBound hb = hoffman_ratio_bound(g);
    const std::size_t alpha = lab.independence(spec).alpha;
    const bool holds = hb.exact && *hb.exact == rat(alpha);
    c.claimed = cf->hoffman_equality ? "alpha meets the ratio bound" : "alpha below the ratio bound";
    c.computed = "alpha = " + std::to_string(alpha) + ", ratio bound = " + (hb.exact ? hb.exact->str() : num(hb.value));
    bool ok = holds == cf->hoffman_equality;
    if (holds) {
      const auto h = hoffman_equality_upper(g);
      ok = ok && h.has_value();
      if (h) {
        c.computed += ", upper " + h->value.str();
        if (const auto t = lab.known_value(spec)) {
          c.computed += ", t = " + t->str();
          // The upper bound is attained everywhere except the Petersen graph.
          ok = ok && (cf->petersen ? *t < h->value : *t == h->value);
        }
      }
    }
    verdict(c, ok);
  });
}

TheoremCheck brouwer_mesner_check(Lab& lab, const std::string& spec) {
  return timed("Brouwer-Mesner", spec, [&](TheoremCheck& c) {
    const Graph& g = lab.graph(spec);
    const auto k = regularity(g);
    if (!k || !srg_check(g)) throw SpecError("not strongly regular: \"" + spec + "\"");
    c.claimed = "kappa = k = " + std::to_string(*k);
    const VertexCut cut = vertex_connectivity(g, lab.profile().threads);
    c.computed = "kappa = " + std::to_string(cut.value);
    bool ok = cut.value == *k;
    if (g.order() <= 16) {
      const auto sets = disconnecting_sets_of_size(g, cut.value);
      std::size_t nbhd = 0;
      for (const auto& s : sets)
        for (Vertex v = 0; v < g.order(); ++v)
          if (g.neighbors(v) == s) {
            ++nbhd;
            break;
          }
      note(c, std::to_string(sets.size()) + " minimum vertex cuts, " + std::to_string(nbhd) + " of them neighborhoods");
      ok = ok && nbhd == sets.size();
    }
    verdict(c, ok);
  });
}

TheoremCheck matthews_sumner_check(Lab& lab, const std::string& spec) {
  return timed("Matthews-Sumner", spec, [&](TheoremCheck& c) {
    const Graph& g = lab.graph(spec);
    const std::size_t kappa = vertex_connectivity(g, lab.profile().threads).value;
    c.claimed = "t = kappa/2 = " + rat(kappa, 2).str();
    const ToughnessCertificate* cert = exact_or_skip(lab, c, spec);
    if (!cert) return;
    c.computed = cert->value.str();
    verdict(c, cert->value == rat(kappa, 2));
  });
}

TheoremCheck alpha_check(Lab& lab, const std::string& spec) {
  return timed("Alpha", spec, [&](TheoremCheck& c) {
    const auto cf = closed_form(spec);
    if (!cf) throw SpecError("no closed form for \"" + spec + "\"");
    c.claimed = "alpha = " + std::to_string(cf->alpha);
    const auto& mis = lab.independence(spec);
    c.computed = "alpha = " + std::to_string(mis.alpha);
    note(c, std::to_string(mis.all_maximum->size()) + " maximum independent sets");
    verdict(c, mis.alpha == cf->alpha && is_independent(lab.graph(spec), mis.witness));
  });
}

TheoremCheck srg_spectrum_check(Lab& lab, const std::string& spec) {
  return timed("SRG-spectrum", spec, [&](TheoremCheck& c) {
    const auto cf = closed_form(spec);
    if (!cf) throw SpecError("no closed form for \"" + spec + "\"");
    auto show = [](const std::vector<std::pair<double, std::size_t>>& s) {
      std::string out;
      for (auto [v, m] : s) out += (out.empty() ? "" : " ") + num(v) + "^" + std::to_string(m);
      return out;
    };
    c.claimed = show(cf->spectrum);
    const Spectrum& sp = lab.spectrum_of(spec);
    std::vector<std::pair<double, std::size_t>> got;
    for (const auto& gr : sp.grouped) got.emplace_back(gr.value, gr.multiplicity);
    c.computed = show(got);
    bool ok = got.size() == cf->spectrum.size();
    for (std::size_t i = 0; ok && i < got.size(); ++i)
      ok = got[i].second == cf->spectrum[i].second && std::abs(got[i].first - cf->spectrum[i].first) <= kGroupTol;
    const auto params = srg_check(lab.graph(spec));
    if (params) {
      note(c, "srg(" + std::to_string(params->n) + "," + std::to_string(params->k) + "," + std::to_string(params->lam) +
                  "," + std::to_string(params->mu) + ")");
    }
    ok = ok && params && *params == cf->params;
    if (cf->gq_order) {
      // The swapped multiplicities fail the trace condition.
      const auto [s, t] = *cf->gq_order;
      const double swapped = double(s * s * t) + double(t) * double(s * t * (s + 1) * (t + 1) / (s + t)) -
                             double(s) * double(s * s * (s * t + 1) / (s + t));
      if (std::abs(swapped) > kGroupTol)
        note(c, "the assignment t^(st(s+1)(t+1)/(s+t)), (-s)^(s^2(st+1)/(s+t)) gives trace " + num(swapped) +
                    " != 0, so the two multiplicities belong the other way round");
    }
    verdict(c, ok);
  });
}

// ---- bipartite graphs with a two-vertex cut ----

TheoremCheck bipartite_cut_check(Lab& lab, std::size_t k) {
  const std::string spec = "bipartite-cut:k=" + std::to_string(k);
  return timed("Bipartite-cut", spec, [&](TheoremCheck& c) {
    const Graph& g = lab.graph(spec);
    c.claimed = "bipartite, " + std::to_string(k) + "-regular, t <= " + rat(2, k).str();
    VertexSet s(g.order());
    s.insert(0);
    s.insert(1);
    const Rational r = toughness_of_set(g, s);
    const auto reg = regularity(g);
    c.computed = std::string(is_bipartite(g) ? "bipartite" : "not bipartite") + ", " +
                 (reg ? std::to_string(*reg) + "-regular" : "irregular") + ", S = {0,1} gives " + r.str();
    verdict(c, is_bipartite(g) && reg == k && is_connected(g) && r == rat(2, k));
  });
}

TheoremCheck bipartite_cut_exact_check(Lab& lab, std::size_t k) {
  const std::string spec = "bipartite-cut:k=" + std::to_string(k);
  return timed("Bipartite-cut-exact", spec, [&](TheoremCheck& c) {
    c.claimed = "t <= " + rat(2, k).str() + " < 1";
    const ToughnessCertificate* cert = exact_or_skip(lab, c, spec);
    if (!cert) return;
    c.computed = cert->value.str();
    verdict(c, cert->value <= rat(2, k) && cert->value < rat(1));
  });
}

// ---- Suite assembly ----

std::vector<std::string> srg_instances() {
  std::vector<std::string> out;
  for (std::size_t v = 2; v <= 6; ++v) out.push_back(lattice_spec(v));
  for (std::size_t v = 4; v <= 8; ++v) out.push_back(triangular_spec(v));
  for (std::size_t v = 5; v <= 8; ++v) out.push_back(kneser_spec(v));
  for (const auto& q : gq_cases()) out.push_back(gq_complement(q.gq));
  return out;
}

std::vector<std::string> bounds_instances() {
  std::vector<std::string> out;
  for (std::size_t v = 2; v <= 5; ++v) out.push_back(lattice_spec(v));
  for (std::size_t v = 4; v <= 7; ++v) out.push_back(triangular_spec(v));
  for (std::size_t v = 5; v <= 7; ++v) out.push_back(kneser_spec(v));
  for (const auto& q : gq_cases()) out.push_back(gq_complement(q.gq));
  for (std::size_t k = 3; k <= 6; ++k) out.push_back(gadget_spec(k));
  for (const char* s : {"hypercube:d=3", "hypercube:d=4", "cycle:n=6", "cycle:n=8"}) out.emplace_back(s);
  for (std::size_t k = 3; k <= 4; ++k) out.push_back("bipartite-cut:k=" + std::to_string(k));
  return out;
}

std::size_t parse_param(const std::string& param, const std::string& key) {
  const std::string prefix = key + "=";
  if (param.rfind(prefix, 0) != 0) throw UnknownCheck("expected parameter " + prefix + "N, got \"" + param + "\"");
  const std::string digits = param.substr(prefix.size());
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); }))
    throw UnknownCheck("parameter " + key + " must be a non-negative integer");
  return static_cast<std::size_t>(std::stoull(digits));
}

// Accepts either the quadrangle spec ("gq24") or its complemented point graph.
std::string gq_param(const std::string& param) {
  const FamilySpec fs = parse_family_spec(param);
  if (!build_gq(fs)) throw UnknownCheck("expected a quadrangle family, got \"" + param + "\"");
  std::string base = fs.name;
  for (const auto& [key, val] : fs.params) base += (base == fs.name ? ":" : ",") + key + "=" + std::to_string(val);
  return base;
}

using Runner = std::function<TheoremCheck(Lab&, const std::string&)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> r = {
      {"Thm-L2v", [](Lab& l, const std::string& p) { return lattice_check(l, parse_param(p, "v")); }},
      {"Thm-L2v-min", [](Lab& l, const std::string& p) { return lattice_min_check(l, parse_param(p, "v")); }},
      {"Thm-Tv", [](Lab& l, const std::string& p) { return triangular_check(l, parse_param(p, "v")); }},
      {"Thm-Tv-min", [](Lab& l, const std::string& p) { return triangular_min_check(l, parse_param(p, "v")); }},
      {"Thm-cTv", [](Lab& l, const std::string& p) { return kneser_check(l, parse_param(p, "v")); }},
      {"Thm-cTv-min", [](Lab& l, const std::string& p) { return kneser_min_check(l, parse_param(p, "v")); }},
      {"Petersen", [](Lab& l, const std::string&) { return petersen_check(l); }},
      {"Petersen-Hoffman-gap", [](Lab& l, const std::string&) { return petersen_gap_check(l); }},
      {"Thm-GQ", [](Lab& l, const std::string& p) { return gq_check(l, gq_case(gq_param(p))); }},
      {"Thm-GQ-min", [](Lab& l, const std::string& p) { return gq_min_check(l, gq_case(gq_param(p))); }},
      {"Thm-GQ-upper", [](Lab& l, const std::string& p) { return gq_upper_check(l, gq_case(gq_param(p))); }},
      {"Thm-GQ-c2", [](Lab& l, const std::string& p) { return gq_two_components_check(l, gq_case(gq_param(p))); }},
      {"Thm-GQ-c3", [](Lab& l, const std::string& p) { return gq_many_components_check(l, gq_case(gq_param(p))); }},
      {"Thm-GQ-cert", [](Lab& l, const std::string& p) { return gq_cert_check(l, gq_case(gq_param(p))); }},
      {"Thm-GQ-alpha", [](Lab& l, const std::string& p) { return gq_alpha_check(l, gq_case(gq_param(p))); }},
      {"GQ-axioms", [](Lab&, const std::string& p) { return gq_axioms_check(gq_param(p)); }},
      {"Thm-5-tightness", [](Lab& l, const std::string& p) { return tightness_spectral_check(l, parse_param(p, "k")); }},
      {"Thm-5-tightness-t", [](Lab& l, const std::string& p) { return tightness_toughness_check(l, parse_param(p, "k")); }},
      {"Gadget-quotient", [](Lab& l, const std::string& p) { return gadget_quotient_check(l, parse_param(p, "k")); }},
      {"Gadget-residual", [](Lab&, const std::string& p) { return gadget_residual_check(parse_param(p, "k")); }},
      {"Lemma-Xk", [](Lab&, const std::string& p) { return xk_spectral_check(parse_param(p, "k")); }},
      {"Lemma-Xk-min",
       [](Lab&, const std::string& p) {
         const auto comma = p.find(',');
         if (comma == std::string::npos) throw UnknownCheck("expected k=N,n=M");
         return xk_minimality_check(parse_param(p.substr(0, comma), "k"), parse_param(p.substr(comma + 1), "n"));
       }},
      {"Cor-bipartite", [](Lab& l, const std::string& p) { return one_tough_check(l, p); }},
      {"Bounds", [](Lab& l, const std::string& p) { return bounds_check(l, p); }},
      {"Hoffman-equality", [](Lab& l, const std::string& p) { return hoffman_equality_check(l, p); }},
      {"Brouwer-Mesner", [](Lab& l, const std::string& p) { return brouwer_mesner_check(l, p); }},
      {"Matthews-Sumner", [](Lab& l, const std::string& p) { return matthews_sumner_check(l, p); }},
      {"Alpha", [](Lab& l, const std::string& p) { return alpha_check(l, p); }},
      {"SRG-spectrum", [](Lab& l, const std::string& p) { return srg_spectrum_check(l, p); }},
      {"Bipartite-cut", [](Lab& l, const std::string& p) { return bipartite_cut_check(l, parse_param(p, "k")); }},
      {"Bipartite-cut-exact",
       [](Lab& l, const std::string& p) { return bipartite_cut_exact_check(l, parse_param(p, "k")); }},
  };
  return r;
}

}  // namespace

std::vector<std::string> check_ids() {
  std::vector<std::string> out;
  for (const auto& [id, _] : runners()) out.push_back(id);
  return out;
}

TheoremCheck check_one(const std::string& id, const std::string& param, const Profile& profile) {
  const auto it = runners().find(id);
  if (it == runners().end()) throw UnknownCheck("unknown check id \"" + id + "\"");
  Lab lab(profile);
  return it->second(lab, param);
}

VerificationReport run_suite(const Profile& profile) {
  const auto t0 = Clock::now();
  Lab lab(profile);
  VerificationReport report;
  report.profile = profile;
  auto& out = report.checks;

  for (std::size_t v = 2; v <= 5; ++v) {
    out.push_back(lattice_check(lab, v));
    out.push_back(lattice_min_check(lab, v));
  }
  for (std::size_t v = 4; v <= 7; ++v) {
    out.push_back(triangular_check(lab, v));
    out.push_back(triangular_min_check(lab, v));
  }
  for (std::size_t v = 6; v <= 7; ++v) {
    out.push_back(kneser_check(lab, v));
    out.push_back(kneser_min_check(lab, v));
  }
  out.push_back(petersen_check(lab));
  out.push_back(petersen_gap_check(lab));

  for (const auto& q : gq_cases()) {
    out.push_back(gq_check(lab, q));
    out.push_back(gq_min_check(lab, q));
    out.push_back(gq_upper_check(lab, q));
    out.push_back(gq_two_components_check(lab, q));
    out.push_back(gq_many_components_check(lab, q));
    out.push_back(gq_cert_check(lab, q));
    out.push_back(gq_alpha_check(lab, q));
  }
  for (const char* gq : {"gq-grid:s=2", "gq-grid:s=3", "gq-w:q=2", "gq-w:q=3", "gq24"}) out.push_back(gq_axioms_check(gq));

  for (std::size_t k = 3; k <= 6; ++k) {
    out.push_back(tightness_spectral_check(lab, k));
    out.push_back(tightness_toughness_check(lab, k));
    out.push_back(gadget_quotient_check(lab, k));
  }
  for (std::size_t k : {3, 5, 7}) out.push_back(gadget_residual_check(k));
  for (std::size_t k = 3; k <= 8; ++k) out.push_back(xk_spectral_check(k));
  for (std::size_t k = 3; k <= 4; ++k)
    for (std::size_t n = k + 1; n <= k + 2; ++n) out.push_back(xk_minimality_check(k, n));

  for (const char* s : {"hypercube:d=3", "hypercube:d=4", "cycle:n=6", "cycle:n=8"}) out.push_back(one_tough_check(lab, s));

  for (const auto& s : bounds_instances()) out.push_back(bounds_check(lab, s));
  for (const auto& s : srg_instances()) {
    out.push_back(hoffman_equality_check(lab, s));
    out.push_back(brouwer_mesner_check(lab, s));
    out.push_back(alpha_check(lab, s));
    out.push_back(srg_spectrum_check(lab, s));
  }
  for (std::size_t v = 2; v <= 5; ++v) out.push_back(matthews_sumner_check(lab, lattice_spec(v)));
  for (std::size_t v = 4; v <= 7; ++v) out.push_back(matthews_sumner_check(lab, triangular_spec(v)));

  for (std::size_t k = 3; k <= 4; ++k) {
    out.push_back(bipartite_cut_check(lab, k));
    out.push_back(bipartite_cut_exact_check(lab, k));
  }

  std::stable_sort(out.begin(), out.end(), [](const TheoremCheck& a, const TheoremCheck& b) {
    return std::tie(a.id, a.instance) < std::tie(b.id, b.instance);
  });
  report.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return report;
}

}  // namespace tough
