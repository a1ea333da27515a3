// toughctl: command-line front end for the toughness library.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or input error,
// 3 the exact search ran out of budget (the printed value is an upper bound).

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "tough/bounds.hpp"
#include "tough/connectivity.hpp"
#include "tough/family_spec.hpp"
#include "tough/paperlab.hpp"
#include "tough/report_json.hpp"
#include "tough/spectral.hpp"
#include "tough/toughness.hpp"

namespace {

using namespace tough;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kPartial = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string path;
  std::string spec;
};

Graph load(const Input& in) {
  if (in.path.empty() == in.spec.empty()) throw UsageError("give exactly one of a graph file or --spec");
  if (!in.spec.empty()) return build_family(in.spec);
  if (!std::filesystem::exists(in.path)) throw UsageError("no such file: " + in.path);
  return read_graph_file(in.path);
}

unsigned default_threads() {
  const char* env = std::getenv("TOUGH_THREADS");
  if (!env || !*env) return 0;
  try {
    return static_cast<unsigned>(std::stoul(env));
  } catch (const std::exception&) {
    throw UsageError(std::string("TOUGH_THREADS must be a non-negative integer, got \"") + env + "\"");
  }
}

void emit(const Json& j, const std::string& format) {
  if (format == "csv") std::cout << to_csv(j);
  else std::cout << j.dump(2) << "\n";
}

std::string fmt(double x) {
  char buf[64];
  if (std::abs(x) < 1e-12) x = 0.0;
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string set_text(const VertexSet& s) {
  std::string out;
  for (Vertex v : s.to_vector()) out += (out.empty() ? "" : " ") + std::to_string(v);
  return "{" + out + "}";
}

void print_bounds_text(const BoundsReport& b) {
  std::cout << "k                  " << b.k << "\n"
            << "lambda2            " << fmt(b.lambda2) << "\n"
            << "lambda_min         " << fmt(b.lambda_min) << "\n"
            << "alon_lower         " << fmt(b.alon_lower) << "\n"
            << "brouwer_lower      " << fmt(b.brouwer_lower) << "\n"
            << "liu_chen_one_tough " << (b.liu_chen_one_tough ? "true" : "false") << "  (threshold "
            << fmt(b.liu_chen_threshold) << ")\n"
            << "thm5_one_tough     " << (b.thm5_one_tough ? "true" : "false") << "  (theta " << fmt(b.theta)
            << (b.thm5_extrapolated ? ", k=2 extrapolated" : "") << ")\n"
            << "kappa_prime        " << b.kappa_prime << "\n";
  std::cout << "thm4_tau           ";
  if (b.thm4_tau_exact) std::cout << b.thm4_tau_exact->str() << "\n";
  else if (b.thm4_tau) std::cout << fmt(*b.thm4_tau) << " (supremum)\n";
  else std::cout << "-\n";
  std::cout << "alpha              " << b.alpha << "\n"
            << "hoffman_upper      " << (b.hoffman_upper ? b.hoffman_upper->value.str() : "-") << "\n"
            << "neighborhood_upper " << (b.neighborhood_upper ? b.neighborhood_upper->str() : "-") << "\n";
}

int run_build(const std::string& spec, const std::string& out) {
  const Graph g = build_family(spec);
  if (out.empty() || out == "-") write_graph(std::cout, g);
  else write_graph_file(out, g);
  return kOk;
}

int run_info(const std::string& spec, const std::string& format) {
  const Graph g = build_family(spec);
  const auto k = regularity(g);
  const auto srg = srg_check(g);
  Json j;
  j["spec"] = spec;
  j["n"] = g.order();
  j["m"] = g.size();
  j["regular"] = k ? Json(*k) : Json(nullptr);
  j["connected"] = is_connected(g);
  j["bipartite"] = is_bipartite(g);
  j["srg"] = srg ? Json{{"n", srg->n}, {"k", srg->k}, {"lambda", srg->lam}, {"mu", srg->mu}} : Json(nullptr);
  if (auto gq = build_gq(parse_family_spec(spec))) {
    j["gq"] = {{"s", gq->s}, {"t", gq->t}, {"points", gq->num_points}, {"lines", gq->lines.size()}};
  }
  if (format != "text") {
    emit(j, format);
    return kOk;
  }
  std::cout << spec << ": n=" << g.order() << " m=" << g.size();
  if (k) std::cout << " " << *k << "-regular";
  std::cout << (is_connected(g) ? " connected" : " disconnected") << (is_bipartite(g) ? " bipartite" : "") << "\n";
  if (srg) std::cout << "srg(" << srg->n << "," << srg->k << "," << srg->lam << "," << srg->mu << ")\n";
  if (j.contains("gq")) std::cout << "GQ(" << j["gq"]["s"] << "," << j["gq"]["t"] << ") with " << j["gq"]["lines"] << " lines\n";
  return kOk;
}

int run_spectrum(const Graph& g, double tol, const std::string& format) {
  const Spectrum sp = spectrum(g, tol);
  const Json j = spectrum_json(g, sp);
  if (format != "text") {
    emit(format == "csv" ? j["grouped"] : j, format);
    return kOk;
  }
  for (const auto& e : sp.grouped) {
    std::cout << fmt(e.value) << "^" << e.multiplicity;
    if (e.integer) std::cout << "  (integer " << *e.integer << ")";
    std::cout << "\n";
  }
  if (j.contains("lambda2"))
    std::cout << "lambda2 " << fmt(j["lambda2"]) << "  lambda_min " << fmt(j["lambda_min"]) << "  lambda "
              << fmt(j["lambda_abs"]) << "\n";
  return kOk;
}

int run_bounds(const Graph& g, const std::string& format) {
  const BoundsReport b = bounds(g);
  if (format != "text") emit(bounds_json(b), format);
  else print_bounds_text(b);
  return kOk;
}

int run_toughness(const Graph& g, bool minimizers, std::uint64_t budget, unsigned threads, const std::string& format) {
  ToughnessOptions opts;
  opts.budget = budget;
  opts.threads = threads;
  opts.want_minimizers = minimizers;
  const ToughnessCertificate cert = toughness_exact(g, opts);
  const int code = cert.exhaustive ? kOk : kPartial;
  if (format != "text") {
    emit(certificate_json(cert), format);
    return code;
  }
  std::cout << "value       " << cert.value.str() << (cert.exhaustive ? "" : "  (upper bound: budget exhausted)") << "\n"
            << "witness     " << set_text(cert.witness) << "\n"
            << "components  " << cert.components << "\n"
            << "exhaustive  " << (cert.exhaustive ? "true" : "false") << "\n"
            << "work        " << cert.work << "\n";
  if (cert.minimizers) {
    const MinimizerClassification cls = classify_minimizers(g, cert);
    std::cout << "minimizers  " << cert.minimizers->size() << " (" << cls.neighborhoods << " neighborhoods, "
              << cls.independent_complements << " MIS complements, " << cls.other << " other)\n";
    for (std::size_t i = 0; i < cert.minimizers->size(); ++i)
      std::cout << "  " << set_text((*cert.minimizers)[i]) << "  " << to_string(cls.kinds[i]) << "\n";
  }
  return code;
}

int run_connectivity(const Graph& g, unsigned threads, const std::string& format) {
  const ConnectivityReport c = connectivity(g, threads);
  const IndependenceResult mis = max_independent_set(g);
  if (format != "text") {
    emit(connectivity_json(c, mis), format);
    return kOk;
  }
  std::cout << "kappa        " << c.vertex.value << (c.vertex.complete ? " (complete graph)" : "") << "  cut "
            << set_text(c.vertex.cut) << "\n"
            << "kappa_prime  " << c.edge.value << "\n"
            << "alpha        " << mis.alpha << "  witness " << set_text(mis.witness) << "\n";
  return kOk;
}

int run_verify(Profile profile, const std::string& json_out, const std::string& format, const std::string& only,
               const std::string& param) {
  VerificationReport report;
  if (!only.empty()) {
    report.profile = profile;
    report.checks.push_back(check_one(only, param, profile));
    report.seconds = report.checks.back().seconds;
  } else {
    report = run_suite(profile);
  }
  const Json j = report_json(report);
  if (!json_out.empty()) {
    std::ofstream os(json_out);
    if (!os) throw UsageError("cannot write " + json_out);
    os << j.dump(2) << "\n";
  }
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << to_csv(j["checks"]);
  } else {
    for (const auto& c : report.checks) {
      std::printf("%-8s %-20s %-38s claimed: %s | computed: %s", to_string(c.status).c_str(), c.id.c_str(),
                  c.instance.c_str(), c.claimed.c_str(), c.computed.c_str());
      if (!c.notes.empty()) std::printf(" | %s", c.notes.c_str());
      std::printf("\n");
    }
    std::printf("%zu pass, %zu fail, %zu skipped (profile %s, max_n %zu, %.2f s)\n", report.count(CheckStatus::kPass),
                report.count(CheckStatus::kFail), report.count(CheckStatus::kSkipped), profile.name.c_str(),
                profile.max_n, report.seconds);
  }
  return report.all_passed() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph toughness, spectra and connectivity"};
  app.require_subcommand(1);

  std::string format = "text";
  const auto formats = CLI::IsMember({"text", "json", "csv"});

  Input input;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("graph", input.path, "Graph file (n m header, then one edge per line)");
    sub->add_option("-s,--spec", input.spec, "Family spec instead of a file, e.g. lattice:v=4");
    sub->add_option("--format", format, "Output format")->check(formats);
  };

  std::string spec, out;
  auto* build = app.add_subcommand("build", "Build a family and write it in the graph text format");
  build->add_option("spec", spec, "Family spec")->required();
  build->add_option("-o,--output", out, "Output path (default stdout)");

  auto* info = app.add_subcommand("info", "Print family metadata");
  info->add_option("spec", spec, "Family spec")->required();
  info->add_option("--format", format, "Output format")->check(formats);

  double group_tol = 1e-6;
  auto* spec_cmd = app.add_subcommand("spectrum", "Adjacency spectrum with grouped multiplicities");
  add_input(spec_cmd);
  spec_cmd->add_option("--group-tol", group_tol, "Eigenvalue grouping tolerance")->check(CLI::PositiveNumber);

  bool exact = false, only_bounds = false, minimizers = false;
  std::uint64_t budget = ToughnessOptions{}.budget;
  unsigned threads = 0;
  bool threads_set = false;
  auto* tough_cmd = app.add_subcommand("toughness", "Exact toughness certificate or spectral bounds");
  add_input(tough_cmd);
  auto* exact_flag = tough_cmd->add_flag("--exact", exact, "Exact search (default)");
  tough_cmd->add_flag("--bounds", only_bounds, "Spectral bounds only")->excludes(exact_flag);
  tough_cmd->add_flag("--minimizers", minimizers, "List every optimal set");
  tough_cmd->add_option("--budget", budget, "Search node limit");
  auto* topt = tough_cmd->add_option("--threads", threads, "Worker threads (0 = runtime default)");

  auto* bounds_cmd = app.add_subcommand("bounds", "Spectral toughness bounds");
  add_input(bounds_cmd);

  auto* conn_cmd = app.add_subcommand("connectivity", "Vertex and edge connectivity, independence number");
  add_input(conn_cmd);
  auto* copt = conn_cmd->add_option("--threads", threads, "Worker threads (0 = runtime default)");

  std::string profile_name = "desk", json_out, only, param;
  std::size_t max_n = 0;
  auto* verify = app.add_subcommand("verify", "Run the theorem verification suite");
  verify->add_option("--profile", profile_name, "quick, desk or full")->check(CLI::IsMember({"quick", "desk", "full"}));
  verify->add_option("--json", json_out, "Also write the JSON report here");
  verify->add_option("--format", format, "Output format")->check(formats);
  verify->add_option("--max-n", max_n, "Override the profile's exact-solver size limit");
  auto* vbudget = verify->add_option("--budget", budget, "Search node limit per exact run");
  auto* vopt = verify->add_option("--threads", threads, "Worker threads (0 = runtime default)");
  verify->add_option("--check", only, "Run one check id");
  verify->add_option("--param", param, "Parameter for --check, e.g. v=3 or gq24");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    threads_set = topt->count() || copt->count() || vopt->count();
    if (!threads_set) threads = default_threads();

    if (*build) return run_build(spec, out);
    if (*info) return run_info(spec, format);
    if (*spec_cmd) return run_spectrum(load(input), group_tol, format);
    if (*bounds_cmd) return run_bounds(load(input), format);
    if (*tough_cmd) {
      const Graph g = load(input);
      if (only_bounds) return run_bounds(g, format);
      return run_toughness(g, minimizers, budget, threads, format);
    }
    if (*conn_cmd) return run_connectivity(load(input), threads, format);
    if (*verify) {
      Profile p = profile_named(profile_name);
      if (max_n) p.max_n = max_n;
      if (vbudget->count()) p.budget = budget;
      p.threads = threads;
      return run_verify(p, json_out, format, only, param);
    }
  } catch (const std::exception& e) {
    std::cerr << "toughctl: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
