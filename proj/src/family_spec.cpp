#include "tough/family_spec.hpp"

#include <algorithm>
#include <cctype>

namespace tough {

namespace {

struct FamilyInfo {
  const char* name;
  std::vector<std::string> keys;
  bool gq;
};

const std::vector<FamilyInfo>& table() {
  static const std::vector<FamilyInfo> t = {
      {"lattice", {"v"}, false},
      {"triangular", {"v"}, false},
      {"kneser", {"v", "r"}, false},
      {"petersen", {}, false},
      {"gadget", {"k"}, false},
      {"xk", {"k"}, false},
      {"bipartite-cut", {"k"}, false},
      {"matching-complement", {"t"}, false},
      {"hypercube", {"d"}, false},
      {"cycle", {"n"}, false},
      {"complete", {"v"}, false},
      {"complete-bipartite", {"a", "b"}, false},
      {"gq-grid", {"s"}, true},
      {"gq-w", {"q"}, true},
      {"gq24", {}, true},
  };
  return t;
}

const FamilyInfo& lookup(const std::string& name) {
  for (const auto& f : table())
    if (name == f.name) return f;
  throw SpecError("unknown family \"" + name + "\"");
}

std::string trim(std::string s) {
  auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), issp));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), issp).base(), s.end());
  return s;
}

// Strips `wrapper(` ... `)` if present.
bool unwrap(std::string& s, const std::string& wrapper) {
  const std::string open = wrapper + "(";
  if (s.rfind(open, 0) != 0) return false;
  if (s.empty() || s.back() != ')') throw SpecError("unbalanced parentheses in \"" + s + "\"");
  s = trim(s.substr(open.size(), s.size() - open.size() - 1));
  return true;
}

std::size_t param(const FamilySpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) throw SpecError(spec.name + ": missing parameter \"" + key + "\"");
  return it->second;
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
  FamilySpec spec;
  spec.text = text;
  std::string s = trim(text);
  // Each wrapper may appear at most once, in either nesting order.
  for (int round = 0; round < 2; ++round) {
    if (!spec.complemented && unwrap(s, "complement")) {
      spec.complemented = true;
      continue;
    }
    if (!spec.point_graph && unwrap(s, "point-graph")) {
      spec.point_graph = true;
      continue;
    }
  }
  if (s.find('(') != std::string::npos) throw SpecError("wrappers may be applied at most once: \"" + text + "\"");

  const auto colon = s.find(':');
  spec.name = trim(s.substr(0, colon));
  const FamilyInfo& info = lookup(spec.name);
  if (colon != std::string::npos) {
    std::string rest = s.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto comma = rest.find(',', pos);
      const std::string item = trim(rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw SpecError("expected key=value, got \"" + item + "\"");
      const std::string key = trim(item.substr(0, eq));
      const std::string val = trim(item.substr(eq + 1));
      if (std::find(info.keys.begin(), info.keys.end(), key) == info.keys.end())
        throw SpecError(spec.name + ": unknown parameter \"" + key + "\"");
      if (val.empty() || !std::all_of(val.begin(), val.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw SpecError(spec.name + ": parameter " + key + " must be a non-negative integer");
      spec.params[key] = static_cast<std::size_t>(std::stoull(val));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  for (const auto& k : info.keys)
    if (!spec.params.count(k)) throw SpecError(spec.name + ": missing parameter \"" + k + "\"");
  if (spec.point_graph && !info.gq) throw SpecError("point-graph(...) applies only to quadrangle families");
  return spec;
}

std::optional<GeneralizedQuadrangle> build_gq(const FamilySpec& spec) {
  if (spec.name == "gq-grid") return gq_grid(param(spec, "s"));
  if (spec.name == "gq-w") return gq_symplectic(param(spec, "q"));
  if (spec.name == "gq24") return gq_2_4();
  return std::nullopt;
}

Graph build_family(const FamilySpec& spec) {
  Graph g;
  try {
    if (auto gq = build_gq(spec)) {
      g = gq_point_graph(*gq);
    } else if (spec.name == "lattice") {
      g = lattice(param(spec, "v"));
    } else if (spec.name == "triangular") {
      g = triangular(param(spec, "v"));
    } else if (spec.name == "kneser") {
      g = kneser(param(spec, "v"), param(spec, "r"));
    } else if (spec.name == "petersen") {
      g = kneser(5, 2);
    } else if (spec.name == "gadget") {
      const std::size_t k = param(spec, "k");
      g = (k % 2 == 1) ? gadget_odd(k) : gadget_even(k);
    } else if (spec.name == "xk") {
      g = extremal_x(param(spec, "k"));
    } else if (spec.name == "bipartite-cut") {
      g = bipartite_sparse_cut(param(spec, "k"));
    } else if (spec.name == "matching-complement") {
      g = matching_complement(param(spec, "t"));
    } else if (spec.name == "hypercube") {
      g = hypercube(param(spec, "d"));
    } else if (spec.name == "cycle") {
      g = cycle(param(spec, "n"));
    } else if (spec.name == "complete") {
      g = complete(param(spec, "v"));
    } else if (spec.name == "complete-bipartite") {
      g = complete_bipartite(param(spec, "a"), param(spec, "b"));
    } else {
      throw SpecError("unknown family \"" + spec.name + "\"");
    }
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
  return spec.complemented ? complement(g) : g;
}

Graph build_family(const std::string& text) { return build_family(parse_family_spec(text)); }

std::vector<std::string> known_families() {
  std::vector<std::string> out;
  for (const auto& f : table()) {
    std::string s = f.name;
    for (std::size_t i = 0; i < f.keys.size(); ++i) s += (i == 0 ? ":" : ",") + f.keys[i] + "=N";
    out.push_back(s);
  }
  return out;
}

}  // namespace tough
