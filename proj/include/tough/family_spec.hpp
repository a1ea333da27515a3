#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tough/families.hpp"
#include "tough/graph.hpp"

namespace tough {

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parsed family specifier `name[:key=val[,key=val]*]`, optionally wrapped once in
/// `complement(...)` and/or `point-graph(...)`.
struct FamilySpec {
  std::string name;
  std::map<std::string, std::size_t> params;
  bool complemented = false;
  bool point_graph = false;  // only for GQ families
  std::string text;          // the original specifier
};

FamilySpec parse_family_spec(const std::string& text);

/// Builds the graph for a spec. GQ families without `point-graph(...)` build the point graph.
Graph build_family(const FamilySpec& spec);
Graph build_family(const std::string& text);

/// Quadrangle for a GQ family spec (gq-grid, gq-w, gq24); nullopt for other families.
std::optional<GeneralizedQuadrangle> build_gq(const FamilySpec& spec);

/// Names accepted by parse_family_spec, with their parameter keys.
std::vector<std::string> known_families();

}  // namespace tough
