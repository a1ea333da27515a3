#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tough {

enum class CheckStatus { kPass, kFail, kSkipped };

std::string to_string(CheckStatus s);

/// One verified claim: what the closed form says next to what was computed.
struct TheoremCheck {
  std::string id;        // theorem tag, e.g. "Thm-L2v"
  std::string instance;  // family spec or short description
  std::string claimed;
  std::string computed;
  CheckStatus status = CheckStatus::kSkipped;
  std::string notes;
  double seconds = 0.0;
};

struct Profile {
  std::string name = "desk";
  std::size_t max_n = 27;  // exact toughness only on graphs with at most this many vertices
  std::uint64_t budget = 1'000'000'000ULL;
  unsigned threads = 0;
};

/// Named profiles: quick (max_n 16), desk (27), full (64). Throws on other names.
Profile profile_named(const std::string& name);

struct VerificationReport {
  Profile profile;
  std::vector<TheoremCheck> checks;  // sorted by (id, instance)
  double seconds = 0.0;

  std::size_t count(CheckStatus s) const;
  bool all_passed() const { return count(CheckStatus::kFail) == 0; }
};

class UnknownCheck : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Runs every check. Individual failures are recorded, never thrown.
VerificationReport run_suite(const Profile& profile = {});

/// A single check. `param` is `v=N` / `k=N` for parameterised theorems or a
/// family spec (e.g. "gq24", "gq-w:q=2") for the quadrangle theorem.
/// Thm-cTv with v=5 runs the Petersen case instead.
TheoremCheck check_one(const std::string& id, const std::string& param, const Profile& profile = {});

/// Ids accepted by check_one.
std::vector<std::string> check_ids();

}  // namespace tough
