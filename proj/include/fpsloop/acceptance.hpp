#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fpsloop/algebra.hpp"
#include "fpsloop/io.hpp"

namespace fpsloop {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

enum class GroupVerdict { Group, NotGroup };

struct GroupReport {
  GroupVerdict verdict = GroupVerdict::Group;
  CommIdealReport predicate;
  int samples = 0;
  int nonassociative = 0;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> witness;  // a, b, c in text form
  std::string defect;                // (a o b) o c - a o (b o c)

  const char* verdict_name() const noexcept {
    return verdict == GroupVerdict::Group ? "GROUP" : "NOT_GROUP";
  }
};

// Combines the basis predicate S[S,S] = 0 with randomized associator
// sampling. Throws Error(Inconsistent) when the two disagree.
GroupReport check_group(const AlgebraPtr& algebra, int truncation, int samples,
                        std::uint64_t seed = kDefaultSeed);
json report_to_json(const GroupReport& report);

struct CriterionResult {
  std::string id;
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::optional<double> limit;  // wall-time limit in seconds
  std::string detail;
};

struct AcceptanceOptions {
  std::uint64_t seed = kDefaultSeed;
  // Negative control: negate the closed-form brackets everywhere the suite
  // consumes them.
  bool flip_closed_sign = false;
  // Restrict to these ids ("1".."15"; "11" selects 11a and 11b). Empty = all.
  std::set<std::string> only;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

json acceptance_to_json(const std::vector<CriterionResult>& results,
                        const AcceptanceOptions& options);
// One line per criterion plus a summary line.
std::string acceptance_table(const std::vector<CriterionResult>& results);

}  // namespace fpsloop
