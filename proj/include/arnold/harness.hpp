#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arnold/laurent_poly.hpp"

namespace arnold {

enum class Status { Pass, Fail, ReportOnly };
std::string_view to_string(Status s);

struct CheckResult {
  std::string check_id;
  int n_min = 1;
  int n_max = 0;
  Status status = Status::Pass;
  std::string summary;               // what was checked; never a mismatch
  std::vector<std::string> details;  // mismatch records (findings for report-only)
  std::chrono::nanoseconds elapsed{0};
};

struct CheckInfo {
  std::string_view id;
  int default_n;
  bool report_only;
  std::string_view claim;
};

// Registry order is the output order of verify_all.
const std::vector<CheckInfo>& registry();
const CheckInfo& check_info(std::string_view id);  // throws UnknownCheck

// Expected values read from the golden directory.
struct Golden {
  std::map<std::pair<int, int>, std::int64_t> arnold;   // (n, k) -> v_{n,k}
  std::map<std::pair<char, int>, std::int64_t> springer;  // ('B' | 'D', n)
  std::map<std::pair<int, int>, LaurentPoly> polys;     // (n, k) -> V_{n,k}
  // tag -> n -> objects, one line each; class lines keep all members.
  std::map<std::string, std::map<int, std::vector<std::string>>> listings;
  // Registry file: id -> claim text.
  std::map<std::string, std::string> anchors;
};

std::filesystem::path default_golden_dir();
Golden load_golden(const std::filesystem::path& dir);

// Runs one check for 1 <= n <= n_max.
CheckResult verify(std::string_view id, int n_max, const Golden& golden);
CheckResult verify(std::string_view id, int n_max);
// Every registered check at min(its default ceiling, n_max), in parallel,
// returned in registry order.
std::vector<CheckResult> verify_all(int n_max, const Golden& golden);
std::vector<CheckResult> verify_all(int n_max);

}  // namespace arnold
