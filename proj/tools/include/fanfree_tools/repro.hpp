#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace fanfree::tools {

enum class Status { pass, fail, inconclusive };

std::string to_string(Status s);

struct CriterionResult {
  int id = 0;
  std::string claim;
  Status status = Status::pass;
  std::string detail;
  double seconds = 0.0;
};

struct ReproOptions {
  std::uint64_t seed = 20240611;
  std::uint64_t node_budget = 2'000'000'000ULL;
  // added to every upper-bound value the harness consults; non-zero only for fault injection
  long long bound_offset = 0;
  std::filesystem::path counterexample_dir = "counterexamples";
  int random_audit_drawings = 200;
  int oracle_drawings = 500;
  std::function<void(const CriterionResult&)> on_result;
};

inline constexpr int criterion_count = 10;

CriterionResult run_criterion(int id, const ReproOptions& options);

struct ReproReport {
  std::vector<CriterionResult> rows;
  /// 0 all pass, 1 any fail, 3 otherwise inconclusive
  int exit_code() const;
};

/// runs the listed criteria (all when empty), in order
ReproReport run_repro(const ReproOptions& options, const std::vector<int>& only = {});

/// one aligned line per criterion
std::string format_row(const CriterionResult& r);

}  // namespace fanfree::tools
