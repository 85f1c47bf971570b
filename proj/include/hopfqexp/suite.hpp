#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hopfqexp {

struct SuiteOptions {
  /// Presets above this dimension are skipped.
  std::size_t max_dim = 27;
  /// Adds the regular-representation cross-checks on every preset, including uq_sl2(3).
  bool deep = false;
  std::optional<long> bound;
};

struct SuiteRow {
  std::string property;
  std::string subject;
  bool passed = false;
  std::string detail;
};

/// Runs every property over the preset zoo and the constructed twists, in a fixed order.
std::vector<SuiteRow> run_suite(const SuiteOptions& options,
                                const std::function<void(const SuiteRow&)>& on_row = {});

std::string format_suite_row(const SuiteRow& row);
bool all_passed(const std::vector<SuiteRow>& rows);

}  // namespace hopfqexp
