// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace exciter
{

// Bumped whenever a published value or tolerance changes.
inline constexpr int kReferenceTableVersion = 1;

// One published number and where to find its counterpart in summary.json:
// `field` names a top-level key; `index` selects an array element or is -1
// for a scalar.
struct ReferenceValue
{
  std::string_view key;
  std::string_view field;
  int index;
  double value;
  double tolerance;  // absolute
};

// Published results of one run configuration.
struct ReferenceTable
{
  std::string_view tag;
  std::string_view case_name;  // "soluble" or "quartic"
  double parameter;            // delta or g
  double anchor;
  std::span<const ReferenceValue> values;
};

std::span<const ReferenceTable> ReferenceTables();

// Throws InvalidArgument for an unknown tag.
const ReferenceTable &LookupReference(std::string_view tag);

// Asymptotic-expansion values quoted for g = 8, kept for side-by-side display.
struct AsymptoticReference
{
  double e_mean;
  double eps;
};
AsymptoticReference AsymptoticReferenceG8();

struct ComparisonRow
{
  std::string key;
  double expected;
  double actual;
  double abs_deviation;
  double rel_deviation;
  double tolerance;
  bool pass;
};

struct Comparison
{
  std::string tag;
  // Empty when the summary was produced by the configuration the table
  // describes; otherwise explains the mismatch and the comparison fails.
  std::string config_mismatch;
  std::vector<ComparisonRow> rows;

  bool AllPass() const;
};

// Throws Parse for a summary lacking the fields the table needs.
Comparison CompareSummary(const nlohmann::json &summary, std::string_view tag);
Comparison CompareSummaryFile(const std::filesystem::path &summary_path, std::string_view tag);

}  // namespace exciter
