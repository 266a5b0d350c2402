// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#include "exciter/reference.hpp"

#include <array>
#include <cmath>
#include <fstream>

#include "exciter/error.hpp"

namespace exciter
{

namespace
{

// Soluble box, delta = 0.1, linear trial, anchor 1.
constexpr std::array kEq3_17{
    ReferenceValue{"eps_1", "eps_sequence", 0, 0.59086, 5e-5},
    ReferenceValue{"eps_2", "eps_sequence", 1, 0.31348, 5e-5},
    ReferenceValue{"eps_3", "eps_sequence", 2, 0.30924, 5e-5},
    ReferenceValue{"exact_epsilon", "exact_epsilon", -1, 0.30916, 5e-5},
};

// Quartic g = 3, saturating trial, anchor 1.
constexpr std::array kEq4_6{
    ReferenceValue{"e_gd", "e_gd", -1, 2.48291, 2e-4},
    ReferenceValue{"eps_1", "eps_sequence", 0, 0.41776, 5e-6},
    ReferenceValue{"eps_2", "eps_sequence", 1, 0.41367, 5e-6},
    ReferenceValue{"eps_3", "eps_sequence", 2, 0.413568, 5e-6},
    ReferenceValue{"eps_4", "eps_sequence", 3, 0.413568, 5e-6},
};

// Quartic g = 3, saturating trial, anchor 0.5.
constexpr std::array kEq4_8{
    ReferenceValue{"eps_1", "eps_sequence", 0, 0.41363, 5e-6},
    ReferenceValue{"eps_2", "eps_sequence", 1, 0.41358, 5e-6},
    ReferenceValue{"eps_3", "eps_sequence", 2, 0.413569, 5e-6},
    ReferenceValue{"eps_4", "eps_sequence", 3, 0.413568, 5e-6},
};

// Quartic g = 8, saturating trial, anchor 1.
constexpr std::array kEqA_6{
    ReferenceValue{"e_gd", "e_gd", -1, 7.727340, 2e-4},
    ReferenceValue{"eps_1", "eps_sequence", 0, 0.00310125, 5e-8},
    ReferenceValue{"eps_2", "eps_sequence", 1, 0.00301796, 5e-8},
    ReferenceValue{"eps_3", "eps_sequence", 2, 0.003017947, 5e-8},
    ReferenceValue{"eps_4", "eps_sequence", 3, 0.003017947, 5e-8},
    ReferenceValue{"e_mean", "e_mean", -1, 7.728849, 5e-7},
    ReferenceValue{"eps", "eps_final", -1, 0.003018, 5e-7},
};

constexpr std::array kTables{
    ReferenceTable{"eq_3_17", "soluble", 0.1, 1.0, kEq3_17},
    ReferenceTable{"eq_4_6", "quartic", 3.0, 1.0, kEq4_6},
    ReferenceTable{"eq_4_8", "quartic", 3.0, 0.5, kEq4_8},
    ReferenceTable{"eq_A_6", "quartic", 8.0, 1.0, kEqA_6},
};

}  // namespace

std::span<const ReferenceTable> ReferenceTables()
{
  return kTables;
}

const ReferenceTable &LookupReference(std::string_view tag)
{
  for (const auto &table : kTables)
  {
    if (table.tag == tag)
    {
      return table;
    }
  }
  Fail(ErrorCode::InvalidArgument, "unknown reference tag '" + std::string(tag) + "'");
}

AsymptoticReference AsymptoticReferenceG8()
{
  return {7.728854, 0.003027};
}

bool Comparison::AllPass() const
{
  if (!config_mismatch.empty() || rows.empty())
  {
    return false;
  }
  for (const auto &row : rows)
  {
    if (!row.pass)
    {
      return false;
    }
  }
  return true;
}

Comparison CompareSummary(const nlohmann::json &summary, std::string_view tag)
{
  const ReferenceTable &table = LookupReference(tag);
  Comparison out;
  out.tag = std::string(tag);
  try
  {
    const auto &config = summary.at("config");
    const std::string case_name = config.at("case").get<std::string>();
    const double parameter =
        config.at(case_name == "soluble" ? "delta" : "g").get<double>();
    const double anchor = config.at("anchor").get<double>();
    if (case_name != table.case_name || parameter != table.parameter || anchor != table.anchor)
    {
      out.config_mismatch = "summary is for case=" + case_name + " parameter=" +
                            std::to_string(parameter) + " anchor=" + std::to_string(anchor);
    }
    for (const auto &ref : table.values)
    {
      const auto &field = summary.at(std::string(ref.field));
      const auto index = static_cast<std::size_t>(ref.index);
      if (ref.index >= 0 && index >= field.size())
      {
        // The run stopped before this iteration.
        const double nan = std::nan("");
        out.rows.push_back({std::string(ref.key), ref.value, nan, nan, nan, ref.tolerance, false});
        continue;
      }
      const double actual = ref.index < 0 ? field.get<double>() : field.at(index).get<double>();
      const double abs_dev = std::abs(actual - ref.value);
      out.rows.push_back({std::string(ref.key), ref.value, actual, abs_dev,
                          abs_dev / std::abs(ref.value), ref.tolerance, abs_dev <= ref.tolerance});
    }
  }
  catch (const nlohmann::json::exception &e)
  {
    Fail(ErrorCode::Parse, std::string("malformed summary: ") + e.what());
  }
  return out;
}

Comparison CompareSummaryFile(const std::filesystem::path &summary_path, std::string_view tag)
{
  LookupReference(tag);
  std::ifstream in(summary_path);
  if (!in)
  {
    Fail(ErrorCode::Io, "cannot read " + summary_path.string());
  }
  nlohmann::json summary;
  try
  {
    in >> summary;
  }
  catch (const nlohmann::json::exception &e)
  {
    Fail(ErrorCode::Parse, summary_path.string() + ": " + e.what());
  }
  return CompareSummary(summary, tag);
}

}  // namespace exciter
