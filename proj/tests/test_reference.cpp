// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "exciter/reference.hpp"
#include "helpers.hpp"

using exciter::ErrorCode;
using nlohmann::json;
using testing::CodeOf;

namespace
{

// A summary whose values are exactly the table entries.
json SummaryFor(std::string_view tag)
{
  const auto &table = exciter::LookupReference(tag);
  json config{{"case", table.case_name}, {"anchor", table.anchor}};
  config[table.case_name == "soluble" ? "delta" : "g"] = table.parameter;
  json summary{{"config", config}, {"eps_sequence", json::array()}};
  for (const auto &ref : table.values)
  {
    if (ref.index >= 0)
    {
      auto &arr = summary[std::string(ref.field)];
      while (arr.size() <= static_cast<std::size_t>(ref.index))
      {
        arr.push_back(0.0);
      }
      arr[ref.index] = ref.value;
    }
    else
    {
      summary[std::string(ref.field)] = ref.value;
    }
  }
  return summary;
}

}  // namespace

TEST_CASE("reference tables")
{
  CHECK(exciter::kReferenceTableVersion == 1);
  const auto tables = exciter::ReferenceTables();
  REQUIRE(tables.size() == 4);
  CHECK(tables[0].tag == "eq_3_17");
  CHECK(tables[1].tag == "eq_4_6");
  CHECK(tables[2].tag == "eq_4_8");
  CHECK(tables[3].tag == "eq_A_6");
  for (const auto &table : tables)
  {
    CHECK_FALSE(table.values.empty());
    for (const auto &v : table.values)
    {
      CHECK(v.tolerance > 0.0);
    }
  }
  CHECK(CodeOf([] { exciter::LookupReference("eq_9_9"); }) == ErrorCode::InvalidArgument);

  const auto &soluble = exciter::LookupReference("eq_3_17");
  CHECK(soluble.values[0].value == 0.59086);
  CHECK(soluble.values[0].tolerance == 5e-5);
  const auto &g3 = exciter::LookupReference("eq_4_6");
  CHECK(g3.values[0].key == "e_gd");
  CHECK(g3.values[0].value == 2.48291);
  CHECK(g3.values[0].tolerance == 2e-4);
  CHECK(g3.values[4].value == 0.413568);
  CHECK(g3.values[4].tolerance == 5e-6);
  const auto &g8 = exciter::LookupReference("eq_A_6");
  CHECK(g8.values[3].value == 0.003017947);
  CHECK(g8.values[3].tolerance == 5e-8);

  const auto asym = exciter::AsymptoticReferenceG8();
  CHECK(asym.e_mean == 7.728854);
  CHECK(asym.eps == 0.003027);
}

TEST_CASE("a summary equal to the table passes")
{
  for (const auto &table : exciter::ReferenceTables())
  {
    const auto cmp = exciter::CompareSummary(SummaryFor(table.tag), table.tag);
    CHECK(cmp.AllPass());
    CHECK(cmp.config_mismatch.empty());
    CHECK(cmp.rows.size() == table.values.size());
    for (const auto &row : cmp.rows)
    {
      CHECK(row.abs_deviation == 0.0);
    }
  }
}

TEST_CASE("perturbed summary fails")
{
  auto summary = SummaryFor("eq_4_6");
  summary["eps_sequence"][3] = summary["eps_sequence"][3].get<double>() + 1e-3;
  const auto cmp = exciter::CompareSummary(summary, "eq_4_6");
  CHECK_FALSE(cmp.AllPass());
  CHECK(cmp.rows[4].key == "eps_4");
  CHECK_FALSE(cmp.rows[4].pass);
  CHECK(cmp.rows[4].abs_deviation == doctest::Approx(1e-3).epsilon(1e-9));
  CHECK(cmp.rows[4].rel_deviation == doctest::Approx(1e-3 / 0.413568).epsilon(1e-9));
  CHECK(cmp.rows[3].pass);
}

TEST_CASE("deviation at the tolerance edge")
{
  auto summary = SummaryFor("eq_3_17");
  summary["eps_sequence"][0] = 0.59086 + 4.9e-5;
  summary["eps_sequence"][1] = 0.31348 - 5.1e-5;
  const auto cmp = exciter::CompareSummary(summary, "eq_3_17");
  CHECK(cmp.rows[0].pass);
  CHECK_FALSE(cmp.rows[1].pass);
}

TEST_CASE("summary for another configuration fails")
{
  auto summary = SummaryFor("eq_4_6");
  summary["config"]["anchor"] = 0.5;
  const auto cmp = exciter::CompareSummary(summary, "eq_4_6");
  CHECK_FALSE(cmp.config_mismatch.empty());
  CHECK_FALSE(cmp.AllPass());

  auto soluble = SummaryFor("eq_3_17");
  soluble["e_gd"] = 4.6256;
  soluble["eps_sequence"].push_back(0.3092);
  const auto cross = exciter::CompareSummary(soluble, "eq_4_6");
  CHECK_FALSE(cross.config_mismatch.empty());
  CHECK_FALSE(cross.AllPass());
}

TEST_CASE("short runs produce failing rows")
{
  auto summary = SummaryFor("eq_4_6");
  summary["eps_sequence"].erase(3);
  const auto cmp = exciter::CompareSummary(summary, "eq_4_6");
  REQUIRE(cmp.rows.size() == 5);
  CHECK(std::isnan(cmp.rows[4].actual));
  CHECK_FALSE(cmp.rows[4].pass);
  CHECK_FALSE(cmp.AllPass());
}

TEST_CASE("malformed summaries")
{
  CHECK(CodeOf([] { exciter::CompareSummary(json::object(), "eq_4_6"); }) == ErrorCode::Parse);
  auto summary = SummaryFor("eq_4_6");
  summary.erase("e_gd");
  CHECK(CodeOf([&] { exciter::CompareSummary(summary, "eq_4_6"); }) == ErrorCode::Parse);
  summary = SummaryFor("eq_4_6");
  summary["eps_sequence"][0] = "text";
  CHECK(CodeOf([&] { exciter::CompareSummary(summary, "eq_4_6"); }) == ErrorCode::Parse);
}

TEST_CASE("comparing files")
{
  const auto dir = std::filesystem::temp_directory_path() / "excite_iter_reference";
  std::filesystem::create_directories(dir);
  CHECK(CodeOf([&] { exciter::CompareSummaryFile(dir / "missing.json", "eq_3_17"); }) ==
        ErrorCode::Io);
  {
    std::ofstream out(dir / "bad.json");
    out << "{ \"config\": ";
  }
  CHECK(CodeOf([&] { exciter::CompareSummaryFile(dir / "bad.json", "eq_3_17"); }) ==
        ErrorCode::Parse);
  CHECK(CodeOf([&] { exciter::CompareSummaryFile(dir / "bad.json", "nope"); }) ==
        ErrorCode::InvalidArgument);
  {
    std::ofstream out(dir / "good.json");
    out << SummaryFor("eq_3_17").dump(2);
  }
  CHECK(exciter::CompareSummaryFile(dir / "good.json", "eq_3_17").AllPass());
}
