// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

// excite-iter: runs the soluble-box and quartic-well experiments and checks
// their summaries against the published tables.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "excite_iter.h"

namespace
{

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int ExitCodeFor(ei_status status)
{
  switch (status)
  {
    case EI_OK:
      return kExitOk;
    case EI_ERR_INVALID_ARGUMENT:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

int ReportError(ei_status status)
{
  std::fprintf(stderr, "excite-iter: %s: %s\n", ei_status_string(status), ei_last_error_message());
  return ExitCodeFor(status);
}

struct CaseOptions
{
  double delta = NAN;
  double g = NAN;
  double anchor = 1.0;
  std::string trial;
  int iters = 8;
  double tol = 1e-9;
  double x_max = NAN;
  std::size_t points = 16001;
  std::string out = ".";
  std::string gs_cache;
};

void AddCaseOptions(CLI::App *cmd, CaseOptions &o)
{
  cmd->add_option("--delta", o.delta, "box spike parameter delta (soluble case)");
  cmd->add_option("--g", o.g, "quartic coupling g (quartic case)");
  cmd->add_option("--anchor", o.anchor, "anchor x0 where chi_n(x0) = chi_0(x0)")
      ->capture_default_str();
  cmd->add_option("--trial", o.trial, "trial function")
      ->check(CLI::IsMember({"linear", "saturating"}));
  cmd->add_option("--iters", o.iters, "maximum number of iterations")->capture_default_str();
  cmd->add_option("--tol", o.tol, "relative stopping tolerance on eps")->capture_default_str();
  cmd->add_option("--xmax", o.x_max, "half-line domain edge");
  cmd->add_option("--points", o.points, "grid points on [0, xmax] (odd)")->capture_default_str();
  cmd->add_option("--out", o.out, "output directory")->capture_default_str();
  cmd->add_option("--gs-cache", o.gs_cache, "ground-state CSV to reuse or create");
}

int RunCaseCommand(ei_case kind, const CaseOptions &o)
{
  ei_case_config config;
  ei_case_config_init(&config);
  config.case_kind = kind;
  config.delta = o.delta;
  config.g = o.g;
  config.anchor = o.anchor;
  config.trial = o.trial.empty() ? nullptr : o.trial.c_str();
  config.max_iters = o.iters;
  config.tol = o.tol;
  config.x_max = o.x_max;
  config.n_points = o.points;
  config.out_dir = o.out.c_str();
  config.gs_cache = o.gs_cache.empty() ? nullptr : o.gs_cache.c_str();

  const ei_status status = ei_run_case(&config);
  if (status != EI_OK)
  {
    return ReportError(status);
  }
  std::printf("wrote summary.json, chi_curves.csv, wavefunctions.csv to %s\n", o.out.c_str());
  return kExitOk;
}

int RunCompareCommand(const std::string &summary, const std::string &tag)
{
  ei_comparison *cmp = nullptr;
  const ei_status status = ei_compare_summary(summary.c_str(), tag.c_str(), &cmp);
  if (status != EI_OK)
  {
    return ReportError(status);
  }
  std::printf("reference %s\n", tag.c_str());
  const std::string mismatch = ei_comparison_config_mismatch(cmp);
  if (!mismatch.empty())
  {
    std::printf("  configuration mismatch: %s\n", mismatch.c_str());
  }
  std::printf("  %-14s %-14s %-22s %-10s %-10s %-8s %s\n", "value", "published", "computed",
              "abs_dev", "rel_dev", "tol", "result");
  for (std::size_t i = 0; i < ei_comparison_rows(cmp); ++i)
  {
    ei_comparison_row row;
    ei_comparison_row_at(cmp, i, &row);
    std::printf("  %-14s %-14.9g %-22.15g %-10.3e %-10.3e %-8.1e %s\n", row.key, row.expected,
                row.actual, row.abs_deviation, row.rel_deviation, row.tolerance,
                row.pass ? "PASS" : "FAIL");
  }
  const bool passed = ei_comparison_passed(cmp) != 0;
  std::printf("%s\n", passed ? "PASS" : "FAIL");
  ei_comparison_free(cmp);
  return passed ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Iterative excitation energies for symmetric 1D Schroedinger problems",
               "excite-iter"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ei_version());

  CaseOptions soluble_opts;
  CLI::App *soluble = app.add_subcommand("soluble", "spike-in-a-box problem");
  AddCaseOptions(soluble, soluble_opts);

  CaseOptions quartic_opts;
  CLI::App *quartic = app.add_subcommand("quartic", "quartic double well");
  AddCaseOptions(quartic, quartic_opts);

  std::string summary_path;
  std::string ref_tag;
  std::vector<std::string> tags;
  for (std::size_t i = 0; i < ei_reference_tag_count(); ++i)
  {
    tags.emplace_back(ei_reference_tag(i));
  }
  CLI::App *compare = app.add_subcommand("compare", "check a summary against published values");
  compare->add_option("--summary", summary_path, "summary.json to check")->required();
  compare->add_option("--ref", ref_tag, "reference table")->required()->check(CLI::IsMember(tags));

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp &e)
  {
    return app.exit(e);
  }
  catch (const CLI::CallForAllHelp &e)
  {
    return app.exit(e);
  }
  catch (const CLI::CallForVersion &e)
  {
    return app.exit(e);
  }
  catch (const CLI::ParseError &e)
  {
    app.exit(e);
    return kExitUsage;
  }

  if (*soluble)
  {
    return RunCaseCommand(EI_CASE_SOLUBLE, soluble_opts);
  }
  if (*quartic)
  {
    return RunCaseCommand(EI_CASE_QUARTIC, quartic_opts);
  }
  return RunCompareCommand(summary_path, ref_tag);
}
