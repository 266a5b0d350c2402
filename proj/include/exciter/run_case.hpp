// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "exciter/excite.hpp"
#include "exciter/groundstate.hpp"

namespace exciter
{

enum class CaseKind
{
  Soluble,
  Quartic
};

// Everything needed to reproduce one experiment. Unset optionals take the
// per-case defaults filled in by Resolve().
struct RunConfig
{
  CaseKind case_kind = CaseKind::Quartic;
  std::optional<double> delta;
  std::optional<double> g;
  double anchor = 1.0;
  std::optional<std::string> trial;  // "linear" | "saturating"
  int max_iters = 8;
  double tol = 1e-9;
  std::optional<double> x_max;
  std::size_t n_points = 16001;
  std::filesystem::path out_dir = ".";
  std::optional<std::filesystem::path> gs_cache;

  // Validates the parameter set and fills defaults. Throws InvalidArgument.
  RunConfig Resolve() const;
};

const char *ToString(CaseKind kind);

struct CaseResult
{
  RunConfig config;  // resolved
  GroundState ground_state;
  ConvergenceReport report;
  bool ground_state_from_cache = false;
};

// Runs the configured experiment in memory.
CaseResult ComputeCase(const RunConfig &config);

nlohmann::json SummaryJson(const CaseResult &result);

// Runs the experiment and writes summary.json, chi_curves.csv,
// wavefunctions.csv and (unless the ground state came from the cache)
// groundstate.csv + groundstate.json into config.out_dir.
CaseResult RunCase(const RunConfig &config);

// Sidecar path for a ground-state CSV: same stem, .json extension.
std::filesystem::path SidecarPath(const std::filesystem::path &csv_path);

// %.17g, with inf/nan spelled out.
std::string FormatCsvNumber(double v);

}  // namespace exciter
