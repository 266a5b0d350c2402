// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#include "exciter/run_case.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "exciter/error.hpp"
#include "exciter/reference.hpp"
#include "exciter/soluble_reference.hpp"

namespace exciter
{

namespace
{

constexpr int kSummarySchemaVersion = 1;

TrialFunction TrialFromTag(const std::string &tag)
{
  if (tag == "linear")
  {
    return TrialFunction::Linear();
  }
  if (tag == "saturating")
  {
    return TrialFunction::SaturatingQuadratic();
  }
  Fail(ErrorCode::InvalidArgument, "unknown trial '" + tag + "' (expected linear|saturating)");
}

void WriteText(const std::filesystem::path &path, const std::string &text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
  {
    Fail(ErrorCode::Io, "cannot write " + path.string());
  }
  out << text;
  if (!out)
  {
    Fail(ErrorCode::Io, "failed writing " + path.string());
  }
}

Potential MakePotential(const RunConfig &config)
{
  return config.case_kind == CaseKind::Soluble ? Potential::DeltaBox(*config.delta)
                                               : Potential::Quartic(*config.g);
}

GroundState ComputeGroundState(const RunConfig &config)
{
  const Grid grid(*config.x_max, config.n_points);
  if (config.case_kind == CaseKind::Soluble)
  {
    return SolubleGroundState(*config.delta, grid);
  }
  const Potential potential = Potential::Quartic(*config.g);
  return SolveGroundStateNumeric(potential, grid, DefaultBracket(potential));
}

void CheckCacheMatches(const GroundState &gs, const RunConfig &config,
                       const std::filesystem::path &path)
{
  const Potential expected = MakePotential(config);
  const bool same_potential =
      gs.potential.kind() == expected.kind() &&
      (expected.IsQuartic() ? gs.potential.g() == expected.g()
                            : gs.potential.delta() == expected.delta());
  if (!same_potential || !(gs.grid == Grid(*config.x_max, config.n_points)))
  {
    Fail(ErrorCode::InvalidArgument,
         "cached ground state " + path.string() + " was built for a different potential or grid");
  }
}

}  // namespace

const char *ToString(CaseKind kind)
{
  return kind == CaseKind::Soluble ? "soluble" : "quartic";
}

RunConfig RunConfig::Resolve() const
{
  RunConfig r = *this;
  if (r.case_kind == CaseKind::Soluble)
  {
    if (r.g)
    {
      Fail(ErrorCode::InvalidArgument, "--g applies to the quartic case only");
    }
    if (!r.delta)
    {
      r.delta = 0.1;
    }
    Potential::DeltaBox(*r.delta);
    if (r.x_max && *r.x_max != 1.0)
    {
      Fail(ErrorCode::InvalidArgument, "the soluble case lives on [0, 1]; x_max must be 1");
    }
    r.x_max = 1.0;
    if (!r.trial)
    {
      r.trial = "linear";
    }
  }
  else
  {
    if (r.delta)
    {
      Fail(ErrorCode::InvalidArgument, "--delta applies to the soluble case only");
    }
    if (!r.g)
    {
      r.g = 3.0;
    }
    Potential::Quartic(*r.g);
    if (!r.x_max)
    {
      r.x_max = DefaultQuarticXMax(*r.g, r.n_points);
    }
    if (!r.trial)
    {
      r.trial = "saturating";
    }
  }
  TrialFromTag(*r.trial);
  if (r.max_iters < 1)
  {
    Fail(ErrorCode::InvalidArgument, "--iters must be at least 1");
  }
  if (!(r.tol >= 0.0))
  {
    Fail(ErrorCode::InvalidArgument, "--tol must be non-negative");
  }
  const Grid grid(*r.x_max, r.n_points);
  if (!grid.NodeIndex(r.anchor) || r.anchor <= 0.0)
  {
    Fail(ErrorCode::InvalidArgument,
         "anchor " + FormatCsvNumber(r.anchor) + " is not a positive grid node for x_max=" +
             FormatCsvNumber(*r.x_max) + ", points=" + std::to_string(r.n_points));
  }
  return r;
}

CaseResult ComputeCase(const RunConfig &config)
{
  const RunConfig resolved = config.Resolve();
  std::optional<GroundState> gs;
  bool from_cache = false;
  if (resolved.gs_cache && std::filesystem::exists(*resolved.gs_cache))
  {
    gs = LoadGroundState(*resolved.gs_cache, SidecarPath(*resolved.gs_cache));
    CheckCacheMatches(*gs, resolved, *resolved.gs_cache);
    from_cache = true;
  }
  else
  {
    gs = ComputeGroundState(resolved);
  }
  ConvergenceReport report = Run(*gs, TrialFromTag(*resolved.trial), resolved.anchor,
                                 resolved.max_iters, resolved.tol);
  return {resolved, std::move(*gs), std::move(report), from_cache};
}

nlohmann::json SummaryJson(const CaseResult &result)
{
  const RunConfig &c = result.config;
  const ConvergenceReport &r = result.report;

  nlohmann::json config{
      {"case", ToString(c.case_kind)},
      {"anchor", c.anchor},
      {"trial", *c.trial},
      {"iters", c.max_iters},
      {"tol", c.tol},
      {"x_max", *c.x_max},
      {"points", c.n_points},
      {"out", c.out_dir.generic_string()},
      {"gs_cache", c.gs_cache ? nlohmann::json(c.gs_cache->generic_string()) : nlohmann::json()},
  };
  if (c.case_kind == CaseKind::Soluble)
  {
    config["delta"] = *c.delta;
  }
  else
  {
    config["g"] = *c.g;
  }

  nlohmann::json summary{
      {"schema_version", kSummarySchemaVersion},
      {"reference_table_version", kReferenceTableVersion},
      {"config", config},
      {"e_gd", result.ground_state.e_gd},
      {"gauge", result.ground_state.gauge},
      {"ground_state_from_cache", result.ground_state_from_cache},
      {"anchor", r.anchor},
      {"trial", r.trial_tag},
      {"iterations", r.eps_sequence.size()},
      {"eps_sequence", r.eps_sequence},
      {"delta_sequence", r.delta_sequence},
      {"orth_residuals", r.orth_residuals},
      {"status", ToString(r.status)},
      {"eps_final", r.FinalEps()},
      {"e_odd", r.e_odd},
      {"e_mean", r.e_mean},
  };
  if (c.case_kind == CaseKind::Soluble)
  {
    summary["exact_epsilon"] = soluble::ExactEpsilon(*c.delta);
    summary["chi_exact_normalization"] =
        "chi_exact is rescaled so that chi_exact(anchor) = chi_0(anchor)";
  }
  else if (*c.g == 8.0)
  {
    const AsymptoticReference asym = AsymptoticReferenceG8();
    summary["asymptotic_reference"] = {{"e_mean", asym.e_mean}, {"eps", asym.eps}};
  }
  return summary;
}

std::string FormatCsvNumber(double v)
{
  if (std::isnan(v))
  {
    return "nan";
  }
  if (std::isinf(v))
  {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::filesystem::path SidecarPath(const std::filesystem::path &csv_path)
{
  std::filesystem::path p = csv_path;
  p.replace_extension(".json");
  if (p == csv_path)
  {
    p += ".json";
  }
  return p;
}

CaseResult RunCase(const RunConfig &config)
{
  CaseResult result = ComputeCase(config);
  const RunConfig &c = result.config;
  const GroundState &gs = result.ground_state;
  const ConvergenceReport &r = result.report;

  std::error_code ec;
  std::filesystem::create_directories(c.out_dir, ec);
  if (ec)
  {
    Fail(ErrorCode::Io, "cannot create " + c.out_dir.string() + ": " + ec.message());
  }

  WriteText(c.out_dir / "summary.json", SummaryJson(result).dump(2) + "\n");

  const std::size_t n = gs.grid.size();
  const bool soluble = c.case_kind == CaseKind::Soluble;
  std::vector<double> exact;
  if (soluble)
  {
    const double scale = r.states.front().chi[*gs.grid.NodeIndex(c.anchor)] /
                         soluble::ExactChi(*c.delta, c.anchor);
    exact.resize(n);
    for (std::size_t i = 0; i < n; ++i)
    {
      exact[i] = scale * soluble::ExactChi(*c.delta, gs.grid[i]);
    }
  }

  std::string curves = "x";
  for (std::size_t k = 0; k < r.states.size(); ++k)
  {
    curves += ",chi_" + std::to_string(k);
  }
  curves += soluble ? ",chi_exact\n" : "\n";
  for (std::size_t i = 0; i < n; ++i)
  {
    curves += FormatCsvNumber(gs.grid[i]);
    for (const auto &state : r.states)
    {
      curves += ',' + FormatCsvNumber(state.chi[i]);
    }
    if (soluble)
    {
      curves += ',' + FormatCsvNumber(exact[i]);
    }
    curves += '\n';
  }
  WriteText(c.out_dir / "chi_curves.csv", curves);

  const std::vector<double> psi_ex = ExcitedWavefunction(gs, r.states.back().chi);
  std::string waves = "x,psi_gd,psi_ex\n";
  for (std::size_t i = 0; i < n; ++i)
  {
    const double psi_gd = i < gs.SupportEnd() ? std::exp(-gs.s[i]) : 0.0;
    waves += FormatCsvNumber(gs.grid[i]) + ',' + FormatCsvNumber(psi_gd) + ',' +
             FormatCsvNumber(psi_ex[i]) + '\n';
  }
  WriteText(c.out_dir / "wavefunctions.csv", waves);

  if (!result.ground_state_from_cache)
  {
    if (c.gs_cache)
    {
      if (c.gs_cache->has_parent_path())
      {
        std::filesystem::create_directories(c.gs_cache->parent_path(), ec);
      }
      SaveGroundState(gs, *c.gs_cache, SidecarPath(*c.gs_cache));
    }
    else
    {
      SaveGroundState(gs, c.out_dir / "groundstate.csv", c.out_dir / "groundstate.json");
    }
  }
  return result;
}

}  // namespace exciter
