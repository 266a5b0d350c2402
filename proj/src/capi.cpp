// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#include "excite_iter.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <new>
#include <string>

#include "exciter/error.hpp"
#include "exciter/excite.hpp"
#include "exciter/groundstate.hpp"
#include "exciter/reference.hpp"
#include "exciter/run_case.hpp"

struct ei_groundstate
{
  exciter::GroundState value;
};

struct ei_report
{
  exciter::ConvergenceReport value;
};

struct ei_comparison
{
  exciter::Comparison value;
};

namespace
{

thread_local std::string last_error;

ei_status ToStatus(exciter::ErrorCode code)
{
  using exciter::ErrorCode;
  switch (code)
  {
    case ErrorCode::InvalidArgument:
      return EI_ERR_INVALID_ARGUMENT;
    case ErrorCode::OutOfDomain:
      return EI_ERR_OUT_OF_DOMAIN;
    case ErrorCode::NoEigenvalue:
      return EI_ERR_NO_EIGENVALUE;
    case ErrorCode::WrongParity:
      return EI_ERR_WRONG_PARITY;
    case ErrorCode::DegenerateAnchor:
      return EI_ERR_DEGENERATE_ANCHOR;
    case ErrorCode::Overflow:
      return EI_ERR_OVERFLOW;
    case ErrorCode::Io:
      return EI_ERR_IO;
    case ErrorCode::Parse:
      return EI_ERR_PARSE;
  }
  return EI_ERR_INTERNAL;
}

ei_status Failed(ei_status status, std::string message)
{
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
ei_status Guard(F &&body)
{
  try
  {
    body();
    return EI_OK;
  }
  catch (const exciter::Error &e)
  {
    return Failed(ToStatus(e.code()), e.what());
  }
  catch (const std::bad_alloc &)
  {
    return Failed(EI_ERR_INTERNAL, "out of memory");
  }
  catch (const std::exception &e)
  {
    return Failed(EI_ERR_INTERNAL, e.what());
  }
  catch (...)
  {
    return Failed(EI_ERR_INTERNAL, "unknown error");
  }
}

ei_status NullArgument(const char *name)
{
  return Failed(EI_ERR_INVALID_ARGUMENT, std::string(name) + " must not be NULL");
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

exciter::TrialFunction TrialFromEnum(ei_trial trial)
{
  switch (trial)
  {
    case EI_TRIAL_LINEAR:
      return exciter::TrialFunction::Linear();
    case EI_TRIAL_SATURATING:
      return exciter::TrialFunction::SaturatingQuadratic();
  }
  exciter::Fail(exciter::ErrorCode::InvalidArgument, "unknown trial kind");
}

}  // namespace

extern "C" {

const char *ei_version(void)
{
  return "1.0.0";
}

const char *ei_status_string(ei_status status)
{
  switch (status)
  {
    case EI_OK:
      return "ok";
    case EI_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case EI_ERR_OUT_OF_DOMAIN:
      return "out of domain";
    case EI_ERR_NO_EIGENVALUE:
      return "no eigenvalue in bracket";
    case EI_ERR_WRONG_PARITY:
      return "wrong parity";
    case EI_ERR_DEGENERATE_ANCHOR:
      return "degenerate anchor";
    case EI_ERR_OVERFLOW:
      return "overflow";
    case EI_ERR_IO:
      return "i/o error";
    case EI_ERR_PARSE:
      return "parse error";
    case EI_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char *ei_last_error_message(void)
{
  return last_error.c_str();
}

ei_status ei_groundstate_soluble(double delta, size_t n_points, ei_groundstate **out)
{
  if (!out)
  {
    return NullArgument("out");
  }
  *out = nullptr;
  return Guard([&] {
    *out = new ei_groundstate{exciter::SolubleGroundState(delta, exciter::Grid(1.0, n_points))};
  });
}

ei_status ei_groundstate_quartic(double g, double x_max, size_t n_points, double e_lo,
                                 double e_hi, double tol, ei_groundstate **out)
{
  if (!out)
  {
    return NullArgument("out");
  }
  *out = nullptr;
  return Guard([&] {
    const auto potential = exciter::Potential::Quartic(g);
    const double xm = x_max > 0.0 ? x_max : exciter::DefaultQuarticXMax(g, n_points);
    const exciter::EnergyBracket bracket =
        e_lo < e_hi ? exciter::EnergyBracket{e_lo, e_hi} : exciter::DefaultBracket(potential);
    *out = new ei_groundstate{
        exciter::SolveGroundStateNumeric(potential, exciter::Grid(xm, n_points), bracket, tol)};
  });
}

ei_status ei_groundstate_load(const char *csv_path, const char *json_path, ei_groundstate **out)
{
  if (!out || !csv_path || !json_path)
  {
    return NullArgument("out/csv_path/json_path");
  }
  *out = nullptr;
  return Guard([&] { *out = new ei_groundstate{exciter::LoadGroundState(csv_path, json_path)}; });
}

ei_status ei_groundstate_save(const ei_groundstate *gs, const char *csv_path,
                              const char *json_path)
{
  if (!gs || !csv_path || !json_path)
  {
    return NullArgument("gs/csv_path/json_path");
  }
  return Guard([&] { exciter::SaveGroundState(gs->value, csv_path, json_path); });
}

size_t ei_groundstate_size(const ei_groundstate *gs)
{
  return gs ? gs->value.grid.size() : 0;
}

double ei_groundstate_energy(const ei_groundstate *gs)
{
  return gs ? gs->value.e_gd : kNaN;
}

ei_status ei_groundstate_copy_nodes(const ei_groundstate *gs, double *x, double *s,
                                    double *s_prime, size_t n)
{
  if (!gs)
  {
    return NullArgument("gs");
  }
  const auto &v = gs->value;
  if (n < v.grid.size())
  {
    return Failed(EI_ERR_INVALID_ARGUMENT, "buffer smaller than the grid");
  }
  for (size_t i = 0; i < v.grid.size(); ++i)
  {
    if (x)
    {
      x[i] = v.grid[i];
    }
    if (s)
    {
      s[i] = v.s[i];
    }
    if (s_prime)
    {
      s_prime[i] = v.s_prime[i];
    }
  }
  return EI_OK;
}

void ei_groundstate_free(ei_groundstate *gs)
{
  delete gs;
}

void ei_run_options_init(ei_run_options *options)
{
  if (options)
  {
    *options = {1.0, EI_TRIAL_SATURATING, 8, 1e-9};
  }
}

ei_status ei_run(const ei_groundstate *gs, const ei_run_options *options, ei_report **out)
{
  if (!gs || !options || !out)
  {
    return NullArgument("gs/options/out");
  }
  *out = nullptr;
  return Guard([&] {
    const exciter::TrialFunction trial = TrialFromEnum(options->trial);
    *out = new ei_report{
        exciter::Run(gs->value, trial, options->anchor, options->max_iters, options->tol)};
  });
}

int ei_report_iterations(const ei_report *report)
{
  return report ? static_cast<int>(report->value.eps_sequence.size()) : 0;
}

double ei_report_eps(const ei_report *report, int n)
{
  if (!report || n < 1 || n > ei_report_iterations(report))
  {
    return kNaN;
  }
  return report->value.eps_sequence[static_cast<size_t>(n - 1)];
}

double ei_report_orthogonality_residual(const ei_report *report, int n)
{
  if (!report || n < 1 || n > ei_report_iterations(report))
  {
    return kNaN;
  }
  return report->value.orth_residuals[static_cast<size_t>(n - 1)];
}

ei_run_status ei_report_status(const ei_report *report)
{
  if (!report)
  {
    return EI_RUN_MAX_ITERS;
  }
  switch (report->value.status)
  {
    case exciter::RunStatus::Converged:
      return EI_RUN_CONVERGED;
    case exciter::RunStatus::Stalled:
      return EI_RUN_STALLED;
    case exciter::RunStatus::MaxIters:
      break;
  }
  return EI_RUN_MAX_ITERS;
}

double ei_report_e_gd(const ei_report *report)
{
  return report ? report->value.e_gd : kNaN;
}

double ei_report_e_odd(const ei_report *report)
{
  return report ? report->value.e_odd : kNaN;
}

double ei_report_e_mean(const ei_report *report)
{
  return report ? report->value.e_mean : kNaN;
}

ei_status ei_report_copy_chi(const ei_report *report, int n, double *buf, size_t n_buf)
{
  if (!report || !buf)
  {
    return NullArgument("report/buf");
  }
  const auto &states = report->value.states;
  if (n < 0 || static_cast<size_t>(n) >= states.size())
  {
    return Failed(EI_ERR_OUT_OF_DOMAIN, "iteration index out of range");
  }
  const auto &chi = states[static_cast<size_t>(n)].chi;
  if (n_buf < chi.size())
  {
    return Failed(EI_ERR_INVALID_ARGUMENT, "buffer smaller than the grid");
  }
  std::copy(chi.begin(), chi.end(), buf);
  return EI_OK;
}

void ei_report_free(ei_report *report)
{
  delete report;
}

void ei_case_config_init(ei_case_config *config)
{
  if (config)
  {
    *config = {EI_CASE_QUARTIC, kNaN, kNaN, 1.0, nullptr, 8, 1e-9, kNaN, 16001, ".", nullptr};
  }
}

ei_status ei_run_case(const ei_case_config *config)
{
  if (!config)
  {
    return NullArgument("config");
  }
  return Guard([&] {
    exciter::RunConfig rc;
    rc.case_kind =
        config->case_kind == EI_CASE_SOLUBLE ? exciter::CaseKind::Soluble : exciter::CaseKind::Quartic;
    if (!std::isnan(config->delta))
    {
      rc.delta = config->delta;
    }
    if (!std::isnan(config->g))
    {
      rc.g = config->g;
    }
    rc.anchor = config->anchor;
    if (config->trial)
    {
      rc.trial = config->trial;
    }
    rc.max_iters = config->max_iters;
    rc.tol = config->tol;
    if (!std::isnan(config->x_max))
    {
      rc.x_max = config->x_max;
    }
    rc.n_points = config->n_points;
    rc.out_dir = config->out_dir ? config->out_dir : ".";
    if (config->gs_cache)
    {
      rc.gs_cache = std::filesystem::path(config->gs_cache);
    }
    exciter::RunCase(rc);
  });
}

ei_status ei_compare_summary(const char *summary_path, const char *tag, ei_comparison **out)
{
  if (!summary_path || !tag || !out)
  {
    return NullArgument("summary_path/tag/out");
  }
  *out = nullptr;
  return Guard(
      [&] { *out = new ei_comparison{exciter::CompareSummaryFile(summary_path, tag)}; });
}

size_t ei_comparison_rows(const ei_comparison *cmp)
{
  return cmp ? cmp->value.rows.size() : 0;
}

ei_status ei_comparison_row_at(const ei_comparison *cmp, size_t i, ei_comparison_row *row)
{
  if (!cmp || !row)
  {
    return NullArgument("cmp/row");
  }
  if (i >= cmp->value.rows.size())
  {
    return Failed(EI_ERR_OUT_OF_DOMAIN, "row index out of range");
  }
  const auto &r = cmp->value.rows[i];
  *row = {r.key.c_str(), r.expected,  r.actual,  r.abs_deviation,
          r.rel_deviation, r.tolerance, r.pass ? 1 : 0};
  return EI_OK;
}

const char *ei_comparison_config_mismatch(const ei_comparison *cmp)
{
  return cmp ? cmp->value.config_mismatch.c_str() : "";
}

int ei_comparison_passed(const ei_comparison *cmp)
{
  return cmp && cmp->value.AllPass() ? 1 : 0;
}

void ei_comparison_free(ei_comparison *cmp)
{
  delete cmp;
}

size_t ei_reference_tag_count(void)
{
  return exciter::ReferenceTables().size();
}

const char *ei_reference_tag(size_t i)
{
  const auto tables = exciter::ReferenceTables();
  // Tags are string literals, so data() is NUL-terminated.
  return i < tables.size() ? tables[i].tag.data() : nullptr;
}

}  // extern "C"
