// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#include "exciter/excite.hpp"

#include <cmath>
#include <string>

#include "exciter/error.hpp"

namespace exciter
{

TrialFunction TrialFunction::Linear()
{
  return TrialFunction(Kind::Linear);
}

TrialFunction TrialFunction::SaturatingQuadratic()
{
  return TrialFunction(Kind::SaturatingQuadratic);
}

TrialFunction TrialFunction::Tabulated(const Grid &grid, std::vector<double> samples)
{
  if (samples.size() != grid.size())
  {
    Fail(ErrorCode::InvalidArgument, "tabulated trial must have one sample per grid node");
  }
  if (samples.front() != 0.0)
  {
    Fail(ErrorCode::InvalidArgument, "an odd trial function must vanish at x = 0");
  }
  TrialFunction t(Kind::Tabulated);
  t.grid_ = grid;
  t.samples_ = std::move(samples);
  return t;
}

std::string TrialFunction::Tag() const
{
  switch (kind_)
  {
    case Kind::Linear:
      return "linear";
    case Kind::SaturatingQuadratic:
      return "saturating";
    case Kind::Tabulated:
      return "tabulated";
  }
  return "unknown";
}

double TrialFunction::operator()(double x) const
{
  switch (kind_)
  {
    case Kind::Linear:
      return x;
    case Kind::SaturatingQuadratic:
      return x < 1.0 ? x * (2.0 - x) : 1.0;
    case Kind::Tabulated:
      if (auto i = grid_->NodeIndex(x))
      {
        return samples_[*i];
      }
      Fail(ErrorCode::OutOfDomain, "tabulated trial evaluated off its grid");
  }
  return 0.0;
}

std::vector<double> TrialFunction::Sample(const Grid &grid) const
{
  if (kind_ == Kind::Tabulated)
  {
    if (!(*grid_ == grid))
    {
      Fail(ErrorCode::InvalidArgument, "tabulated trial lives on a different grid");
    }
    return samples_;
  }
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
  {
    out[i] = (*this)(grid[i]);
  }
  return out;
}

IterationState InitialState(const GroundState &gs, const TrialFunction &trial)
{
  IterationState state;
  state.chi = trial.Sample(gs.grid);
  return state;
}

std::vector<LogScaledValue> TailIntegrals(const GroundState &gs, std::span<const double> chi_prev,
                                          const IterationOptions &options)
{
  const std::size_t n = gs.grid.size();
  if (chi_prev.size() != n)
  {
    Fail(ErrorCode::InvalidArgument, "chi samples do not match the ground-state grid");
  }
  // Weights are taken relative to the smallest S so they never exceed 1.
  const double s_ref = gs.MinS();
  std::vector<double> integrand(n, 0.0);
  for (std::size_t i = 0; i < gs.SupportEnd(); ++i)
  {
    integrand[i] = std::exp(-2.0 * (gs.s[i] - s_ref)) * chi_prev[i];
  }
  std::vector<double> scaled = CumulativeSimpsonFromRight(integrand, gs.grid.spacing());
  if (options.tail_closure)
  {
    const double closure = ScaledExp(2.0 * s_ref, TailClosureLog(gs, chi_prev));
    for (double &v : scaled)
    {
      v += closure;
    }
  }
  std::vector<LogScaledValue> out(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    out[i] = LogScaledValue::FromDouble(scaled[i]).Scaled(-2.0 * s_ref);
  }
  return out;
}

double TailIntegral(const GroundState &gs, std::span<const double> chi_prev, double x,
                    const IterationOptions &options)
{
  const auto node = gs.grid.NodeIndex(x);
  if (!node)
  {
    Fail(ErrorCode::OutOfDomain, "tail integral is only available at grid nodes");
  }
  return TailIntegrals(gs, chi_prev, options)[*node].ToDouble();
}

namespace
{

std::size_t AnchorIndex(const GroundState &gs, double anchor_x0)
{
  const auto node = gs.grid.NodeIndex(anchor_x0);
  if (!node)
  {
    Fail(ErrorCode::InvalidArgument,
         "anchor x0 = " + std::to_string(anchor_x0) + " is not a grid node");
  }
  if (*node == 0)
  {
    Fail(ErrorCode::DegenerateAnchor, "anchor x0 = 0 pins an odd function to zero");
  }
  return *node;
}

}  // namespace

IterationState IterateOnce(const GroundState &gs, const IterationState &prev, double anchor_x0,
                           double chi0_at_anchor, const IterationOptions &options)
{
  const std::size_t anchor = AnchorIndex(gs, anchor_x0);
  const std::size_t n = gs.grid.size();
  const std::vector<LogScaledValue> tail = TailIntegrals(gs, prev.chi, options);

  std::vector<double> outer(n, 0.0);
  const std::size_t end = gs.SupportEnd();
  for (std::size_t i = 0; i < end; ++i)
  {
    outer[i] = WeightedOuterIntegrand(gs, tail[i], i);
  }
  if (gs.hard_wall)
  {
    // e^{2S} I has a finite limit at the wall; extend by the cubic through
    // the four preceding nodes.
    if (end < 4)
    {
      Fail(ErrorCode::InvalidArgument, "grid too coarse to extrapolate to the wall");
    }
    outer[end] = 4.0 * outer[end - 1] - 6.0 * outer[end - 2] + 4.0 * outer[end - 3] -
                 outer[end - 4];
  }

  std::vector<double> chi_hat = CumulativeSimpsonFromLeft(outer, gs.grid.spacing());
  for (double &v : chi_hat)
  {
    v *= 2.0;
  }
  if (chi_hat[anchor] == 0.0)
  {
    Fail(ErrorCode::DegenerateAnchor, "unnormalized iterate vanishes at the anchor");
  }

  IterationState next;
  next.n = prev.n + 1;
  const double eps = chi0_at_anchor / chi_hat[anchor];
  next.eps = eps;
  next.chi.resize(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    next.chi[i] = eps * chi_hat[i];
    if (!std::isfinite(next.chi[i]))
    {
      Fail(ErrorCode::Overflow, "non-finite iterate at node " + std::to_string(i));
    }
  }
  next.chi[anchor] = chi0_at_anchor;
  next.tail.resize(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    next.tail[i] = tail[i].ToDouble();
  }
  return next;
}

const char *ToString(RunStatus status)
{
  switch (status)
  {
    case RunStatus::Converged:
      return "converged";
    case RunStatus::MaxIters:
      return "max_iters";
    case RunStatus::Stalled:
      return "stalled";
  }
  return "unknown";
}

ConvergenceReport Run(const GroundState &gs, const TrialFunction &trial, double anchor_x0,
                      int max_iters, double tol, const IterationOptions &options)
{
  if (max_iters < 1)
  {
    Fail(ErrorCode::InvalidArgument, "max_iters must be at least 1");
  }
  if (!(tol >= 0.0))
  {
    Fail(ErrorCode::InvalidArgument, "tolerance must be non-negative");
  }
  const std::size_t anchor = AnchorIndex(gs, anchor_x0);

  ConvergenceReport report;
  report.anchor = anchor_x0;
  report.trial_tag = trial.Tag();
  report.e_gd = gs.e_gd;
  report.states.push_back(InitialState(gs, trial));
  const double chi0_at_anchor = report.states.front().chi[anchor];
  if (chi0_at_anchor == 0.0)
  {
    Fail(ErrorCode::DegenerateAnchor, "trial function vanishes at the anchor");
  }

  int growing = 0;
  report.status = RunStatus::MaxIters;
  for (int step = 1; step <= max_iters; ++step)
  {
    report.states.push_back(
        IterateOnce(gs, report.states.back(), anchor_x0, chi0_at_anchor, options));
    const IterationState &state = report.states.back();
    report.eps_sequence.push_back(*state.eps);
    report.orth_residuals.push_back(OrthogonalityResidual(gs, state.chi));
    if (step == 1)
    {
      continue;
    }
    const double eps = report.eps_sequence[step - 1];
    const double delta = std::abs(eps - report.eps_sequence[step - 2]);
    report.delta_sequence.push_back(delta);
    if (delta <= tol * std::abs(eps))
    {
      report.status = RunStatus::Converged;
      break;
    }
    const std::size_t d = report.delta_sequence.size();
    growing = d >= 2 && delta >= report.delta_sequence[d - 2] ? growing + 1 : 0;
    if (growing >= 3)
    {
      report.status = RunStatus::Stalled;
      break;
    }
  }
  report.e_odd = report.e_gd + report.FinalEps();
  report.e_mean = report.e_gd + 0.5 * report.FinalEps();
  return report;
}

double OrthogonalityResidual(const GroundState &gs, std::span<const double> chi, Parity parity)
{
  const std::size_t n = gs.grid.size();
  if (chi.size() != n)
  {
    Fail(ErrorCode::InvalidArgument, "chi samples do not match the ground-state grid");
  }
  const double s_ref = gs.MinS();
  const double sign = parity == Parity::Odd ? -1.0 : 1.0;
  // Full line: nodes -x_{n-1} .. x_{n-1}, index j = n - 1 + i for x_i >= 0.
  // Composite Simpson weights are symmetric about the origin.
  const auto simpson_weight = [&](std::size_t j) {
    if (j == 0 || j == 2 * (n - 1))
    {
      return 1.0;
    }
    return j % 2 == 1 ? 4.0 : 2.0;
  };
  double signed_sum = 0.0;
  double abs_sum = 0.0;
  for (std::size_t i = 0; i < gs.SupportEnd(); ++i)
  {
    const double w = simpson_weight(n - 1 + i) * std::exp(-2.0 * (gs.s[i] - s_ref));
    if (i == 0)
    {
      // The origin is its own mirror; an odd function vanishes there.
      const double c = parity == Parity::Odd ? 0.0 : chi[0];
      signed_sum += w * c;
      abs_sum += w * std::abs(c);
      continue;
    }
    const double mirrored = sign * chi[i];
    signed_sum += w * (chi[i] + mirrored);
    abs_sum += w * (std::abs(chi[i]) + std::abs(mirrored));
  }
  if (abs_sum == 0.0)
  {
    return 0.0;
  }
  return signed_sum / abs_sum;
}

std::vector<double> ExcitedWavefunction(const GroundState &gs, std::span<const double> chi)
{
  const std::size_t n = gs.grid.size();
  if (chi.size() != n)
  {
    Fail(ErrorCode::InvalidArgument, "chi samples do not match the ground-state grid");
  }
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < gs.SupportEnd(); ++i)
  {
    out[i] = std::exp(-gs.s[i]) * chi[i];
  }
  return out;
}

}  // namespace exciter
