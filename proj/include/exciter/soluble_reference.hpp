// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace exciter::soluble
{

// Closed forms for the spike-in-a-box problem, p = pi - delta.

// (pi^2 - p^2) / 2. Accepts delta = 0 (degenerate doublet).
double ExactEpsilon(double delta);

// sin(pi x) / sin(p (1 - x)) on [0, 1], with the limit pi / p at x = 1.
double ExactChi(double delta, double x);

// Unnormalized first iterate from the linear trial,
//   sin(p x) - sin(p) [ (x/p) sin p(1 - x) + x^2 cos p(1 - x) ],
// which equals 2 p sin(p) chi_hat_1(x) e^{-S(x)} with e^{-S} = sin p(1 - x).
double Chi1ClosedForm(double delta, double x);

// First-iterate excitation energy for anchor x0 = 1: 2 p^2 / (1 - p cot p).
double Epsilon1ClosedForm(double delta);

// Small-delta expansions of eps_1, eps_2, eps_3 through delta^4.
double EpsilonSeries(double delta, int order);

}  // namespace exciter::soluble
