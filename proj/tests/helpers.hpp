// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <optional>

#include "exciter/error.hpp"

namespace testing
{

// Error code thrown by f, or nullopt if it returns normally.
template <class F>
std::optional<exciter::ErrorCode> CodeOf(F &&f)
{
  try
  {
    f();
  }
  catch (const exciter::Error &e)
  {
    return e.code();
  }
  return std::nullopt;
}

inline double RelDiff(double a, double b)
{
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace testing
