// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "exciter/potential.hpp"
#include "helpers.hpp"

using exciter::ErrorCode;
using testing::CodeOf;

TEST_CASE("quartic potential values")
{
  CHECK(exciter::EvalQuartic(3.0, 1.0) == 0.0);
  CHECK(exciter::EvalQuartic(3.0, 0.0) == 4.5);
  CHECK(exciter::EvalQuartic(8.0, 2.0) == 288.0);
  CHECK(exciter::Potential::Quartic(3.0)(0.0) == 4.5);
}

TEST_CASE("quartic potential is even")
{
  for (double g : {0.5, 1.0, 3.0, 8.0, 10.0})
  {
    for (int k = 0; k <= 400; ++k)
    {
      const double x = 0.01 * k;
      CHECK(exciter::EvalQuartic(g, x) == exciter::EvalQuartic(g, -x));
    }
  }
}

TEST_CASE("quartic coupling must be positive")
{
  CHECK(CodeOf([] { exciter::Potential::Quartic(0.0); }) == ErrorCode::InvalidArgument);
  CHECK(CodeOf([] { exciter::Potential::Quartic(-1.0); }) == ErrorCode::InvalidArgument);
  CHECK(CodeOf([] { exciter::Potential::Quartic(NAN); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("soluble parameters")
{
  const auto sp = exciter::ComputeSolubleParams(0.1);
  CHECK(sp.p == doctest::Approx(std::numbers::pi - 0.1).epsilon(1e-15));
  CHECK(sp.lambda == doctest::Approx(30.314).epsilon(1e-4));

  const auto quarter = exciter::ComputeSolubleParams(std::numbers::pi / 4);
  CHECK(quarter.p == doctest::Approx(3 * std::numbers::pi / 4).epsilon(1e-15));
  CHECK(quarter.lambda == doctest::Approx(3 * std::numbers::pi / 4).epsilon(1e-14));

  CHECK(exciter::ComputeSolubleParams(1e-3).lambda > exciter::ComputeSolubleParams(1e-2).lambda);
  CHECK(exciter::ComputeSolubleParams(1e-6).lambda > 1e6);
}

TEST_CASE("soluble matching condition -p cot p = (pi - delta) cot delta")
{
  for (int k = 0; k <= 300; ++k)
  {
    const double delta = 1e-3 + k * (1.5 - 1e-3) / 300.0;
    const auto sp = exciter::ComputeSolubleParams(delta);
    const double lhs = -sp.p / std::tan(sp.p);
    CHECK(std::abs(lhs - sp.lambda) <= 1e-12 * std::abs(sp.lambda));
  }
}

TEST_CASE("soluble parameter range")
{
  CHECK(CodeOf([] { exciter::ComputeSolubleParams(0.0); }) == ErrorCode::InvalidArgument);
  CHECK(CodeOf([] { exciter::ComputeSolubleParams(-0.1); }) == ErrorCode::InvalidArgument);
  CHECK(CodeOf([] { exciter::ComputeSolubleParams(1.6); }) == ErrorCode::InvalidArgument);
  CHECK(exciter::ComputeSolubleParams(std::numbers::pi / 2).lambda == 0.0);
}

TEST_CASE("delta box potential")
{
  const auto v = exciter::Potential::DeltaBox(0.1);
  CHECK(v.kind() == exciter::Potential::Kind::DeltaBox);
  CHECK_FALSE(v.IsQuartic());
  CHECK(v(0.5) == 0.0);
  CHECK(v(-0.5) == 0.0);
  CHECK(std::isinf(v(1.5)));
  CHECK(std::isinf(v(-1.5)));
  CHECK(v.Tag() == "delta_box");
  CHECK(exciter::Potential::Quartic(2.0).Tag() == "quartic");
}
