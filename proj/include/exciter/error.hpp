// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace exciter
{

enum class ErrorCode
{
  InvalidArgument,
  OutOfDomain,
  NoEigenvalue,
  WrongParity,
  DegenerateAnchor,
  Overflow,
  Io,
  Parse,
};

// Every failure raised by the library carries one of the codes above so the C
// layer can map it onto a status value without string matching.
class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string &what)
{
  throw Error(code, what);
}

}  // namespace exciter
