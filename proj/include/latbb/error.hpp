#pragma once

#include <stdexcept>
#include <string>

namespace latbb {

enum class ErrorCode {
  DependentColumns,
  RankDeficient,
  NoIntegralSolution,
  NegativeInput,
  DimensionCapExceeded,
  WrongKind,
  InvalidPermutation,
  InvalidArgument,
  Unbounded,
  IoError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace latbb
