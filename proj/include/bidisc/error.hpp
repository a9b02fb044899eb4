#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bidisc {

enum class ErrorCode {
  InvalidPoint,
  NotSolvable,
  Degenerate,
  DiagonalOutput,
  DiagonalPoles,
  PoleAtBase,
  NoConvergence,
  NoCandidate,
  NoFeasibleDisc,
  InvalidArgument,
  Io,
};

/// Machine-readable tag, e.g. "DIAGONAL_POLES".
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bidisc
