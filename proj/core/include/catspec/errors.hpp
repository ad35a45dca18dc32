#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace catspec {

enum class ErrorCode {
  NegativeLegCount,
  EmptySpec,
  NoEdges,
  FamilySizeMismatch,
  SpecTooSmall,
  IndexOutOfRange,
  InexactDivision,
  NonConvergence,
  NoRootFound,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception type thrown by every catspec operation. The code identifies the
/// failure class so callers (the CLI in particular) can map it to an exit
/// status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace catspec
