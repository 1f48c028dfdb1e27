#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stickel {

/// Error categories surfaced in CLI reports. The string form is part of the
/// JSON contract.
enum class ErrorCode {
  InvalidArgument,
  InvalidGroupSpec,
  InvalidPermutation,
  ClosureCapExceeded,
  InvalidMetacyclic,
  NotAbelian,
  TableValidation,
  NoCharacterTable,
  KappaMismatch,
  Io,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace stickel
