#pragma once

#include <stdexcept>
#include <string>

namespace janus {

enum class ErrorKind {
  InvalidInput,      // malformed parameters (negative r, bad cutoff, ...)
  Infeasible,        // no normalized state exists for the requested amplitudes
  Undefined,         // g2 undefined (vacuum-dominated)
  Singular,          // 1 - z too close to zero
  Unnormalized,      // normalization precondition violated
  CutoffTooSmall,
  CutoffMismatch,
  ZeroVector,
  FormulaMismatch,
  EmptyFeasibleSet,
  Io,
  Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace janus
