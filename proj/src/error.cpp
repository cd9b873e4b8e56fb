#include "janus/error.hpp"

namespace janus {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::Infeasible: return "infeasible amplitudes";
    case ErrorKind::Undefined: return "g2 undefined";
    case ErrorKind::Singular: return "singular overlap";
    case ErrorKind::Unnormalized: return "unnormalized state";
    case ErrorKind::CutoffTooSmall: return "cutoff too small";
    case ErrorKind::CutoffMismatch: return "cutoff mismatch";
    case ErrorKind::ZeroVector: return "zero vector";
    case ErrorKind::FormulaMismatch: return "formula mismatch";
    case ErrorKind::EmptyFeasibleSet: return "empty feasible set";
    case ErrorKind::Io: return "I/O error";
    case ErrorKind::Parse: return "parse error";
  }
  return "unknown error";
}

}  // namespace janus
