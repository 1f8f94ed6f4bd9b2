#include "tarski/error.hpp"

namespace tarski {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AlphabetMismatch: return "alphabet mismatch";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::FiniteIndex: return "finite index";
    case ErrorKind::NoIndex: return "no index";
    case ErrorKind::GreedyStuck: return "greedy stuck";
    case ErrorKind::Budget: return "budget exceeded";
    case ErrorKind::NotFound: return "not found";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::ShapeCheck: return "shape check";
    case ErrorKind::NonEquivariant: return "non-equivariant map";
    case ErrorKind::Freeness: return "freeness violation";
    case ErrorKind::Invariant: return "invariant violation";
  }
  return "error";
}

}  // namespace tarski
