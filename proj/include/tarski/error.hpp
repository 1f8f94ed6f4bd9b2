#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tarski {

enum class ErrorKind {
  AlphabetMismatch,
  Parse,
  FiniteIndex,
  NoIndex,
  GreedyStuck,
  Budget,
  NotFound,
  Precondition,
  ShapeCheck,
  NonEquivariant,
  Freeness,
  Invariant,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type. Negative verdicts
// (violations, FAIL certificates) are ordinary return values, not errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tarski
