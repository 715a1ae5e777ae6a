#pragma once

#include <stdexcept>
#include <utility>
#include <string>
#include <string_view>

namespace ortholog {

enum class ErrorKind {
  SpecFormat,
  UnknownLabel,
  NotAPoset,
  NotALattice,
  BadOrtho,
  ParamTooLarge,
  CarrierTooLarge,
  InvalidAntichain,
  ExpansionTooLarge,
  UniversalTooLarge,
  NotInCarrier,
  IsoFailure,
  GroundTooLarge,
  MismatchedInputs,
  TargetInvariantFailure,
  SyntaxError,
};

std::string_view to_string(ErrorKind kind);

// All library failures surface as this exception; `kind()` is the stable
// machine-readable part, `what()` carries the witness in prose.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
  // Message without the kind prefix.
  [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(int line, int col, std::string expected);

  [[nodiscard]] int line() const noexcept { return line_; }
  [[nodiscard]] int col() const noexcept { return col_; }
  [[nodiscard]] const std::string& expected() const noexcept { return expected_; }

 private:
  int line_;
  int col_;
  std::string expected_;
};

}  // namespace ortholog
