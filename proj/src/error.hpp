#pragma once

#include <stdexcept>
#include <string>

namespace relcat {

enum class Errc {
  // lattice construction
  NotALattice,
  NotDistributive,
  DuplicateElement,
  UnknownElement,
  InvalidSize,
  // relation typing
  TypeMismatch,
  AlgebraMismatch,
  // structures
  NotPER,
  NotCrisp,
  PowerTooLarge,
  AxiomViolation,
  MissingProduct,
  MissingWitness,
  MissingStructure,
  // term language
  SyntaxError,
  UnknownIdentifier,
  SortMismatch,
  // driver
  ExhaustionCapExceeded,
  InvalidArgument,
  IoError,
  Internal,
};

const char* errcName(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errcName(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace relcat
