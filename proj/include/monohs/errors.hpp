#pragma once

#include <stdexcept>
#include <string>

namespace monohs {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define MONOHS_ERROR(Name)                                            \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(#Name, what) {}    \
  };

MONOHS_ERROR(ParseError)
MONOHS_ERROR(ValidationError)
MONOHS_ERROR(EmptyTerminal)
MONOHS_ERROR(GenerationFailed)
MONOHS_ERROR(EmptyInput)
MONOHS_ERROR(NotFixpoint)
MONOHS_ERROR(InvalidPair)
MONOHS_ERROR(BadInput)
MONOHS_ERROR(UnsatInstance)
MONOHS_ERROR(ForcedVariable)
MONOHS_ERROR(IndexOutOfRange)
MONOHS_ERROR(EmptySample)
MONOHS_ERROR(NotRealizable)
MONOHS_ERROR(SeparationFailed)
MONOHS_ERROR(InconsistentOracle)
MONOHS_ERROR(EmptyVersionSpace)
MONOHS_ERROR(NotAHalfspace)
MONOHS_ERROR(BudgetExceeded)
// Broken structural invariant; indicates a bug.
MONOHS_ERROR(InternalError)

#undef MONOHS_ERROR

}  // namespace monohs
