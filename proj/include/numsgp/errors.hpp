#pragma once

#include <stdexcept>
#include <string>

namespace numsgp {

// Whether an error is the caller's fault (bad input, misuse) or arose during
// a computation (resource limits, failed exactness checks). The CLI maps
// Usage to exit code 2 and Computation to exit code 1.
enum class ErrorKind { Usage, Computation };

class Error : public std::runtime_error {
public:
    Error(const char* code, ErrorKind kind, const std::string& message)
        : std::runtime_error(message), code_(code), kind_(kind) {}

    const char* code() const noexcept { return code_; }
    ErrorKind kind() const noexcept { return kind_; }

private:
    const char* code_;
    ErrorKind kind_;
};

#define NUMSGP_DEFINE_ERROR(Name, Kind)                  \
    class Name : public Error {                          \
    public:                                              \
        explicit Name(const std::string& message)        \
            : Error(#Name, ErrorKind::Kind, message) {}  \
    };

NUMSGP_DEFINE_ERROR(EmptyInput, Usage)
NUMSGP_DEFINE_ERROR(BadArguments, Usage)
NUMSGP_DEFINE_ERROR(NonCoprimeGenerators, Usage)
NUMSGP_DEFINE_ERROR(NotAnElement, Usage)
NUMSGP_DEFINE_ERROR(NotAnIdeal, Usage)
NUMSGP_DEFINE_ERROR(InvalidWord, Usage)
NUMSGP_DEFINE_ERROR(IneligibleTriple, Usage)
NUMSGP_DEFINE_ERROR(BadFamilyParameter, Usage)
NUMSGP_DEFINE_ERROR(InexactDivision, Computation)
NUMSGP_DEFINE_ERROR(NotStabilized, Computation)
NUMSGP_DEFINE_ERROR(BudgetExceeded, Computation)
NUMSGP_DEFINE_ERROR(CoverViolation, Computation)

#undef NUMSGP_DEFINE_ERROR

}  // namespace numsgp
