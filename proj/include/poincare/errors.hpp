#pragma once

#include <stdexcept>
#include <string>

namespace poincare {

// Root of every error raised by the library. The CLI maps subclasses to
// exit codes: ArgumentError/DomainError -> invalid input, the rest -> numerical failure.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define POINCARE_DECLARE_ERROR(Name, Base)                                   \
    class Name : public Base {                                               \
    public:                                                                  \
        using Base::Base;                                                    \
        const char* kind() const noexcept override { return #Name; }         \
    }

POINCARE_DECLARE_ERROR(ArgumentError, Error);
POINCARE_DECLARE_ERROR(DomainError, Error);
POINCARE_DECLARE_ERROR(PreconditionError, Error);
POINCARE_DECLARE_ERROR(NotApplicable, Error);
POINCARE_DECLARE_ERROR(NumericalError, Error);
POINCARE_DECLARE_ERROR(NoRootError, NumericalError);
POINCARE_DECLARE_ERROR(DivergenceError, NumericalError);
POINCARE_DECLARE_ERROR(ConvergenceError, NumericalError);
POINCARE_DECLARE_ERROR(CrossValidationError, NumericalError);
POINCARE_DECLARE_ERROR(ResourceError, NumericalError);

#undef POINCARE_DECLARE_ERROR

}  // namespace poincare
