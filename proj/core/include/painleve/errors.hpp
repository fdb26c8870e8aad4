#ifndef PAINLEVE_ERRORS_HPP
#define PAINLEVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace painleve
{

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Caller broke a documented precondition (dimension mismatch, N too small, ...).
class ContractViolation : public Error
{
public:
    using Error::Error;
};

// Parameter value for which the analysis is undefined, e.g. C = 0.
class UnsupportedParameter : public Error
{
public:
    using Error::Error;
};

// A zero-determinant recurrence step whose right-hand side is not in the
// column space of its matrix.
class CompatibilityViolation : public Error
{
public:
    CompatibilityViolation(int step, const std::string &what)
        : Error("compatibility-violation at k=" + std::to_string(step) + ": " + what), step_(step)
    {
    }
    int step() const { return step_; }

private:
    int step_;
};

class SingularityApproach : public Error
{
public:
    using Error::Error;
};

class InsufficientPrefix : public Error
{
public:
    InsufficientPrefix(int required, int available)
        : Error("insufficient-prefix: induction needs coefficients through n=" + std::to_string(required)
                + ", series provides n=" + std::to_string(available)),
          required_(required)
    {
    }
    int required() const { return required_; }

private:
    int required_;
};

} // namespace painleve

#endif
