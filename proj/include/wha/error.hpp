#pragma once

#include <stdexcept>
#include <string>

namespace wha {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller handed in something malformed (shape, index, text). CLI maps this to exit 2.
class InputError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public InputError {
public:
    using InputError::InputError;
};

class ParseError : public InputError {
public:
    using InputError::InputError;
};

/// A mathematical precondition does not hold (singular matrix, division by zero,
/// non-associative input to a construction, ...). `code()` is a short stable tag.
class MathError : public Error {
public:
    MathError(std::string code, const std::string& what)
        : Error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class DivisionByZero : public MathError {
public:
    DivisionByZero() : MathError("division-by-zero", "division by the zero scalar") {}
};

class IncompatibleConductors : public MathError {
public:
    IncompatibleConductors(int a, int b)
        : MathError("incompatible-conductors",
                    "cannot mix Q(zeta_" + std::to_string(a) + ") and Q(zeta_" + std::to_string(b) + ")") {}
};

class SingularMatrix : public MathError {
public:
    SingularMatrix() : MathError("singular", "matrix is not invertible") {}
};

/// Budget/bound exhaustion (group closure, search). Also an input problem from the CLI's view.
class BudgetExceeded : public InputError {
public:
    using InputError::InputError;
};

}  // namespace wha
