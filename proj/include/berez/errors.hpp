#pragma once

#include <stdexcept>
#include <string>

namespace berez {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands from different algebras, or incompatible shapes.
struct DimensionError : Error {
    using Error::Error;
};

// Parity constraint violated (odd/mixed element where an even one is required, etc.).
struct ParityError : Error {
    using Error::Error;
};

// Value outside an operation's domain (e.g. exponential of an element with nonzero body).
struct DomainError : Error {
    using Error::Error;
};

// Element or matrix has no exact inverse.
struct NotInvertibleError : Error {
    using Error::Error;
};

// Malformed input document; message carries coordinates where applicable.
struct ParseError : Error {
    using Error::Error;
};

// A genericity precondition failed; carries the name of the failed precondition
// so callers can report exactly which body determinant vanished.
class NonGenericError : public Error {
public:
    explicit NonGenericError(std::string precondition)
        : Error("non-generic input: " + precondition),
          precondition_(std::move(precondition)) {}

    const std::string& precondition() const noexcept { return precondition_; }

private:
    std::string precondition_;
};

} // namespace berez
