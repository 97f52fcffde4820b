#pragma once

#include <stdexcept>
#include <string>

namespace raagrep {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct NegativeRadicand : Error {
    using Error::Error;
};

// A radicand whose squarefree part cannot be split into primes we can find.
struct NonFactorable : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct NonIntegralEntry : Error {
    using Error::Error;
};

// An eigenvalue or norm would need a radical outside prime-radical bases.
struct UnsupportedExtension : Error {
    using Error::Error;
};

struct NotCommuting : Error {
    using Error::Error;
};

struct TooSmall : Error {
    using Error::Error;
};

struct NotUnit : Error {
    using Error::Error;
};

struct ClosureFailed : Error {
    using Error::Error;
};

struct NotInvertibleModP : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace raagrep
