#pragma once

#include <stdexcept>
#include <string>

namespace qloop {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A denominator couples the integration variable to a variable outside the
// region of expansion.
struct ContourError : Error {
    using Error::Error;
};

// The pole at x = y does not have order exactly one.
struct PoleOrderError : Error {
    using Error::Error;
};

struct SubstitutionError : Error {
    using Error::Error;
};

struct RetryExhausted : Error {
    using Error::Error;
};

// A pole order exceeded its proven upper bound.
struct BoundViolated : Error {
    using Error::Error;
};

struct SizeMismatch : Error {
    using Error::Error;
};

struct NotBelow : Error {
    using Error::Error;
};

struct MalformedWord : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace qloop
