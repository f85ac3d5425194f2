#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ace {

inline constexpr double kPi = 3.14159265358979323846;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid user-facing configuration (shape mismatch, bad mode, bad flag value).
struct ConfigError : Error {
    using Error::Error;
};

// Malformed on-disk data (bad MRC header, truncated checkpoint, CSV mismatch).
struct FormatError : Error {
    using Error::Error;
};

// Non-finite values where the contract demands finite ones.
struct NumericError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct InvalidRepresentationError : Error {
    using Error::Error;
};

}  // namespace ace
