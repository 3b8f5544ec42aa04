#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ifa {

/// Base class for every error raised by the alignment toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The local-level frame is undefined at the poles.
class PolarSingularity : public Error {
public:
    using Error::Error;
};

/// A matrix handed in as a DCM is not orthonormal with unit determinant.
class NotARotation : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Malformed input file; carries the offending 1-based line number.
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Aiding stream has a hole wider than the allowed interpolation span.
class GapError : public Error {
public:
    using Error::Error;
};

/// IMU sample period is not half the update interval.
class RateMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace ifa
