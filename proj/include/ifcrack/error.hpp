#pragma once

#include <stdexcept>
#include <string>

namespace ifcrack {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidMaterial : public Error {
public:
    using Error::Error;
};

/// Evaluation point on the wrong side of a crack tip, or exactly at one.
class DomainError : public Error {
public:
    using Error::Error;
};

class TruncationError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class PreconditionViolation : public Error {
public:
    using Error::Error;
};

class NonConvergence : public Error {
public:
    using Error::Error;
};

class RankDeficient : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Base for failures of the dense solve; the CLI maps these to exit code 2.
class NumericalError : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class IllConditioned : public NumericalError {
public:
    IllConditioned(const std::string& what, double estimate)
        : NumericalError(what), estimate_(estimate) {}

    double estimate() const noexcept { return estimate_; }

private:
    double estimate_;
};

}  // namespace ifcrack
