#pragma once

#include <stdexcept>
#include <string>

namespace hoc {

enum class ErrorCategory {
    InvalidArgument,  // contract violation by the caller
    Numerical,        // solve failure, zero denominator, non-finite data
    Config,           // malformed configuration file or CLI input
    Io,               // filesystem failures
};

/// Base of every exception thrown by the library. The category drives the
/// CLI exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what)
        : Error(ErrorCategory::InvalidArgument, what) {}
};

class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what)
        : Error(ErrorCategory::Numerical, what) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what)
        : Error(ErrorCategory::Config, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what)
        : Error(ErrorCategory::Io, what) {}
};

inline const char* to_string(ErrorCategory c) noexcept {
    switch (c) {
        case ErrorCategory::InvalidArgument: return "invalid-argument";
        case ErrorCategory::Numerical: return "numerical";
        case ErrorCategory::Config: return "config";
        case ErrorCategory::Io: return "io";
    }
    return "unknown";
}

}  // namespace hoc
