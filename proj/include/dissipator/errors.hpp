#pragma once

#include <stdexcept>
#include <string>

namespace dissipator {

/// Input value outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Structurally invalid argument (empty list, index out of range, bad combination).
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A spectral computation was refused because the requested truncation cannot
/// resolve the profile.  Carries the minimum acceptable mode count.
class ResolutionError : public std::runtime_error {
public:
    ResolutionError(const std::string& msg, int required_modes)
        : std::runtime_error(msg), required_modes(required_modes) {}
    int required_modes;
};

/// A bracketed search ran past its certified time cap.  Carries the last bracket.
class TimeoutError : public std::runtime_error {
public:
    TimeoutError(const std::string& msg, double t_lo, double t_hi)
        : std::runtime_error(msg), t_lo(t_lo), t_hi(t_hi) {}
    double t_lo;
    double t_hi;
};

/// Regression could not be performed (too few points, degenerate spread).
class FitError : public std::runtime_error {
public:
    explicit FitError(const std::string& msg) : std::runtime_error(msg) {}
};

/// File I/O failure, message includes the offending path.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dissipator
