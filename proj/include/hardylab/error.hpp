#pragma once

#include <stdexcept>
#include <string>

namespace hardylab {

/// Base of every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI error line.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Argument outside the operation's domain (t < 10 for tables, b > a, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("domain", what) {}
};

/// Evaluation at a pole (Gamma at non-positive integers, zeta at s = 1).
class PoleError : public Error {
public:
    explicit PoleError(const std::string& what) : Error("pole", what) {}
};

/// Iterative procedure exceeded its iteration cap.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& what) : Error("convergence", what) {}
};

/// Shape or consistency violation between inputs (length or count mismatch,
/// invalid bracket, degenerate plan).
class ContractError : public Error {
public:
    explicit ContractError(const std::string& what) : Error("contract", what) {}
};

/// Zero-cache read/write failure.
class CacheError : public Error {
public:
    explicit CacheError(const std::string& what) : Error("cache", what) {}
};

}  // namespace hardylab
