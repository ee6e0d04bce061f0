#pragma once

#include <stdexcept>
#include <string>

namespace stmfa {

// Precondition / shape-contract violations. Thrown when a caller hands an
// operation arguments it documents as unacceptable (odd extents, mismatched
// shapes, out-of-range values).
class ContractError : public std::invalid_argument {
public:
    explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed or truncated files (STMF, STMC, PGM, manifests, configs).
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failures: non-finite losses or gradients, domain errors.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Bad command-line usage or config keys.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace stmfa
