// Error taxonomy shared across the library; maps onto CLI exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace tmc {

// exit code 2: malformed input (graph spec, poset file, flags)
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// exit code 3: a size/memory guard was exceeded
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

// exit code 4: a formula result disagreed with its brute-force cross-check
struct OracleMismatch : std::runtime_error {
    explicit OracleMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

// exit code 5: an internal invariant failed (integrality, consistency, convergence)
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tmc
