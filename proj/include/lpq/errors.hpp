#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace lpq {

/// Base of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A graph violates the oriented-graph rules (self-loop, parallel edge, digon, bad size).
struct ConstraintError : Error {
    using Error::Error;
};

/// Malformed or inconsistent input: dimension mismatch, color out of budget, bad parameters.
struct InputError : Error {
    using Error::Error;
};

/// Theorem dispatch called outside the range its statement covers.
struct RangeError : Error {
    using Error::Error;
};

/// A result that should be impossible by construction failed its re-check.
struct InternalError : Error {
    using Error::Error;
};

/// The search budget ran out before the question was resolved.
///
/// This is a third outcome, distinct from "no labeling exists".
struct ResourceError : Error {
    ResourceError(const std::string& what, std::uint64_t nodes_visited)
        : Error(what), nodes(nodes_visited) {}

    std::uint64_t nodes = 0;
    // Largest k for which exact_lambda fully resolved existence (none if k = 0 already failed).
    std::optional<int> last_resolved_k;
    // Labelings visited before enumeration stopped; not a valid total.
    std::optional<std::uint64_t> partial_count;
};

}  // namespace lpq
