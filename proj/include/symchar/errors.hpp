#pragma once

#include <stdexcept>
#include <string>

namespace symchar {

/// Raised when an operation is asked to exceed its configured size guard
/// (enumeration bounds, table sizes, series degrees).
struct guard_error : std::runtime_error {
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when two partitions that must have equal weight do not.
struct size_mismatch_error : std::invalid_argument {
    explicit size_mismatch_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an internal cross-check fails (identity suites, soundness
/// assertions). Reaching this means a bug, not bad input.
struct verification_error : std::logic_error {
    explicit verification_error(const std::string& what) : std::logic_error(what) {}
};

/// Raised on file I/O failures in the CLI layer.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace symchar
