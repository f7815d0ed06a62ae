#pragma once

#include <stdexcept>
#include <string>

namespace locdense {

// Malformed user input: bad file contents, out-of-range parameters,
// invalid flag combinations.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An operation refused to run because it would exceed a configured
// exhaustive-search limit or budget. Never downgraded to a heuristic
// silently; the caller has to opt in.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace locdense
