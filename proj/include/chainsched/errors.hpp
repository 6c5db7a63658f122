#pragma once

#include <stdexcept>
#include <string>

namespace chainsched {

// Bad user input: malformed files, out-of-range fields, violated preconditions
// that callers are expected to guard against.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Violated internal invariant. Never expected on valid input; indicates a bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace chainsched
