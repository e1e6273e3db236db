#pragma once

#include <stdexcept>
#include <string>

namespace evb {

// Invalid user-supplied data (bad permutation, malformed document, ...).
// The CLI maps this to exit code 1.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A violated internal consistency check (orthogonality failure, a
// classification result contradicting a structure theorem, ...).  These
// indicate a bug, never bad input.  The CLI maps this to exit code 2.
class internal_error : public std::runtime_error {
public:
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void check_internal(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

inline void check_input(bool cond, const std::string& msg) {
    if (!cond) throw input_error(msg);
}

} // namespace evb
