#pragma once

#include <stdexcept>
#include <string>

namespace crossfam {

// Base of everything this library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed arguments: bad masks, mismatched ground sets, reducible fractions,
// parameters outside a generator's domain, unreadable input.
struct invalid_input : error {
    using error::error;
};

// Request is well-formed but too large for exact enumeration here.
struct capacity_error : error {
    using error::error;
};

// An internal invariant failed. Seeing this means a bug (or a deliberately
// corrupted value in tests), never a property of valid inputs.
struct consistency_error : error {
    using error::error;
};

// The structural requirements a code-like family can fail, in the order the
// decomposition checks them.
enum class structure_violation {
    linearity,
    parity,
    self_orthogonality,
    intersection_closure,
};

inline const char* to_string(structure_violation v) {
    switch (v) {
        case structure_violation::linearity: return "LINEARITY";
        case structure_violation::parity: return "PARITY";
        case structure_violation::self_orthogonality: return "SELF_ORTHOGONAL";
        case structure_violation::intersection_closure: return "INTERSECTION_CLOSURE";
    }
    return "UNKNOWN";
}

struct structure_error : error {
    structure_violation which;
    structure_error(structure_violation v, const std::string& msg)
        : error(std::string(to_string(v)) + ": " + msg), which(v) {}
};

}  // namespace crossfam
