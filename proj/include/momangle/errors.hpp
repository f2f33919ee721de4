#pragma once

#include <stdexcept>
#include <string>

namespace momangle {

// Malformed input text (complex files, CLI arguments).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured size cap was exceeded (subset enumeration, cell counts,
// isomorphism search budgets).
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two routes that must agree produced different answers.  This signals a bug
// in the implementation, never bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace momangle
