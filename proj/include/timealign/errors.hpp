#pragma once

#include <stdexcept>

namespace timealign {

/// Violated operation precondition: mismatched trace lengths, a run that is
/// not in the shape an operation requires, a run that does not align the
/// traces it claims to align.
struct contract_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed input document (model JSON, event-log CSV, trace literal).
/// The message carries file/line or field context where available.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Instance exceeds a deliberately small capacity bound of a brute-force
/// verifier.
struct capacity_error : std::length_error {
    using std::length_error::length_error;
};

}  // namespace timealign
