#pragma once

#include <stdexcept>
#include <string>

namespace ptri {

// Bad input from a caller (malformed chord, n out of range, pair not in T, ...).
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal identity that must hold did not. Never expected; tests treat it as fatal.
struct ModelInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotDivisible : ModelInconsistency {
    using ModelInconsistency::ModelInconsistency;
};

struct InvalidOpening : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoValidOpening : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ptri
