#pragma once

#include <stdexcept>
#include <string>

namespace pidpair {

/// Zero denominator or similar ill-formed scalar.
struct InvalidFraction : std::domain_error {
    using std::domain_error::domain_error;
};

/// Shapes of the operands do not fit together.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// `M * C = B` has no solution over the ring.
struct NoSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matrix over the fraction field is singular where an invertible one is required.
struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A precondition of a structural result does not hold for the input
/// (full column rank, purity of a span, containment, equal ambient rank).
struct HypothesisViolation : std::runtime_error {
    explicit HypothesisViolation(const std::string& what)
        : std::runtime_error("hypothesis failed: " + what) {}
};

/// A computation that is guaranteed to succeed by theory produced an
/// inconsistent intermediate result.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace pidpair
