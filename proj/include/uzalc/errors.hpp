#pragma once

#include <stdexcept>

namespace uzalc {

/// Binary series operation received operands of different order.
struct OrderMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Reciprocal of a series whose constant term is (numerically) zero.
struct SingularSeriesError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Reconstructed function has a pole inside the unit disk.
struct NotAnalyticError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A guarded denominator in the Schur recursion collapsed below tolerance.
struct NumericDegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rejection sampling exhausted its retry budget without an accepted draw.
struct SamplingStarvedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace uzalc
