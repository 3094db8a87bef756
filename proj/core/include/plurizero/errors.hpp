#ifndef PLURIZERO_ERRORS_HPP
#define PLURIZERO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plurizero {

struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Gamma_n(z) = 0: the whole basis vanishes at z.
struct DegeneratePointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The sampled polynomial vanishes at the queried point (log = -inf).
struct PointOnZeroSetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Gram matrix numerically singular during orthonormalization.
struct SingularGramError : std::runtime_error {
    SingularGramError(const std::string& msg, double condition_estimate)
        : std::runtime_error(msg), condition_estimate(condition_estimate) {}
    double condition_estimate;
};

/// Requested closed form does not exist for this (K, q).
struct NoClosedFormError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Positive-dimensional zero locus or vanishing resultant.
struct NonGenericSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Root extraction did not converge on either path.
struct RootFindingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace plurizero

#endif
