#ifndef QCORR_ERRORS_HPP
#define QCORR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcorr {

// Bad scalar arguments (negative dt, out-of-range r, too few trajectories, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A matrix that is not a valid density operator.
struct StateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Channel coefficients violating the complete-positivity conditions.
struct ValidityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A state outside the X class handed to an X-only routine.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Inputs outside the Bell-diagonal class.
struct ClassError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Non-physical coefficient triples (negative Bell-diagonal eigenvalues).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed or out-of-range run configuration. CLI exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failure (solver breakdown, state gate violation). CLI exit code 3.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qcorr

#endif
