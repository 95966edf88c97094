#ifndef QGEOM_ERRORS_HPP
#define QGEOM_ERRORS_HPP

#include <stdexcept>

namespace qgeom {

/// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parameter or input amplitude is NaN or infinite.
struct NonFiniteError : Error {
    using Error::Error;
};

/// omega1 == omega2: the cycle period and everything built on it
/// is undefined.
struct DegenerateSpectrumError : Error {
    using Error::Error;
};

/// Integrator step exceeds the resolution bound dt <= |T|/100.
struct StepTooLargeError : Error {
    using Error::Error;
};

/// Consecutive-state overlap magnitude below threshold; its phase
/// carries no information.
struct ZeroOverlapError : Error {
    using Error::Error;
};

/// theta = pi/4 mod pi/2: the coupling tan(2*theta) diverges and
/// g-dependent gauge quantities are undefined.
struct InfiniteCouplingError : Error {
    using Error::Error;
};

} // namespace qgeom

#endif
