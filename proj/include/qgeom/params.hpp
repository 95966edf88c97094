#ifndef QGEOM_PARAMS_HPP
#define QGEOM_PARAMS_HPP

#include "qgeom/types.hpp"

namespace qgeom {

/// |cos(2*theta)| below this marks the coupling tan(2*theta) as
/// effectively infinite (theta at pi/4 mod pi/2 up to rounding).
inline constexpr double kSingularCouplingTol = 1e-9;

/// Two-level Hamiltonian H = diag(omega1, omega2) together with the
/// mixing angle and reference phases defining the followed basis.
struct TwoLevelParams {
    double omega1 = 0.0;
    double omega2 = 0.0;
    double theta = 0.0;
    double gamma1 = 0.0;
    double gamma2 = 0.0;

    /// Level splitting omega2 - omega1 (may be negative).
    double omega_minus() const { return omega2 - omega1; }

    bool degenerate() const { return omega1 == omega2; }

    /// Signed cycle period 2*pi/(omega2 - omega1).
    /// Throws DegenerateSpectrumError when omega1 == omega2.
    double period() const;

    /// Coupling g = tan(2*theta).
    /// Throws InfiniteCouplingError near theta = pi/4 mod pi/2.
    double coupling() const;

    /// True when theta sits at pi/4 mod pi/2 up to kSingularCouplingTol.
    bool singular_coupling() const;
};

/// Validates finiteness of all entries.  Degenerate spectra and
/// singular angles are allowed here; the operations that need
/// them finite reject them at call time.
TwoLevelParams make_params(double omega1, double omega2, double theta,
                           double gamma1 = 0.0, double gamma2 = 0.0);

/// Matrix elements of H in the rotated basis.  All three are
/// time-independent.
struct EnergyElements {
    double phi_phi = 0.0;  // <phi|H|phi> = omega1 cos^2 + omega2 sin^2
    double psi_psi = 0.0;  // <psi|H|psi> = omega1 sin^2 + omega2 cos^2
    double phi_psi = 0.0;  // <phi|H|psi> = (omega2 - omega1) sin(2 theta)/2

    /// Diagonal gap psi_psi - phi_phi = (omega2 - omega1) cos(2 theta).
    double delta() const { return psi_psi - phi_phi; }
};

EnergyElements hamiltonian_elements(const TwoLevelParams& p);

/// Matrix element picked by the selector's diagonal slot.
double diagonal_element(const EnergyElements& e, StateSelector sel);

} // namespace qgeom

#endif
