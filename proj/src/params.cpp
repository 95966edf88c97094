#include "qgeom/params.hpp"

#include <cmath>
#include <numbers>

#include "qgeom/errors.hpp"

namespace qgeom {

double TwoLevelParams::period() const {
    if (degenerate())
        throw DegenerateSpectrumError(
            "period undefined: omega1 == omega2");
    return 2.0 * std::numbers::pi / omega_minus();
}

bool TwoLevelParams::singular_coupling() const {
    return std::abs(std::cos(2.0 * theta)) < kSingularCouplingTol;
}

double TwoLevelParams::coupling() const {
    if (singular_coupling())
        throw InfiniteCouplingError(
            "coupling tan(2 theta) diverges at theta = pi/4 mod pi/2");
    return std::tan(2.0 * theta);
}

TwoLevelParams make_params(double omega1, double omega2, double theta,
                           double gamma1, double gamma2) {
    const double v[] = {omega1, omega2, theta, gamma1, gamma2};
    for (double x : v)
        if (!std::isfinite(x))
            throw NonFiniteError("non-finite parameter");
    return {omega1, omega2, theta, gamma1, gamma2};
}

EnergyElements hamiltonian_elements(const TwoLevelParams& p) {
    const double c = std::cos(p.theta);
    const double s = std::sin(p.theta);
    const double c2 = c * c;
    const double s2 = s * s;
    EnergyElements e;
    e.phi_phi = p.omega1 * c2 + p.omega2 * s2;
    e.psi_psi = p.omega1 * s2 + p.omega2 * c2;
    e.phi_psi = 0.5 * p.omega_minus() * std::sin(2.0 * p.theta);
    return e;
}

double diagonal_element(const EnergyElements& e, StateSelector sel) {
    return sel == StateSelector::Phi ? e.phi_phi : e.psi_psi;
}

} // namespace qgeom
