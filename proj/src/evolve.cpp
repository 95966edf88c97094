#include "qgeom/evolve.hpp"

#include <cmath>
#include <numbers>

#include "qgeom/errors.hpp"

namespace qgeom {

namespace {

// Reference amplitudes alpha = e^{i gamma1} cos(theta),
// beta = e^{i gamma2} sin(theta).
std::pair<Complex, Complex> reference_amps(const TwoLevelParams& p) {
    return {std::polar(std::cos(p.theta), p.gamma1),
            std::polar(std::sin(p.theta), p.gamma2)};
}

void check_finite_state(const QubitState& s) {
    const double v[] = {s.amp0.real(), s.amp0.imag(),
                        s.amp1.real(), s.amp1.imag()};
    for (double x : v)
        if (!std::isfinite(x))
            throw NonFiniteError("non-finite amplitude");
}

} // namespace

StateDoublet basis_states(const TwoLevelParams& p) {
    const auto [alpha, beta] = reference_amps(p);
    StateDoublet z;
    z.phi = {alpha, beta};
    z.psi = {-beta, alpha};
    return z;
}

QubitState evolve_phi(const TwoLevelParams& p, double t) {
    // e^{-i omega1 t} (alpha, e^{-i(omega2-omega1) t} beta): the global
    // factor times the residual precession of the |1> component.
    const auto [alpha, beta] = reference_amps(p);
    const Complex global = std::polar(1.0, -p.omega1 * t);
    const Complex prec = std::polar(1.0, -p.omega_minus() * t);
    return {global * alpha, global * (prec * beta)};
}

QubitState evolve_psi(const TwoLevelParams& p, double t) {
    const auto [alpha, beta] = reference_amps(p);
    const Complex global = std::polar(1.0, -p.omega1 * t);
    const Complex prec = std::polar(1.0, -p.omega_minus() * t);
    return {global * (-beta), global * (prec * alpha)};
}

QubitState evolve_state(const TwoLevelParams& p, StateSelector sel, double t) {
    return sel == StateSelector::Phi ? evolve_phi(p, t) : evolve_psi(p, t);
}

StateDoublet evolve_doublet(const TwoLevelParams& p, double t) {
    return {evolve_phi(p, t), evolve_psi(p, t)};
}

QubitState evolve_numeric(const TwoLevelParams& p, const QubitState& state0,
                          double t_final, double dt) {
    check_finite_state(state0);
    if (!(dt > 0.0) || !std::isfinite(dt) || !std::isfinite(t_final))
        throw NonFiniteError("evolve_numeric needs finite t_final and dt > 0");
    if (!p.degenerate()) {
        const double t_abs = 2.0 * std::numbers::pi / std::abs(p.omega_minus());
        if (dt > t_abs / 100.0)
            throw StepTooLargeError("dt exceeds |T|/100");
    }

    const Complex mi(0.0, -1.0);
    const auto deriv = [&](const QubitState& s) -> QubitState {
        return {mi * (p.omega1 * s.amp0), mi * (p.omega2 * s.amp1)};
    };
    const auto rk4_step = [&](QubitState& s, double h) {
        const QubitState k1 = deriv(s);
        const QubitState k2 = deriv(s + Complex(0.5 * h) * k1);
        const QubitState k3 = deriv(s + Complex(0.5 * h) * k2);
        const QubitState k4 = deriv(s + Complex(h) * k3);
        s = s + Complex(h / 6.0) * (k1 + Complex(2.0) * k2 +
                                    Complex(2.0) * k3 + k4);
    };

    QubitState s = state0;
    const double sign = t_final < 0.0 ? -1.0 : 1.0;
    const double h = sign * dt;
    const long nsteps = static_cast<long>(std::floor(std::abs(t_final) / dt));
    for (long i = 0; i < nsteps; ++i) rk4_step(s, h);
    const double rem = t_final - h * static_cast<double>(nsteps);
    if (rem != 0.0) rk4_step(s, rem);
    return s;
}

Operator2 reconstruct_hamiltonian(const TwoLevelParams& p, double t) {
    const EnergyElements e = hamiltonian_elements(p);
    const StateDoublet z = evolve_doublet(p, t);
    Operator2 h = e.phi_phi * Operator2::outer(z.phi, z.phi) +
                  e.psi_psi * Operator2::outer(z.psi, z.psi);
    h += e.phi_psi * (Operator2::outer(z.phi, z.psi) +
                      Operator2::outer(z.psi, z.phi));
    return h;
}

} // namespace qgeom
