#include "qgeom/free_energy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qgeom/errors.hpp"
#include "qgeom/evolve.hpp"

namespace qgeom {

Operator2 free_energy_operator(const TwoLevelParams& p, double t) {
    const EnergyElements e = hamiltonian_elements(p);
    const StateDoublet z = evolve_doublet(p, t);
    return e.phi_phi * Operator2::outer(z.phi, z.phi) +
           e.psi_psi * Operator2::outer(z.psi, z.psi);
}

Operator2 entropy_term(const TwoLevelParams& p, double t) {
    const EnergyElements e = hamiltonian_elements(p);
    const StateDoublet z = evolve_doublet(p, t);
    return e.phi_psi * (Operator2::outer(z.phi, z.psi) +
                        Operator2::outer(z.psi, z.phi));
}

ThermoDecomposition thermo_decomposition(const TwoLevelParams& p, double t) {
    ThermoDecomposition d;
    d.f_op = free_energy_operator(p, t);
    d.ts_op = entropy_term(p, t);
    if (!p.singular_coupling()) {
        d.temperature = p.coupling();
        d.entropy_coeff = 0.5 * hamiltonian_elements(p).delta();
    }
    return d;
}

GeometricInvariant aa_invariant(const TwoLevelParams& p, int n) {
    if (n < 0)
        throw std::invalid_argument("cycle count must be non-negative");
    if (p.degenerate())
        throw DegenerateSpectrumError("cycle undefined: omega1 == omega2");
    GeometricInvariant inv;
    inv.n = n;
    inv.s_n = 2.0 * std::numbers::pi * static_cast<double>(n) *
              std::sin(2.0 * p.theta);
    return inv;
}

double entropy_action_integral(const TwoLevelParams& p, int n, long steps,
                               double t0) {
    if (n < 0)
        throw std::invalid_argument("cycle count must be non-negative");
    if (steps < 1000)
        throw std::invalid_argument("entropy_action_integral needs >= 1000 steps");
    const double t_final = static_cast<double>(n) * p.period();
    const double h = t_final / static_cast<double>(steps);

    const auto integrand = [&](double t) {
        const Operator2 ts = entropy_term(p, t);
        const StateDoublet z = evolve_doublet(p, t);
        return (inner(z.phi, ts.apply(z.psi)) +
                inner(z.psi, ts.apply(z.phi))).real();
    };

    double sum = 0.5 * (integrand(t0) + integrand(t0 + t_final));
    for (long j = 1; j < steps; ++j)
        sum += integrand(t0 + h * static_cast<double>(j));
    return h * sum;
}

std::pair<double, double> variance_link(const TwoLevelParams& p, double t) {
    const Operator2 h = Operator2::diagonal(p.omega1, p.omega2);
    const QubitState phi = evolve_phi(p, t);
    const QubitState h_phi = h.apply(phi);
    const double mean = inner(phi, h_phi).real();
    // <H^2> - <H>^2 evaluated as ||(H - <H>) phi||^2: the direct moment
    // difference cancels two near-equal squares and its square root
    // carries an ~1e-8 floor near decoupled angles.
    const QubitState r = h_phi - Complex(mean) * phi;
    const double spread = std::sqrt(inner(r, r).real());
    return {spread, hamiltonian_elements(p).phi_psi};
}

} // namespace qgeom
