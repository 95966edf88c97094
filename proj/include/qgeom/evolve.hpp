#ifndef QGEOM_EVOLVE_HPP
#define QGEOM_EVOLVE_HPP

#include "qgeom/params.hpp"
#include "qgeom/types.hpp"

namespace qgeom {

/// Rotated eigenbasis at t = 0:
///   phi = e^{i gamma1} cos(theta)|0> + e^{i gamma2} sin(theta)|1>
///   psi = -e^{i gamma2} sin(theta)|0> + e^{i gamma1} cos(theta)|1>
StateDoublet basis_states(const TwoLevelParams& p);

/// Closed-form evolution e^{-iHt} of the basis pair.
QubitState evolve_phi(const TwoLevelParams& p, double t);
QubitState evolve_psi(const TwoLevelParams& p, double t);
QubitState evolve_state(const TwoLevelParams& p, StateSelector sel, double t);
StateDoublet evolve_doublet(const TwoLevelParams& p, double t);

/// Fixed-step RK4 integration of i d/dt s = H s from state0 to t_final
/// (either sign).  No renormalization is applied; norm drift is part of
/// the integrator's error signature.  Throws StepTooLargeError when
/// dt > |T|/100 for a nondegenerate spectrum.
QubitState evolve_numeric(const TwoLevelParams& p, const QubitState& state0,
                          double t_final, double dt);

/// H reassembled from the evolved doublet at time t:
///   H = w_pp |phi><phi| + w_ss |psi><psi| + w_ps (|phi><psi| + |psi><phi|).
/// Equals diag(omega1, omega2) at every t.
Operator2 reconstruct_hamiltonian(const TwoLevelParams& p, double t);

} // namespace qgeom

#endif
