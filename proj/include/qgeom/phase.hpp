#ifndef QGEOM_PHASE_HPP
#define QGEOM_PHASE_HPP

#include <span>
#include <vector>

#include "qgeom/params.hpp"
#include "qgeom/types.hpp"

namespace qgeom {

/// Consecutive-overlap magnitudes below this have no usable phase.
inline constexpr double kZeroOverlapTol = 1e-12;

/// Additive split of the accumulated phase over n cycles.
struct PhaseDecomposition {
    double total = 0.0;
    double dynamical = 0.0;
    double geometric = 0.0;
    /// |total - dynamical - geometric|
    double residual = 0.0;
};

/// Wraps x into (-pi, pi].
double principal_angle(double x);

/// |a - b| modulo 2*pi, folded into [0, pi].
double angle_distance(double a, double b);

/// Signed cycle period 2*pi/(omega2 - omega1).
double period(const TwoLevelParams& p);

/// <phi(0)|phi(t)> in closed form.
Complex overlap_phi(const TwoLevelParams& p, double t);

/// <psi(0)|phi(t)> in closed form.  Vanishes at multiples of T.
Complex overlap_psi_phi(const TwoLevelParams& p, double t);

/// Unwrapped total phase accumulated by the selected state over n
/// cycles: -2*pi*n*omega1/(omega2 - omega1) for either selector.
/// Computed by continuous tracking of a component phase along the
/// trajectory, not from the closed form.
double total_phase(const TwoLevelParams& p, StateSelector sel, int n);

/// -<sel|H|sel> * n * T.
double dynamical_phase(const TwoLevelParams& p, StateSelector sel, int n);

/// Closed-form cycle-mean geometric term: 2*pi*n*sin^2(theta) for Phi,
/// complementary for Psi.
double geometric_phase(const TwoLevelParams& p, StateSelector sel, int n);

/// Quadrature of <s~|i d/dt|s~> over n cycles on a uniform grid with
/// `steps` intervals (>= 1000), derivative by central differences.
/// The gauge offset f0 enters only as a constant global phase.
double geometric_phase_numeric(const TwoLevelParams& p, StateSelector sel,
                               int n, long steps, double f0 = 0.0);

/// Discrete-overlap (Pancharatnam) phase of a closed sample sequence:
/// minus the summed args of consecutive overlaps, last wrapping to
/// first.  Throws ZeroOverlapError when any link magnitude falls
/// below kZeroOverlapTol.
double pancharatnam_phase(std::span<const QubitState> samples);

/// m samples of the selected trajectory at t_j = j*(n*T)/m, j < m.
std::vector<QubitState> trajectory_samples(const TwoLevelParams& p,
                                           StateSelector sel, int n, long m);

PhaseDecomposition phase_decomposition(const TwoLevelParams& p,
                                       StateSelector sel, int n);

} // namespace qgeom

#endif
