#ifndef QGEOM_FREE_ENERGY_HPP
#define QGEOM_FREE_ENERGY_HPP

#include <optional>
#include <utility>

#include "qgeom/params.hpp"
#include "qgeom/types.hpp"

namespace qgeom {

/// Diagonal part of H over the evolved doublet:
/// F = w_pp |phi><phi| + w_ss |psi><psi|.
Operator2 free_energy_operator(const TwoLevelParams& p, double t);

/// Off-diagonal remainder TS = w_ps (|phi><psi| + |psi><phi|);
/// F + TS = H at every t.
Operator2 entropy_term(const TwoLevelParams& p, double t);

/// The split H = F + TS with the temperature-like reading
/// T = g, S-coefficient = delta/2 when the coupling is finite.
struct ThermoDecomposition {
    Operator2 f_op;
    Operator2 ts_op;
    std::optional<double> temperature;    // g = tan(2 theta)
    std::optional<double> entropy_coeff;  // delta/2
};

ThermoDecomposition thermo_decomposition(const TwoLevelParams& p, double t);

/// Anholonomy invariant s_n = 2*pi*n*sin(2 theta), the cycle integral
/// of twice the off-diagonal element.
struct GeometricInvariant {
    double s_n = 0.0;
    int n = 0;
};

GeometricInvariant aa_invariant(const TwoLevelParams& p, int n);

/// Trapezoidal quadrature of <zeta|TS sigma1|zeta> over [t0, t0 + nT]
/// with `steps` intervals (>= 1000).  The integrand is constant, so
/// the grid offset t0 is immaterial.
double entropy_action_integral(const TwoLevelParams& p, int n, long steps,
                               double t0 = 0.0);

/// (sqrt(<H^2> - <H>^2) in phi(t), off-diagonal element w_ps).
/// The first equals |second|; the sign of w_ps follows the gap.
/// The spread is evaluated as the norm of (H - <H>)|phi>, which is the
/// same moment difference without its catastrophic cancellation.
std::pair<double, double> variance_link(const TwoLevelParams& p, double t);

} // namespace qgeom

#endif
