#ifndef QGEOM_GAUGE_HPP
#define QGEOM_GAUGE_HPP

#include <array>
#include <functional>
#include <span>

#include "qgeom/params.hpp"
#include "qgeom/types.hpp"

namespace qgeom {

/// Default central-difference step for time derivatives.
inline constexpr double kDefaultFdStep = 1e-6;

/// Linear gauge function f(t) = f0 - omega1 * t removed from the
/// evolved state to expose the residual precession.
struct GaugeFunction {
    double f0 = 0.0;

    double value(const TwoLevelParams& p, double t) const {
        return f0 - p.omega1 * t;
    }
};

/// Abelian background field a0 with coupling g; the product g*a0
/// reproduces the off-diagonal energy element.
struct GaugeField {
    double a0 = 0.0;
    double g = 0.0;
};

/// Field for the given parameters: a0 = delta/2, g = tan(2 theta).
/// Throws InfiniteCouplingError at singular angles.
GaugeField gauge_field(const TwoLevelParams& p);

/// Gauge-filtered state e^{i f(t)} e^{-iHt} |sel(0)>.  Its |0>
/// component is constant in t; the |1> component precesses at
/// omega2 - omega1.
QubitState tilde_state(const TwoLevelParams& p, StateSelector sel,
                       double f0, double t);

/// Phi-selector convenience overload.
QubitState tilde_state(const TwoLevelParams& p, double f0, double t);

/// Pair (<phi~(0)|phi~(nT+tau)>, <phi~(0)|phi~(tau)>): the filtered
/// overlap is cycle-invariant, unlike the bare overlap which picks up
/// e^{i n phase} per cycle.
std::pair<Complex, Complex> tilde_overlap_invariance(const TwoLevelParams& p,
                                                     double f0, int n,
                                                     double tau);

/// Max-norm of -i(d/dt + iH)phi~ - omega1 phi~ with the derivative by
/// central differences of step dt.
double filtered_evolution_residual(const TwoLevelParams& p, double f0,
                                   double t, double dt = kDefaultFdStep);

/// Same residual with the exact derivative of the filtered state.
double filtered_evolution_residual_analytic(const TwoLevelParams& p,
                                            double f0, double t);

/// 2x2 operator on the doublet index with Operator2 blocks.
class DoubletOperator {
public:
    DoubletOperator() = default;

    static DoubletOperator from_blocks(const Operator2& b00, const Operator2& b01,
                                       const Operator2& b10, const Operator2& b11);

    /// Pauli swap on the doublet index.
    static DoubletOperator sigma1();

    /// diag(w_pp, w_ss) on the doublet index.
    static DoubletOperator energy_diagonal(const TwoLevelParams& p);

    /// c * identity on both indices.
    static DoubletOperator scalar(Complex c);

    const Operator2& block(int row, int col) const { return b_[row * 2 + col]; }
    Operator2& block(int row, int col) { return b_[row * 2 + col]; }

    StateDoublet apply(const StateDoublet& z) const;

    double max_abs() const;

    DoubletOperator& operator+=(const DoubletOperator& o);
    DoubletOperator& operator-=(const DoubletOperator& o);

private:
    std::array<Operator2, 4> b_{};
};

DoubletOperator operator+(DoubletOperator a, const DoubletOperator& b);
DoubletOperator operator-(DoubletOperator a, const DoubletOperator& b);
DoubletOperator operator*(const DoubletOperator& a, const DoubletOperator& b);
DoubletOperator operator*(Complex c, const DoubletOperator& a);

/// Sum over components of <a_i|b_i>.
Complex doublet_inner(const StateDoublet& a, const StateDoublet& b);

Complex doublet_norm_sq(const StateDoublet& z);

/// Max-norm of i d/dt zeta - (energy_diagonal + w_ps sigma1) zeta with
/// the derivative by central differences of step dt.
double doublet_motion_residual(const TwoLevelParams& p, double t,
                               double dt = kDefaultFdStep);

/// Same residual with the exact derivative of the closed-form doublet,
/// free of the finite-difference rounding floor.
double doublet_motion_residual_analytic(const TwoLevelParams& p, double t);

/// Doublet rotation e^{-i g lambda sigma1} =
/// cos(g lambda) - i sin(g lambda) sigma1 applied to z.
/// Throws InfiniteCouplingError at singular angles.
StateDoublet gauge_transform_doublet(const TwoLevelParams& p, double lambda,
                                     const StateDoublet& z);

/// The rotation as a doublet operator.
DoubletOperator gauge_rotation(const TwoLevelParams& p, double lambda);

/// Result of shifting the field by a gauge function lambda(t):
/// a0 -> a0 + lambda_dot, checked against the operator law
/// g a0' sigma1 = U (g a0 sigma1) U^{-1} + i (dU/dt) U^{-1}.
struct GaugeFieldTransform {
    GaugeField field;
    /// Max-norm defect of the operator law at the evaluation time.
    double law_residual = 0.0;
};

GaugeFieldTransform gauge_field_transform(const TwoLevelParams& p,
                                          const std::function<double(double)>& lambda,
                                          const std::function<double(double)>& lambda_dot,
                                          double t);

/// Covariance of the motion equation under the rotation: for the
/// rotated doublet zeta' = U(lambda(t)) zeta(t) and the shifted field
/// in D'_t, checks U (i D_t zeta) = i D'_t zeta', i.e. i D'_t zeta'
/// equals the rotated image U energy_diagonal U^{-1} zeta'.  (The
/// un-rotated energy_diagonal itself does not commute with U, so the
/// equation's right side transforms along with the state.)  Derivative
/// by central differences of step dt; returns the combined norm.
double transformed_motion_residual(const TwoLevelParams& p,
                                   const std::function<double(double)>& lambda,
                                   const std::function<double(double)>& lambda_dot,
                                   double t, double dt = kDefaultFdStep);

/// Max pairwise spread of a0(t) over the grid: the 0+1 dimensional
/// field-strength proxy, identically zero for a time-constant field.
double field_strength(const TwoLevelParams& p, std::span<const double> t_grid);

/// Same proxy for an arbitrary a0 history.
double field_strength(const std::function<double(double)>& a0,
                      std::span<const double> t_grid);

} // namespace qgeom

#endif
