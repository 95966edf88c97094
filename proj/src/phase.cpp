#include "qgeom/phase.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qgeom/errors.hpp"
#include "qgeom/evolve.hpp"
#include "qgeom/gauge.hpp"

namespace qgeom {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_cycle_count(int n) {
    if (n < 0)
        throw std::invalid_argument("cycle count must be non-negative");
}

} // namespace

double principal_angle(double x) {
    double r = std::remainder(x, kTwoPi);
    if (r <= -std::numbers::pi) r += kTwoPi;
    return r;
}

double angle_distance(double a, double b) {
    return std::abs(principal_angle(a - b));
}

double period(const TwoLevelParams& p) {
    return p.period();
}

Complex overlap_phi(const TwoLevelParams& p, double t) {
    const double c = std::cos(p.theta);
    const double s = std::sin(p.theta);
    return c * c * std::polar(1.0, -p.omega1 * t) +
           s * s * std::polar(1.0, -p.omega2 * t);
}

Complex overlap_psi_phi(const TwoLevelParams& p, double t) {
    const Complex alpha = std::polar(std::cos(p.theta), p.gamma1);
    const Complex beta = std::polar(std::sin(p.theta), p.gamma2);
    return -std::conj(beta) * alpha * std::polar(1.0, -p.omega1 * t) +
           std::conj(alpha) * beta * std::polar(1.0, -p.omega2 * t);
}

double total_phase(const TwoLevelParams& p, StateSelector sel, int n) {
    check_cycle_count(n);
    const double t_cycle = p.period();
    if (n == 0) return 0.0;
    const double t_final = static_cast<double>(n) * t_cycle;

    // Continuous lift of the trajectory's phase, read off a single
    // basis component: each amplitude rotates rigidly (rates -omega1
    // and -omega2), so its tracked angle never slips a branch on a
    // grid finer than half a turn of the fastest rate.
    const QubitState s0 = evolve_state(p, sel, 0.0);
    const bool use0 = std::abs(s0.amp0) != 0.0;

    const double wmax = std::max({std::abs(p.omega1), std::abs(p.omega2),
                                  std::abs(p.omega_minus())});
    const long m = std::max<long>(
        256, static_cast<long>(std::ceil(64.0 * wmax * std::abs(t_final) /
                                         kTwoPi)));

    const auto component = [&](double t) {
        const QubitState s = evolve_state(p, sel, t);
        return use0 ? s.amp0 : s.amp1;
    };

    double prev = std::arg(component(0.0));
    double acc = 0.0;
    for (long j = 1; j <= m; ++j) {
        const double t = t_final * static_cast<double>(j) /
                         static_cast<double>(m);
        const double a = std::arg(component(t));
        acc += principal_angle(a - prev);
        prev = a;
    }
    // The |1> component completes exactly n extra turns of -2*pi
    // relative to the |0> component over n cycles.
    if (!use0) acc += kTwoPi * static_cast<double>(n);
    return acc;
}

double dynamical_phase(const TwoLevelParams& p, StateSelector sel, int n) {
    check_cycle_count(n);
    const double t_cycle = p.period();
    const EnergyElements e = hamiltonian_elements(p);
    return -diagonal_element(e, sel) * t_cycle * static_cast<double>(n);
}

double geometric_phase(const TwoLevelParams& p, StateSelector sel, int n) {
    check_cycle_count(n);
    if (p.degenerate())
        throw DegenerateSpectrumError("cycle undefined: omega1 == omega2");
    const double s = std::sin(p.theta);
    // Complement pair: the per-cycle values sum to 2*pi by construction,
    // and the n-cycle value is the exact n-fold multiple of one cycle.
    const double phi_cycle = kTwoPi * (s * s);
    const double per_cycle =
        sel == StateSelector::Phi ? phi_cycle : kTwoPi - phi_cycle;
    return static_cast<double>(n) * per_cycle;
}

double geometric_phase_numeric(const TwoLevelParams& p, StateSelector sel,
                               int n, long steps, double f0) {
    check_cycle_count(n);
    if (steps < 1000)
        throw std::invalid_argument("geometric_phase_numeric needs >= 1000 steps");
    const double t_final = static_cast<double>(n) * p.period();
    const double h = t_final / static_cast<double>(steps);

    const auto at = [&](long j) {
        return tilde_state(p, sel, f0, h * static_cast<double>(j));
    };

    // Trapezoid over the grid nodes; derivative at each node by a
    // central difference on the two neighbours, one step outside the
    // interval at both ends.
    QubitState prev = at(-1);
    QubitState cur = at(0);
    QubitState next = at(1);
    const Complex half_i_over_h(0.0, 1.0 / (2.0 * h));
    double sum = 0.0;
    for (long j = 0; j <= steps; ++j) {
        const double val = inner(cur, half_i_over_h * (next - prev)).real();
        sum += (j == 0 || j == steps) ? 0.5 * val : val;
        if (j < steps) {
            prev = cur;
            cur = next;
            next = at(j + 2);
        }
    }
    return h * sum;
}

double pancharatnam_phase(std::span<const QubitState> samples) {
    const std::size_t m = samples.size();
    if (m < 3)
        throw std::invalid_argument("pancharatnam_phase needs >= 3 samples");
    double acc = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        const Complex ov = inner(samples[k], samples[(k + 1) % m]);
        if (std::abs(ov) < kZeroOverlapTol)
            throw ZeroOverlapError("consecutive samples nearly orthogonal");
        acc += std::arg(ov);
    }
    return -acc;
}

std::vector<QubitState> trajectory_samples(const TwoLevelParams& p,
                                           StateSelector sel, int n, long m) {
    check_cycle_count(n);
    if (m < 3)
        throw std::invalid_argument("trajectory_samples needs m >= 3");
    const double t_final = static_cast<double>(n) * p.period();
    std::vector<QubitState> out;
    out.reserve(static_cast<std::size_t>(m));
    for (long j = 0; j < m; ++j)
        out.push_back(evolve_state(
            p, sel, t_final * static_cast<double>(j) / static_cast<double>(m)));
    return out;
}

PhaseDecomposition phase_decomposition(const TwoLevelParams& p,
                                       StateSelector sel, int n) {
    PhaseDecomposition d;
    d.total = total_phase(p, sel, n);
    d.dynamical = dynamical_phase(p, sel, n);
    d.geometric = geometric_phase(p, sel, n);
    d.residual = std::abs(d.total - d.dynamical - d.geometric);
    return d;
}

} // namespace qgeom
