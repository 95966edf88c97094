#ifndef QGEOM_TYPES_HPP
#define QGEOM_TYPES_HPP

#include <array>
#include <complex>

namespace qgeom {

using Complex = std::complex<double>;

/// Which member of the instantaneous eigenbasis a phase-tracking
/// operation follows over a cycle.
enum class StateSelector { Phi, Psi };

/// Normalized two-level state, amplitudes on the |0>, |1> basis.
struct QubitState {
    Complex amp0{};
    Complex amp1{};
};

inline QubitState operator+(const QubitState& a, const QubitState& b) {
    return {a.amp0 + b.amp0, a.amp1 + b.amp1};
}

inline QubitState operator-(const QubitState& a, const QubitState& b) {
    return {a.amp0 - b.amp0, a.amp1 - b.amp1};
}

inline QubitState operator*(Complex c, const QubitState& s) {
    return {c * s.amp0, c * s.amp1};
}

/// <a|b> with the physics convention: antilinear in the first slot.
Complex inner(const QubitState& a, const QubitState& b);

double norm(const QubitState& s);

/// Largest per-component amplitude difference, max over re/im parts.
double max_component_diff(const QubitState& a, const QubitState& b);

/// Pair of orthogonal states evolving together; phi carries the
/// followed state, psi its orthogonal partner.
struct StateDoublet {
    QubitState phi;
    QubitState psi;
};

/// 2x2 complex operator on the qubit Hilbert space, row-major storage.
class Operator2 {
public:
    Operator2() = default;

    static Operator2 diagonal(double a, double b);
    static Operator2 identity();

    /// |ket><bra|
    static Operator2 outer(const QubitState& ket, const QubitState& bra);

    Complex& at(int row, int col) { return m_[row * 2 + col]; }
    const Complex& at(int row, int col) const { return m_[row * 2 + col]; }

    QubitState apply(const QubitState& s) const;
    Operator2 adjoint() const;
    Complex trace() const;

    /// Largest entry magnitude (max norm).
    double max_abs() const;

    Operator2& operator+=(const Operator2& o);
    Operator2& operator-=(const Operator2& o);

private:
    std::array<Complex, 4> m_{};
};

Operator2 operator+(Operator2 a, const Operator2& b);
Operator2 operator-(Operator2 a, const Operator2& b);
Operator2 operator*(const Operator2& a, const Operator2& b);
Operator2 operator*(Complex c, const Operator2& a);
Operator2 operator*(double c, const Operator2& a);

/// Max-norm distance between two operators.
double max_abs_diff(const Operator2& a, const Operator2& b);

/// Max-norm of m - m^dagger; zero for Hermitian m.
double hermiticity_defect(const Operator2& m);

} // namespace qgeom

#endif
