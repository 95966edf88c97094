#include "qgeom/types.hpp"

#include <algorithm>
#include <cmath>

namespace qgeom {

Complex inner(const QubitState& a, const QubitState& b) {
    return std::conj(a.amp0) * b.amp0 + std::conj(a.amp1) * b.amp1;
}

double norm(const QubitState& s) {
    return std::sqrt(std::norm(s.amp0) + std::norm(s.amp1));
}

double max_component_diff(const QubitState& a, const QubitState& b) {
    const double d[] = {
        std::abs(a.amp0.real() - b.amp0.real()),
        std::abs(a.amp0.imag() - b.amp0.imag()),
        std::abs(a.amp1.real() - b.amp1.real()),
        std::abs(a.amp1.imag() - b.amp1.imag()),
    };
    return *std::max_element(std::begin(d), std::end(d));
}

Operator2 Operator2::diagonal(double a, double b) {
    Operator2 m;
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    return m;
}

Operator2 Operator2::identity() {
    return diagonal(1.0, 1.0);
}

Operator2 Operator2::outer(const QubitState& ket, const QubitState& bra) {
    Operator2 m;
    m.at(0, 0) = ket.amp0 * std::conj(bra.amp0);
    m.at(0, 1) = ket.amp0 * std::conj(bra.amp1);
    m.at(1, 0) = ket.amp1 * std::conj(bra.amp0);
    m.at(1, 1) = ket.amp1 * std::conj(bra.amp1);
    return m;
}

QubitState Operator2::apply(const QubitState& s) const {
    return {at(0, 0) * s.amp0 + at(0, 1) * s.amp1,
            at(1, 0) * s.amp0 + at(1, 1) * s.amp1};
}

Operator2 Operator2::adjoint() const {
    Operator2 m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            m.at(r, c) = std::conj(at(c, r));
    return m;
}

Complex Operator2::trace() const {
    return at(0, 0) + at(1, 1);
}

double Operator2::max_abs() const {
    double v = 0.0;
    for (const auto& e : m_) v = std::max(v, std::abs(e));
    return v;
}

Operator2& Operator2::operator+=(const Operator2& o) {
    for (int i = 0; i < 4; ++i) m_[i] += o.m_[i];
    return *this;
}

Operator2& Operator2::operator-=(const Operator2& o) {
    for (int i = 0; i < 4; ++i) m_[i] -= o.m_[i];
    return *this;
}

Operator2 operator+(Operator2 a, const Operator2& b) { return a += b; }

Operator2 operator-(Operator2 a, const Operator2& b) { return a -= b; }

Operator2 operator*(const Operator2& a, const Operator2& b) {
    Operator2 m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            m.at(r, c) = a.at(r, 0) * b.at(0, c) + a.at(r, 1) * b.at(1, c);
    return m;
}

Operator2 operator*(Complex c, const Operator2& a) {
    Operator2 m = a;
    for (int r = 0; r < 2; ++r)
        for (int k = 0; k < 2; ++k) m.at(r, k) *= c;
    return m;
}

Operator2 operator*(double c, const Operator2& a) {
    return Complex(c, 0.0) * a;
}

double max_abs_diff(const Operator2& a, const Operator2& b) {
    return (a - b).max_abs();
}

double hermiticity_defect(const Operator2& m) {
    return max_abs_diff(m, m.adjoint());
}

} // namespace qgeom
