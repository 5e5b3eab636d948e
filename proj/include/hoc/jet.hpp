#pragma once

#include <cmath>

namespace hoc {

/// Second-order jet of a scalar field in two variables: the value together
/// with its gradient and Hessian at one point. Arithmetic propagates exact
/// derivatives through the chain and product rules, so coefficient closures
/// written in terms of Jet2 yield analytic first and second partials.
struct Jet2 {
    double v = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double d11 = 0.0;
    double d12 = 0.0;
    double d22 = 0.0;

    static constexpr Jet2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
    static constexpr Jet2 variable_x1(double x) { return {x, 1, 0, 0, 0, 0}; }
    static constexpr Jet2 variable_x2(double y) { return {y, 0, 1, 0, 0, 0}; }

    /// Partial derivative of order (p, q) with p + q <= 2.
    constexpr double partial(int p, int q) const {
        switch (p * 3 + q) {
            case 0: return v;
            case 1: return d2;
            case 2: return d22;
            case 3: return d1;
            case 4: return d12;
            case 6: return d11;
            default: return 0.0;
        }
    }

    constexpr Jet2& operator+=(const Jet2& o) {
        v += o.v; d1 += o.d1; d2 += o.d2; d11 += o.d11; d12 += o.d12; d22 += o.d22;
        return *this;
    }
    constexpr Jet2& operator-=(const Jet2& o) {
        v -= o.v; d1 -= o.d1; d2 -= o.d2; d11 -= o.d11; d12 -= o.d12; d22 -= o.d22;
        return *this;
    }
    constexpr Jet2& operator*=(double s) {
        v *= s; d1 *= s; d2 *= s; d11 *= s; d12 *= s; d22 *= s;
        return *this;
    }
};

constexpr Jet2 operator-(Jet2 a) { a *= -1.0; return a; }
constexpr Jet2 operator+(Jet2 a, const Jet2& b) { a += b; return a; }
constexpr Jet2 operator-(Jet2 a, const Jet2& b) { a -= b; return a; }
constexpr Jet2 operator*(Jet2 a, double s) { a *= s; return a; }
constexpr Jet2 operator*(double s, Jet2 a) { a *= s; return a; }
constexpr Jet2 operator+(Jet2 a, double s) { a.v += s; return a; }
constexpr Jet2 operator+(double s, Jet2 a) { a.v += s; return a; }
constexpr Jet2 operator-(Jet2 a, double s) { a.v -= s; return a; }
constexpr Jet2 operator-(double s, const Jet2& a) { return -a + s; }

constexpr Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.v * b.v,
            a.d1 * b.v + a.v * b.d1,
            a.d2 * b.v + a.v * b.d2,
            a.d11 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d11,
            a.d12 * b.v + a.d1 * b.d2 + a.d2 * b.d1 + a.v * b.d12,
            a.d22 * b.v + 2.0 * a.d2 * b.d2 + a.v * b.d22};
}

/// g(a) given g, g', g'' evaluated at a.v.
constexpr Jet2 compose(const Jet2& a, double g, double g1, double g2) {
    return {g,
            g1 * a.d1,
            g1 * a.d2,
            g2 * a.d1 * a.d1 + g1 * a.d11,
            g2 * a.d1 * a.d2 + g1 * a.d12,
            g2 * a.d2 * a.d2 + g1 * a.d22};
}

inline Jet2 reciprocal(const Jet2& a) {
    const double inv = 1.0 / a.v;
    return compose(a, inv, -inv * inv, 2.0 * inv * inv * inv);
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }
inline Jet2 operator/(Jet2 a, double s) { a *= 1.0 / s; return a; }
inline Jet2 operator/(double s, const Jet2& a) { return s * reciprocal(a); }

inline Jet2 pow(const Jet2& a, double e) {
    if (e == 0.0) return Jet2::constant(1.0);
    const double p = std::pow(a.v, e);
    const double p1 = e * std::pow(a.v, e - 1.0);
    const double p2 = e * (e - 1.0) * std::pow(a.v, e - 2.0);
    return compose(a, p, p1, p2);
}

inline Jet2 exp(const Jet2& a) {
    const double e = std::exp(a.v);
    return compose(a, e, e, e);
}

inline Jet2 sin(const Jet2& a) {
    const double s = std::sin(a.v), c = std::cos(a.v);
    return compose(a, s, c, -s);
}

inline Jet2 cos(const Jet2& a) {
    const double s = std::sin(a.v), c = std::cos(a.v);
    return compose(a, c, -s, -c);
}

}  // namespace hoc
