#pragma once

#include <cmath>

#include "quatbound/errors.hpp"

namespace quatbound {

/// One element of the quaternion division algebra, w + x*i + y*j + z*k,
/// with i^2 = j^2 = k^2 = ijk = -1 and ij = k = -ji, jk = i = -kj,
/// ki = j = -ik. Multiplication is noncommutative; all operations here
/// are pure value computations in double precision.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
    /// Embeds a real number.
    constexpr explicit Quaternion(double real) : w(real) {}

    static constexpr Quaternion zero() { return {}; }
    static constexpr Quaternion one() { return Quaternion{1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion i() { return Quaternion{0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return Quaternion{0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return Quaternion{0.0, 0.0, 0.0, 1.0}; }

    constexpr bool operator==(const Quaternion&) const = default;

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        w += o.w;
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }

    constexpr Quaternion& operator-=(const Quaternion& o) {
        w -= o.w;
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }

    constexpr Quaternion& operator*=(double s) {
        w *= s;
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

/// Hamilton product. |a*b| = |a|*|b| up to rounding; a*b != b*a in general.
constexpr Quaternion q_mul(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return q_mul(a, b); }

/// Conjugate: negates the i, j, k components. conj(ab) = conj(b)conj(a).
constexpr Quaternion q_conj(const Quaternion& a) { return {a.w, -a.x, -a.y, -a.z}; }

/// Squared modulus, w^2 + x^2 + y^2 + z^2.
constexpr double norm_sq(const Quaternion& a) { return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z; }

/// Modulus, computed with hypot-style scaling so that large components do
/// not overflow the intermediate squares.
inline double q_abs(const Quaternion& a) {
    const double m = std::max(std::max(std::fabs(a.w), std::fabs(a.x)), std::max(std::fabs(a.y), std::fabs(a.z)));
    if (m == 0.0) return 0.0;
    const double sw = a.w / m, sx = a.x / m, sy = a.y / m, sz = a.z / m;
    return m * std::sqrt(sw * sw + sx * sx + sy * sy + sz * sz);
}

/// Multiplicative inverse, conj(a) / |a|^2. Throws ZeroDivisionError at 0.
inline Quaternion q_inv(const Quaternion& a) {
    const double n2 = norm_sq(a);
    if (n2 == 0.0) throw ZeroDivisionError("q_inv: zero quaternion has no inverse");
    const Quaternion c = q_conj(a);
    return {c.w / n2, c.x / n2, c.y / n2, c.z / n2};
}

inline bool q_is_finite(const Quaternion& a) {
    return std::isfinite(a.w) && std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

constexpr bool q_is_zero(const Quaternion& a) { return a.w == 0.0 && a.x == 0.0 && a.y == 0.0 && a.z == 0.0; }

/// True when a is real up to the given absolute slack on the imaginary part.
inline bool q_is_real(const Quaternion& a, double imag_tol = 0.0) {
    return std::fabs(a.x) <= imag_tol && std::fabs(a.y) <= imag_tol && std::fabs(a.z) <= imag_tol;
}

/// Modulus of the imaginary (pure) part.
inline double imag_abs(const Quaternion& a) { return q_abs({0.0, a.x, a.y, a.z}); }

}  // namespace quatbound
