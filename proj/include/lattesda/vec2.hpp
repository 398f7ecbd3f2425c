#pragma once

// Small double-precision 2-vector / 2x2 matrix helpers for the numeric side.

#include <array>
#include <cmath>
#include <optional>

namespace lattesda {

struct Vec2 {
    double x{0.0}, y{0.0};

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator-() const { return {-x, -y}; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
    Vec2 normalized() const {
        double n = norm();
        return {x / n, y / n};
    }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

struct Mat2d {
    // Row-major [[a, b], [c, d]].
    double a{0.0}, b{0.0}, c{0.0}, d{0.0};

    static Mat2d identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Vec2 operator*(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2d operator*(const Mat2d& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2d operator-(const Mat2d& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2d operator*(double s) const { return {a * s, b * s, c * s, d * s}; }

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }
    Mat2d inverse() const {
        double dt = det();
        return {d / dt, -b / dt, -c / dt, a / dt};
    }
    double max_abs() const {
        return std::max(std::max(std::fabs(a), std::fabs(b)),
                        std::max(std::fabs(c), std::fabs(d)));
    }
};

// Real eigenvalues of a 2x2 matrix, |lambda1| >= |lambda2|; empty if complex.
inline std::optional<std::array<double, 2>> real_eigenvalues(const Mat2d& M) {
    double tr = M.trace();
    double disc = tr * tr - 4.0 * M.det();
    if (disc < 0.0) return std::nullopt;
    double s = std::sqrt(disc);
    double l1 = 0.5 * (tr + s);
    double l2 = 0.5 * (tr - s);
    if (std::fabs(l2) > std::fabs(l1)) std::swap(l1, l2);
    return std::array<double, 2>{l1, l2};
}

// Spectral radius, handling the complex-pair case (modulus sqrt(det)).
inline double spectral_radius(const Mat2d& M) {
    if (auto ev = real_eigenvalues(M))
        return std::max(std::fabs((*ev)[0]), std::fabs((*ev)[1]));
    return std::sqrt(std::fabs(M.det()));
}

// Eigenvector for a real eigenvalue of M (unit length).
inline Vec2 eigenvector_for(const Mat2d& M, double lambda) {
    // Kernel of (M - lambda I); pick the better-conditioned row.
    Vec2 v1{M.b, lambda - M.a};
    Vec2 v2{lambda - M.d, M.c};
    Vec2 v = (v1.norm2() >= v2.norm2()) ? v1 : v2;
    return v.normalized();
}

// Wrap into [0, 1).
inline double wrap_unit(double v) {
    double w = v - std::floor(v);
    if (w >= 1.0) w -= 1.0;  // guards v = -eps rounding to 1.0
    return w;
}

inline Vec2 wrap_unit(const Vec2& v) { return {wrap_unit(v.x), wrap_unit(v.y)}; }

// Wrap into [-1/2, 1/2).
inline double wrap_half(double v) {
    double w = v - std::round(v);
    if (w < -0.5) w += 1.0;
    if (w >= 0.5) w -= 1.0;
    return w;
}

inline Vec2 wrap_half(const Vec2& v) { return {wrap_half(v.x), wrap_half(v.y)}; }

// Euclidean distance on T^2 (axis-aligned unit lattice).
inline double torus_distance(const Vec2& a, const Vec2& b) {
    return std::sqrt(wrap_half(a.x - b.x) * wrap_half(a.x - b.x) +
                     wrap_half(a.y - b.y) * wrap_half(a.y - b.y));
}

}  // namespace lattesda
