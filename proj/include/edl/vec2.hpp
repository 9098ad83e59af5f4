#pragma once

#include <array>
#include <cmath>

namespace edl {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2& operator+=(const Vec2& o) noexcept { x += o.x; y += o.y; return *this; }
    constexpr Vec2& operator-=(const Vec2& o) noexcept { x -= o.x; y -= o.y; return *this; }
    constexpr Vec2& operator*=(double s) noexcept { x *= s; y *= s; return *this; }
};

constexpr Vec2 operator+(Vec2 a, const Vec2& b) noexcept { return a += b; }
constexpr Vec2 operator-(Vec2 a, const Vec2& b) noexcept { return a -= b; }
constexpr Vec2 operator*(Vec2 a, double s) noexcept { return a *= s; }
constexpr Vec2 operator*(double s, Vec2 a) noexcept { return a *= s; }
constexpr double dot(const Vec2& a, const Vec2& b) noexcept { return a.x * b.x + a.y * b.y; }
constexpr double cross(const Vec2& a, const Vec2& b) noexcept { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& a) noexcept { return std::hypot(a.x, a.y); }

/// Row-major 2x2 matrix; m[i][j] = a_ij.
struct Mat2 {
    std::array<std::array<double, 2>, 2> m{{{0.0, 0.0}, {0.0, 0.0}}};

    static constexpr Mat2 identity() noexcept { return Mat2{{{{1.0, 0.0}, {0.0, 1.0}}}}; }
    static constexpr Mat2 diag(double a, double b) noexcept { return Mat2{{{{a, 0.0}, {0.0, b}}}}; }

    constexpr double operator()(int i, int j) const noexcept { return m[i][j]; }
    constexpr Vec2 apply(const Vec2& v) const noexcept {
        return {m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y};
    }
    constexpr Mat2 symmetrized() const noexcept {
        const double off = 0.5 * (m[0][1] + m[1][0]);
        return Mat2{{{{m[0][0], off}, {off, m[1][1]}}}};
    }
};

constexpr Mat2 operator+(const Mat2& a, const Mat2& b) noexcept {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
    return r;
}
constexpr Mat2 operator*(double s, const Mat2& a) noexcept {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = s * a.m[i][j];
    return r;
}

/// u^T A v
constexpr double bilinear(const Vec2& u, const Mat2& a, const Vec2& v) noexcept { return dot(u, a.apply(v)); }

/// Smallest eigenvalue of the symmetric part.
inline double min_eigenvalue(const Mat2& a) noexcept {
    const Mat2 s = a.symmetrized();
    const double mean = 0.5 * (s.m[0][0] + s.m[1][1]);
    const double half_diff = 0.5 * (s.m[0][0] - s.m[1][1]);
    return mean - std::hypot(half_diff, s.m[0][1]);
}

/// Derivative tensor of a 2x2 matrix field: d[i][j][k] = d_k a_ij.
using MatGrad = std::array<std::array<std::array<double, 2>, 2>, 2>;

}  // namespace edl
