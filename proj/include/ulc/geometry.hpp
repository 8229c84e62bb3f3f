#pragma once

#include <array>
#include <cmath>
#include <ostream>

namespace ulc {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

inline std::ostream& operator<<(std::ostream& os, const Vec2& v) {
    return os << "(" << v.x << ", " << v.y << ")";
}

// Column-major 2x2 matrix: columns are c0 = (a, c), c1 = (b, d).
struct Mat2 {
    double a = 1.0, b = 0.0;
    double c = 0.0, d = 1.0;

    Mat2() = default;
    Mat2(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {}

    static Mat2 from_columns(const Vec2& c0, const Vec2& c1) {
        return {c0.x, c1.x, c0.y, c1.y};
    }
    static Mat2 diagonal(double d0, double d1) { return {d0, 0.0, 0.0, d1}; }
    static Mat2 identity() { return {}; }

    Vec2 col(int i) const { return i == 0 ? Vec2{a, c} : Vec2{b, d}; }

    double det() const { return a * d - b * c; }

    Mat2 inverse() const {
        const double idet = 1.0 / det();
        return {d * idet, -b * idet, -c * idet, a * idet};
    }

    Vec2 operator*(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    Mat2 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }

    // Smallest singular value; used to derive provable enumeration boxes.
    double smallest_singular_value() const {
        const double g11 = a * a + c * c;
        const double g22 = b * b + d * d;
        const double g12 = a * b + c * d;
        const double tr = g11 + g22;
        const double disc = std::sqrt(std::max(0.0, (g11 - g22) * (g11 - g22) + 4.0 * g12 * g12));
        return std::sqrt(std::max(0.0, 0.5 * (tr - disc)));
    }
};

}  // namespace ulc
