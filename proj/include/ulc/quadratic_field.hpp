#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>

#include "ulc/geometry.hpp"

namespace ulc {

inline constexpr double kSqrt2 = 1.4142135623730950488016887242097;

// Element a + b*sqrt(2) of Z[sqrt2], the ring of integers of Q(sqrt2).
struct QuadInt {
    std::int64_t a = 0;
    std::int64_t b = 0;

    QuadInt() = default;
    QuadInt(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {}

    QuadInt operator+(const QuadInt& o) const { return {a + o.a, b + o.b}; }
    QuadInt operator-(const QuadInt& o) const { return {a - o.a, b - o.b}; }
    QuadInt operator-() const { return {-a, -b}; }
    QuadInt operator*(const QuadInt& o) const {
        return {a * o.a + 2 * b * o.b, a * o.b + b * o.a};
    }
    bool operator==(const QuadInt& o) const { return a == o.a && b == o.b; }
    bool operator!=(const QuadInt& o) const { return !(*this == o); }

    // Galois conjugate a - b*sqrt(2).
    QuadInt conj() const { return {a, -b}; }

    double value() const { return static_cast<double>(a) + static_cast<double>(b) * kSqrt2; }
    double conj_value() const { return static_cast<double>(a) - static_cast<double>(b) * kSqrt2; }
};

inline std::ostream& operator<<(std::ostream& os, const QuadInt& q) {
    return os << q.a << (q.b < 0 ? "" : "+") << q.b << "*sqrt2";
}

// Field norm N(a + b*sqrt2) = a^2 - 2 b^2. Multiplicative; equals the product
// of the two embedding coordinates.
inline std::int64_t field_norm(const QuadInt& q) { return q.a * q.a - 2 * q.b * q.b; }

// Fundamental unit 1 + sqrt2 (norm -1).
inline QuadInt fundamental_unit() { return {1, 1}; }

// (sqrt2)^i as a ring element: 2^(i/2) for even i, 2^((i-1)/2)*sqrt2 for odd.
inline QuadInt sqrt2_pow(int i) {
    QuadInt q{1, 0};
    for (int j = 0; j < i; ++j) q = q * QuadInt{0, 1};
    return q;
}

// Canonical embedding psi(a + b*sqrt2) = (a + b*sqrt2, a - b*sqrt2), scaled by eta.
inline Vec2 embed(const QuadInt& q, double eta = 1.0) {
    return {eta * q.value(), eta * q.conj_value()};
}

// Log-unit lattice of Q(sqrt2): rank 1, generated by (log eps, -log eps) inside
// the hyperplane x1 + x2 = 0.
struct UnitGroupData {
    QuadInt fundamental_unit{1, 1};
    double log_unit = 0.88137358701954302523260932497979;  // log(1 + sqrt2)
    double rho = 0.0;                                      // covering radius

    UnitGroupData() { rho = 0.5 * kSqrt2 * log_unit; }
};

inline double log_unit_covering_radius() { return UnitGroupData{}.rho; }

struct UnitReduction {
    int k = 0;         // unit exponent absorbed
    double h_reduced;  // h * (1+sqrt2)^(-k)
};

// Absorb units: pick k minimizing |(log h - k log eps, -log h + k log eps)|,
// i.e. k = round(log h / log eps). The reduced h satisfies
// |(log h', -log h')| <= rho.
inline UnitReduction unit_reduce(double h) {
    const UnitGroupData u;
    const double t = std::log(h) / u.log_unit;
    const int k = static_cast<int>(std::lround(t));
    return {k, h * std::exp(-static_cast<double>(k) * u.log_unit)};
}

// Extreme points of the per-level capacity over the compound set (h1 best/worst
// flips with the level): h1 = 1 and h2 = sqrt(1 + sqrt2).
struct ExtremeChannels {
    double h1 = 1.0;
    double h2 = 1.5537739740300374059703459654596;
};

inline ExtremeChannels extreme_channels() { return {}; }

}  // namespace ulc
