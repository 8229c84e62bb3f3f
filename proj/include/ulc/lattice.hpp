#pragma once

#include <cmath>
#include <cstdlib>
#include <utility>

#include "ulc/geometry.hpp"

namespace ulc {

// Explicit 2x2 generator of a (possibly faded, scaled) lattice level.
// Columns of `generator` are the basis vectors.
struct LatticeBasis {
    Mat2 generator;
    double volume = 1.0;

    LatticeBasis() = default;
    explicit LatticeBasis(const Mat2& g) : generator(g), volume(std::fabs(g.det())) {}

    LatticeBasis faded(const Mat2& channel) const { return LatticeBasis(channel * generator); }
    LatticeBasis scaled(double s) const { return LatticeBasis(generator * s); }
};

// Lagrange (Gauss) reduction. Returns a basis of the same lattice with
// ||b1|| <= ||b2|| and b1.b2 <= 0, |2 b1.b2| <= ||b1||^2.
inline Mat2 lagrange_reduce(const Mat2& g) {
    Vec2 b1 = g.col(0), b2 = g.col(1);
    if (b1.norm2() > b2.norm2()) std::swap(b1, b2);
    for (int iter = 0; iter < 64; ++iter) {
        const double mu = std::round(b2.dot(b1) / b1.norm2());
        b2 -= mu * b1;
        if (b2.norm2() >= b1.norm2()) break;
        std::swap(b1, b2);
    }
    if (b1.dot(b2) > 0) b2 = -b2;
    return Mat2::from_columns(b1, b2);
}

// Exact covering radius of a 2-D lattice: circumradius of the triangle
// (0, b1, b1+b2) on the reduced basis (the Voronoi cell's vertices).
inline double covering_radius(const LatticeBasis& basis) {
    const Mat2 r = lagrange_reduce(basis.generator);
    const Vec2 b1 = r.col(0), b2 = r.col(1);
    return b1.norm() * b2.norm() * (b1 + b2).norm() / (2.0 * basis.volume);
}

// Exact CVP in dimension 2 by bounded coefficient enumeration around the
// Babai point; the box bound |c_i - t_i| <= ||row_i(R^-1)|| * r comes from
// r >= ||y - Rc|| >= ||row_i(R^-1)||^-1 |t_i - c_i|. Ties are broken toward
// the lexicographically smallest lattice point.
class CvpSolver {
  public:
    explicit CvpSolver(const LatticeBasis& basis)
        : reduced_(lagrange_reduce(basis.generator)), inv_(reduced_.inverse()) {
        row_norm_[0] = std::hypot(inv_.a, inv_.b);
        row_norm_[1] = std::hypot(inv_.c, inv_.d);
    }

    Vec2 closest(const Vec2& y) const {
        const Vec2 t = inv_ * y;
        const double c0 = std::round(t.x), c1 = std::round(t.y);
        Vec2 best = reduced_ * Vec2{c0, c1};
        double best_d2 = (y - best).norm2();
        const double r = std::sqrt(best_d2);
        const int k0 = static_cast<int>(std::floor(row_norm_[0] * r)) + 1;
        const int k1 = static_cast<int>(std::floor(row_norm_[1] * r)) + 1;
        for (int i = -k0; i <= k0; ++i) {
            for (int j = -k1; j <= k1; ++j) {
                const Vec2 cand = reduced_ * Vec2{c0 + i, c1 + j};
                const double d2 = (y - cand).norm2();
                const double tol = 1e-12 * (1.0 + best_d2);
                if (d2 < best_d2 - tol) {
                    best_d2 = d2;
                    best = cand;
                } else if (d2 <= best_d2 + tol && lex_less(cand, best)) {
                    best = cand;
                }
            }
        }
        return best;
    }

    Vec2 reduce(const Vec2& y) const { return y - closest(y); }

  private:
    static bool lex_less(const Vec2& u, const Vec2& v) {
        if (u.x != v.x) return u.x < v.x;
        return u.y < v.y;
    }

    Mat2 reduced_;
    Mat2 inv_;
    double row_norm_[2];
};

inline Vec2 closest_point(const LatticeBasis& basis, const Vec2& y) {
    return CvpSolver(basis).closest(y);
}

// Representative of y in the Voronoi fundamental region: y - closest(y).
inline Vec2 mod_lattice(const LatticeBasis& basis, const Vec2& y) {
    return CvpSolver(basis).reduce(y);
}

// Volume-to-noise ratio V(L)^(2/n) / sigma^2 with n = 2.
inline double vnr(const LatticeBasis& basis, double sigma) {
    return basis.volume / (sigma * sigma);
}

// Threshold normalized log-volume (bits) of Eq.-style Poltyrev limit:
// (n/2) log2(2 pi e sigma^2 D^(2/n)).
inline double poltyrev_limit_logvol(double sigma, double det_target = 1.0, int n = 2) {
    const double two_pi_e = 17.079468445347132465976923729959;
    return 0.5 * n * std::log2(two_pi_e * sigma * sigma *
                               std::pow(det_target, 2.0 / n));
}

// Distance to the Poltyrev limit in dB for a code of normalized log-volume
// `logvol_bits` (per n dimensions): 10 log10(gamma * D^(2/n) / 2 pi e).
// 0 dB is the limit itself.
inline double poltyrev_gap_db(double logvol_bits, double sigma, double det_target = 1.0,
                              int n = 2) {
    const double two_pi_e = 17.079468445347132465976923729959;
    const double gamma = std::pow(2.0, 2.0 * logvol_bits / n) / (sigma * sigma);
    return 10.0 * std::log10(gamma * std::pow(det_target, 2.0 / n) / two_pi_e);
}

}  // namespace ulc
