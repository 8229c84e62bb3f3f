#pragma once

#include <cmath>
#include <vector>

#include "ulc/lattice.hpp"

namespace ulc {

// Density of Gaussian noise folded mod a 2-D lattice:
//   f(y) = sum_{p in L} (2 pi s^2)^{-1} exp(-|y - p|^2 / 2 s^2).
// The sum is truncated to lattice points within
//   R_trunc = reach*sigma + 2*covering_radius
// of the origin; queries are reduced to the Voronoi region first, so every
// term with |p - y_red| <= reach*sigma + covering_radius is included and the
// Gaussian tail bound keeps the relative truncation error below 1e-10 for
// the default reach of 8.
class AliasedDensity {
  public:
    AliasedDensity(const LatticeBasis& basis, double sigma, double reach = 8.0)
        : solver_(basis), sigma_(sigma) {
        const double rho = covering_radius(basis);
        const double radius = reach * sigma + 2.0 * rho;
        const Mat2 inv = basis.generator.inverse();
        // conservative coefficient box covering the ball
        const double k0 = std::hypot(inv.a, inv.b) * radius;
        const double k1 = std::hypot(inv.c, inv.d) * radius;
        const int m0 = static_cast<int>(std::floor(k0)) + 1;
        const int m1 = static_cast<int>(std::floor(k1)) + 1;
        for (int i = -m0; i <= m0; ++i) {
            for (int j = -m1; j <= m1; ++j) {
                const Vec2 p = basis.generator * Vec2{static_cast<double>(i),
                                                      static_cast<double>(j)};
                if (p.norm() <= radius + 1e-12) points_.push_back(p);
            }
        }
        inv_two_sigma2_ = 1.0 / (2.0 * sigma * sigma);
        log_norm_ = -std::log(2.0 * M_PI * sigma * sigma);
    }

    double sigma() const { return sigma_; }
    const std::vector<Vec2>& points() const { return points_; }

    // Natural log of f at y (y reduced internally). Computed by log-sum-exp,
    // finite for every input.
    double log_density(const Vec2& y) const {
        const Vec2 yr = solver_.reduce(y);
        double max_e = -1e300;
        for (const Vec2& p : points_) {
            const double e = -((yr - p).norm2()) * inv_two_sigma2_;
            if (e > max_e) max_e = e;
        }
        double acc = 0.0;
        for (const Vec2& p : points_) {
            acc += std::exp(-((yr - p).norm2()) * inv_two_sigma2_ - max_e);
        }
        return log_norm_ + max_e + std::log(acc);
    }

    double density(const Vec2& y) const { return std::exp(log_density(y)); }

    const CvpSolver& solver() const { return solver_; }

  private:
    CvpSolver solver_;
    double sigma_;
    double inv_two_sigma2_;
    double log_norm_;
    std::vector<Vec2> points_;
};

}  // namespace ulc
