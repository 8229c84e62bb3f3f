#pragma once

#include <cmath>

#include "ulc/geometry.hpp"

namespace ulc {

// One realization H = diag(h*sqrt(D), sqrt(D)/h) from the compound set
// H_inf(D); det H = D, and D = 1 gives det H = 1 exactly.
struct FadingRealization {
    double h = 1.0;
    double det_target = 1.0;

    FadingRealization() = default;
    explicit FadingRealization(double h_, double det_target_ = 1.0)
        : h(h_), det_target(det_target_) {}

    Mat2 matrix() const {
        const double s = std::sqrt(det_target);
        return Mat2::diagonal(h * s, s / h);
    }
};

}  // namespace ulc
