#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ulc/fading.hpp"
#include "ulc/lattice.hpp"
#include "ulc/quadratic_field.hpp"

namespace ulc {

// Binary ideal partition chain Lambda_i = eta * psi((sqrt2)^i Z[sqrt2]),
// Lambda_0 > Lambda_1 > ... > Lambda_m. Each quotient has order 2 and
// volumes double level to level; Lambda_{i+2} = 2 Lambda_i.
class PartitionChain {
  public:
    PartitionChain(double eta, int depth) : eta_(eta), depth_(depth) {
        if (eta <= 0.0) throw std::invalid_argument("PartitionChain: eta must be positive");
        if (depth < 1) throw std::invalid_argument("PartitionChain: depth must be >= 1");
        bases_.reserve(depth + 1);
        for (int i = 0; i <= depth; ++i) bases_.push_back(make_basis(i, eta));
    }

    double eta() const { return eta_; }
    int depth() const { return depth_; }

    // Generator columns are the embeddings of (sqrt2)^i and (sqrt2)^(i+1).
    const LatticeBasis& basis(int level) const { return bases_.at(level); }
    const std::vector<LatticeBasis>& level_bases() const { return bases_; }

    LatticeBasis faded_basis(int level, const FadingRealization& fading) const {
        return basis(level).faded(fading.matrix());
    }

    double volume(int level) const { return basis(level).volume; }

    // Coset representative of Lambda_level / Lambda_{level+1}: eta*psi((sqrt2)^level).
    Vec2 coset_representative(int level) const { return embed(sqrt2_pow(level), eta_); }

    // d_prod(Lambda_level) = eta^2 * 2^level; the minimum is attained at units.
    double product_distance(int level) const {
        return eta_ * eta_ * std::pow(2.0, static_cast<double>(level));
    }

    // min over H in H_inf(D) of d_min(H Lambda_level) = sqrt(n) (D d_prod)^(1/n), n=2.
    double worst_case_min_distance(int level, double det_target = 1.0) const {
        return kSqrt2 * std::sqrt(det_target * product_distance(level));
    }

    static LatticeBasis make_basis(int level, double eta) {
        return LatticeBasis(Mat2::from_columns(embed(sqrt2_pow(level), eta),
                                               embed(sqrt2_pow(level + 1), eta)));
    }

  private:
    double eta_;
    int depth_;
    std::vector<LatticeBasis> bases_;
};

// Rectangular integer chain Z^2 / diag-scaled sublattices; the structureless
// baseline whose per-level capacities swing widely with the channel state.
// Level i doubles the volume by alternately stretching the axes:
// Lambda_0 = eta Z^2, Lambda_1 = eta (2Z x Z), Lambda_2 = eta (2Z x 2Z), ...
class IntegerChain {
  public:
    IntegerChain(double eta, int depth) : eta_(eta), depth_(depth) {
        for (int i = 0; i <= depth; ++i) {
            const int p = (i + 1) / 2, q = i / 2;
            bases_.push_back(LatticeBasis(
                Mat2::diagonal(eta * std::pow(2.0, p), eta * std::pow(2.0, q))));
        }
    }

    double eta() const { return eta_; }
    int depth() const { return depth_; }
    const LatticeBasis& basis(int level) const { return bases_.at(level); }

    Vec2 coset_representative(int level) const {
        // the axis stretched at level+1 carries the new coset
        const bool first_axis = (level % 2) == 0;
        const double step = eta_ * std::pow(2.0, static_cast<double>(level / 2));
        return first_axis ? Vec2{step, 0.0} : Vec2{0.0, step};
    }

  private:
    double eta_;
    int depth_;
    std::vector<LatticeBasis> bases_;
};

}  // namespace ulc
