#pragma once

#include <vector>

#include "mixdro/losses.hpp"
#include "mixdro/schema.hpp"

namespace mixdro {

// One family of inner constraints, indexed by the discrete value z:
//
//   f(w0 + w.z) - h_const - lambda_kz * mismatch(z, anchor)^(1/p) <= sigma_n
//
// where f is either the full loss or one affine piece of it. w folds every
// z-independent quantity into scalars, so the oracle needs no access to the
// master program.
struct ConstraintGroup {
    int n = 0;             // owning sample, carried through to cuts
    Eigen::VectorXd w;     // coefficient of z (length Mz)
    double w0 = 0.0;       // constant part of the inner affine map
    LossSpec loss;
    bool full_loss = true; // false: evaluate the (piece_a, piece_b) piece instead
    double piece_a = 0.0;
    double piece_b = 0.0;
    double h_const = 0.0;  // z-independent offsets (flip penalty, support duals)
    double lambda_kz = 0.0;  // lambda * kappa_z; kInf pins z to the anchor
    double p = 1.0;
    std::vector<int> anchor;  // level indices of z^n

    double f(double e) const { return full_loss ? eval(loss, e) : piece_a * e + piece_b; }
    double violation_at(const std::vector<int>& levels, const DiscreteSchema& schema,
                        double sigma_n) const;
};

struct ViolatedCut {
    std::vector<int> z_levels;  // arg max over Z, one level index per group
    double violation = 0.0;
    int mismatch_count = 0;
};

// Prefix-flip search over per-group best alternatives for both signs of the
// inner affine map: linear in the one-hot width plus K log K for the sort.
// Ties resolve toward the anchor, then toward lower group and level indices.
ViolatedCut most_violated(const ConstraintGroup& g, const DiscreteSchema& schema, double sigma_n);

// Exhaustive reference over all prod_m k_m values of z. Guarded to 1e6
// candidates; intended for tests and certification only.
ViolatedCut brute_force(const ConstraintGroup& g, const DiscreteSchema& schema, double sigma_n);

}  // namespace mixdro
