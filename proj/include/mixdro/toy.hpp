#pragma once

#include <string>
#include <vector>

#include "mixdro/transport.hpp"

namespace mixdro {

// Two-point illustration study: a single sign-coded feature z in {-1, +1},
// labels agree with z with probability p_match, and the fixed hypothesis
// scores s(z) = z.  Per replicate the study records the empirical hinge loss,
// the worst case when z is kept discrete (transport over the four atoms), and
// the worst case when z is treated as a continuous feature.
struct ToyOptions {
    int replicates = 10000;
    std::vector<double> epsilons{0.85};
    unsigned seed = 0;
    int n_per_replicate = 10;
    double p_match = 0.8;
    double kappa_z = 1.0;
    double kappa_y = 1.0;
};

struct ToyCell {
    double epsilon = 0.0;
    double empirical_mean = 0.0, empirical_std = 0.0;
    double mixed_mean = 0.0, mixed_std = 0.0;
    double continuous_mean = 0.0, continuous_std = 0.0;
    // Worst-case masses on the atoms (z, y) in {(-1,-1), (-1,+1), (+1,-1), (+1,+1)}.
    Eigen::Vector4d atom_mass_mean = Eigen::Vector4d::Zero();
    Eigen::Vector4d atom_mass_std = Eigen::Vector4d::Zero();
};

struct ToyReport {
    ToyOptions options;
    std::vector<ToyCell> cells;  // one per epsilon, in input order

    std::string curve_csv() const;  // loss summaries per epsilon
    std::string bars_csv() const;   // atom mass summaries per epsilon
};

ToyReport run_toy_study(const ToyOptions& options = {});

}  // namespace mixdro
