#pragma once

#include <Eigen/Dense>
#include <vector>

#include "mixdro/hypothesis.hpp"
#include "mixdro/losses.hpp"
#include "mixdro/schema.hpp"

namespace mixdro {

// One support point. x may be empty (fully discrete instances); z follows
// whatever coding the builder chose — the distance matrix, not the coding,
// carries the metric.
struct SupportAtom {
    Eigen::VectorXd x;
    Eigen::VectorXd z;
    double y = 0.0;
};

// Explicit finite support with pairwise ground distances. Entries may be
// +infinity (forbidden moves, e.g. output flips under kappa_y = inf).
struct FiniteSupport {
    std::vector<SupportAtom> atoms;
    Eigen::MatrixXd dist;

    int size() const { return static_cast<int>(atoms.size()); }
    void validate() const;

    static FiniteSupport from_atoms(std::vector<SupportAtom> atoms, Eigen::MatrixXd dist);
};

// Enumerates the full support of a fully discrete dataset (Mx = 0): every
// z-level combination crossed with {-1,+1} for classification, or with the
// observed outputs for regression (which requires kappa_y = inf, since a
// finite atom list cannot track continuously movable outputs).
FiniteSupport enumerate_support(const Dataset& dataset, const GroundMetric& metric);

// Empirical distribution of the dataset over the atoms of `support`.
Eigen::VectorXd empirical_weights(const Dataset& dataset, const FiniteSupport& support);

struct PrimalResult {
    double value = 0.0;
    Eigen::VectorXd q;      // worst-case mass per atom
    Eigen::MatrixXd plan;   // transport plan, rows = source atoms
    double cost = 0.0;      // transport cost spent by the plan
};

// Worst-case expected loss over the Wasserstein ball as an explicit transport
// linear program: maximize the transported loss subject to source marginals
// and a total-cost budget of epsilon.
PrimalResult worst_case_primal(const FiniteSupport& support, const Eigen::VectorXd& weights,
                               const Hypothesis& hyp, const LossSpec& loss, double epsilon);

}  // namespace mixdro
