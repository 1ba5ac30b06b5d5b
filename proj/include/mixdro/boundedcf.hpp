#pragma once

#include "mixdro/master.hpp"

namespace mixdro {

// Monolithic reformulation of the robust objective for piecewise-affine losses
// under the p = 1 group metric.  Instead of enumerating discrete cells, each
// sample/piece constraint relaxes the discrete block to its drop-one simplex
// and dualizes the inner supremum, so the program size is polynomial in
// (samples, pieces, groups).
struct BoundedCFProgram {
    ConicProgram program;
    MasterVars vars;
    int dual_var_count = 0;  // delta/phi/rho variables across all constraint rows
};

// Exact number of decision variables build_bounded_cf creates for an instance.
int bounded_cf_variable_count(const Dataset& dataset, const ModelConfig& config);

// Requires a piecewise-affine loss, p = 1 and an unbounded or box support.
BoundedCFProgram build_bounded_cf(const Dataset& dataset, const ModelConfig& config);

// Solves one instance through both the cutting-plane path and the monolithic
// program and compares the optimal values.
struct EquivalenceReport {
    double mixed_value = 0.0;
    double bounded_value = 0.0;
    double gap = 0.0;  // bounded_value - mixed_value
    double mixed_ms = 0.0;
    double bounded_ms = 0.0;
    bool pass = false;
};

EquivalenceReport certify_equivalence(const Dataset& dataset, const ModelConfig& config,
                                      double tolerance = 1e-5);

}  // namespace mixdro
