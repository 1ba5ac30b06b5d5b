#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mixdro/common.hpp"
#include "mixdro/conic.hpp"

namespace mixdro {

enum class LossKind { logloss, smooth_hinge, hinge, huber, pinball, tau_insensitive };

std::string to_string(LossKind k);
LossKind loss_kind_from_string(const std::string& s);

// Univariate convex loss applied to the margin (classification) or the
// residual (regression). param carries the Huber delta or the pinball /
// tau-insensitive tau and is ignored by the parameter-free losses.
struct LossSpec {
    LossKind kind = LossKind::hinge;
    double param = 0.0;

    static LossSpec logloss() { return {LossKind::logloss, 0.0}; }
    static LossSpec smooth_hinge() { return {LossKind::smooth_hinge, 0.0}; }
    static LossSpec hinge() { return {LossKind::hinge, 0.0}; }
    static LossSpec huber(double delta);
    static LossSpec pinball(double tau);
    static LossSpec tau_insensitive(double tau);

    Task affinity() const;
    bool piecewise_affine() const;
    std::string name() const;
    void validate() const;
};

double eval(const LossSpec& loss, double e);
double lipschitz_modulus(const LossSpec& loss);

// Pieces (a_j, b_j) with loss(e) = max_j a_j * e + b_j. Only valid for
// piecewise-affine kinds.
std::vector<std::pair<double, double>> affine_pieces(const LossSpec& loss);

struct ConeUse {
    Cone cone;
    int rows;
};

struct EpigraphRecipe {
    int auxiliaries = 0;
    std::vector<ConeUse> members;
};

EpigraphRecipe epigraph(const LossSpec& loss);

// Appends constraints equivalent to eval(loss, e) <= r to the program and
// returns the indices of any auxiliary variables created.
std::vector<int> instantiate_epigraph(ConicProgram& program, const LossSpec& loss,
                                      const LinExpr& e, const LinExpr& r);

}  // namespace mixdro
