#pragma once

#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "mixdro/conic.hpp"
#include "mixdro/hypothesis.hpp"
#include "mixdro/losses.hpp"
#include "mixdro/oracle.hpp"
#include "mixdro/schema.hpp"

namespace mixdro {

enum class TrainMode { mixed, continuous_baseline };

std::string to_string(TrainMode m);
TrainMode mode_from_string(const std::string& s);

// Axis-aligned support for piecewise-affine formulations. The y range is
// consulted only for regression with finite kappa_y; classification outputs
// live on {-1,+1} regardless.
struct BoxSupport {
    Eigen::VectorXd x_lower, x_upper;
    bool has_y_range = false;
    double y_lower = 0.0, y_upper = 0.0;
};

struct ModelConfig {
    LossSpec loss;
    GroundMetric metric;
    double epsilon = 0.0;
    std::optional<BoxSupport> support;  // nullopt = unbounded
    double ridge_alpha = 0.0;
    TrainMode mode = TrainMode::mixed;
    bool include_intercept = true;

    void validate(const Dataset& dataset) const;

    // True when output shifts can never pay off inside the transport budget:
    // kappa_y is infinite outright, or so large relative to epsilon that the
    // affordable flip mass is below solver precision. Builders treat such
    // metrics structurally, keeping huge coefficients out of constraint rows.
    bool kappa_y_unbounded() const;
};

// Constraint-family index: piece < 0 selects the full loss (Lipschitz-class);
// flip = -1 marks the flipped-label copy (classification, finite kappa_y).
struct FamilyIndex {
    int piece = -1;
    int flip = +1;
};

std::vector<FamilyIndex> index_set(const ModelConfig& config, Task task);

struct Cut {
    int n = 0;
    int piece = -1;
    int flip = +1;
    std::vector<int> z_levels;
};

class ActiveCutSet {
  public:
    bool add(Cut cut);  // false if an identical cut is already present
    bool contains(const Cut& cut) const;
    const std::vector<Cut>& cuts() const { return cuts_; }
    int size() const { return static_cast<int>(cuts_.size()); }

  private:
    using Key = std::tuple<int, int, int, std::vector<int>>;
    static Key key(const Cut& c) { return {c.n, c.piece, c.flip, c.z_levels}; }
    std::vector<Cut> cuts_;
    std::set<Key> index_;
};

struct MasterVars {
    int beta0 = -1;
    std::vector<int> beta_x, beta_z;
    int lambda = -1;  // -1 when epsilon = 0 (empirical program, no transport dual)
    std::vector<int> s;
    int ridge = -1;
    // Support duals per (n, piece, flip); layout per entry:
    // [x upper 0..Mx) [x lower 0..Mx) [y upper] [y lower], y rows present only
    // for regression with a y range and finite kappa_y.
    std::map<std::tuple<int, int, int>, std::vector<int>> q;

    Hypothesis hypothesis_at(const std::vector<double>& x) const;
    double lambda_at(const std::vector<double>& x) const;
    std::vector<double> q_at(const std::vector<double>& x, int n, int piece, int flip) const;
};

struct MasterProgram {
    ConicProgram program;
    MasterVars vars;
};

// Structural facts shared by the master builder, the fixed-hypothesis
// evaluator, and the cut loop.
struct FormulationShape {
    bool erm = false;     // epsilon = 0: empirical program, no transport dual
    bool pwa = false;
    bool flips = false;   // flipped-label families present
    bool boxed = false;
    bool y_rows = false;  // support duals carry y-range components
    int qdim = 0;
    std::vector<std::pair<double, double>> pieces;  // empty for Lipschitz-class
    double lip = 0.0;
};

FormulationShape shape_of(const Dataset& dataset, const ModelConfig& config);

// (d - C xi^n)_r for the box support; rows are the x-upper block, the x-lower
// block, then the optional y pair.
double support_slack(const BoxSupport& box, const MixedSample& sample, int mx, int r);

MasterProgram build_master(const Dataset& dataset, const ModelConfig& config,
                           const ActiveCutSet& cuts);

// Folds one-hot blocks into the continuous part. keep_groups lists discrete
// groups to keep; empty folds everything (K' = 0).
Dataset fold_discrete(const Dataset& dataset, const std::vector<int>& keep_groups = {});

MasterProgram build_continuous_baseline(const Dataset& dataset, const ModelConfig& config);

// Mean loss of the hypothesis on the dataset (margin loss for classification,
// residual loss for regression).
double empirical_loss(const Dataset& dataset, const LossSpec& loss, const Hypothesis& hyp);

struct WorstCaseDetail {
    double value = 0.0;
    double lambda = 0.0;
    std::vector<double> s;
    int iterations = 0;
    int cuts = 0;
};

// Worst-case expected loss over the ambiguity ball at a frozen hypothesis,
// computed by cut generation over pure LPs (SOCPs for l2 ground norms).
WorstCaseDetail worst_case_detail(const Dataset& dataset, const ModelConfig& config,
                                  const Hypothesis& hyp, double tolerance = 1e-9);
double evaluate_worst_case(const Dataset& dataset, const ModelConfig& config,
                           const Hypothesis& hyp);

// Inner-constraint family for sample n at frozen (hypothesis, lambda, support
// duals), in the form the separation oracle consumes. q_values follows the
// MasterVars::q layout and is empty for unbounded supports.
ConstraintGroup inner_group(const Dataset& dataset, const ModelConfig& config, int n,
                            FamilyIndex fam, const Hypothesis& hyp, double lambda,
                            const std::vector<double>& q_values);

}  // namespace mixdro
