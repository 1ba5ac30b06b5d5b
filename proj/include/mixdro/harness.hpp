#pragma once

#include <nlohmann/json.hpp>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mixdro/cutter.hpp"
#include "mixdro/dataio.hpp"
#include "mixdro/stats.hpp"
#include "mixdro/synthetic.hpp"

namespace mixdro {

// kappa_y grid entry: a literal value, the token K (the dataset's number of
// discrete groups), or infinity.
struct KappaYSpec {
    enum class Kind { value, dataset_k, infinite };
    Kind kind = Kind::infinite;
    double value = 0.0;

    static KappaYSpec of(double v) { return {Kind::value, v}; }
    static KappaYSpec dataset_k() { return {Kind::dataset_k, 0.0}; }
    static KappaYSpec infinite() { return {Kind::infinite, 0.0}; }
    static KappaYSpec parse(const std::string& token);
    double resolve(int dataset_groups) const;
    std::string str() const;
};

enum class Method { nom, mixf, r_nom, r_mixf, conf };
Method method_from_string(const std::string& s);
std::string to_string(Method m);

struct CVGrid {
    std::vector<double> epsilons{0.0, 1e-5, 1e-3, 1e-1};
    std::vector<KappaYSpec> kappa_ys{KappaYSpec::of(1.0), KappaYSpec::dataset_k(),
                                     KappaYSpec::infinite()};
    std::vector<double> alphas{0.0};
    int folds = 5;

    void validate() const;  // nonempty lists, folds >= 2, at most 10^4 combos
};

// Fraction misclassified (sign(score), ties to +1) or MSE on the encoded output.
double prediction_error(const Dataset& dataset, const Hypothesis& hyp);

std::string dataset_hash(const Dataset& dataset);

struct CVOutcome {
    ModelConfig chosen;  // fully resolved winning configuration
    double epsilon = 0.0, alpha = 0.0;
    KappaYSpec kappa_y = KappaYSpec::infinite();
    double cv_error = 0.0;  // mean validation error of the winner
    Hypothesis refit;
    SolveLog refit_log;
    std::vector<std::string> skipped;  // messages for combos that failed to train
};

// k-fold CV over the method's hyperparameter combos, then a refit on the full
// dataset with the winner.  The base config supplies the loss and metric
// skeleton; epsilon, kappa_y, alpha and mode are set per method and combo.
CVOutcome run_cv(const Dataset& dataset, Method method, const CVGrid& grid,
                 const ModelConfig& base, unsigned seed,
                 const TrainOptions& train_options = {});

struct SplitSpec {
    int count = 20;
    double fraction = 0.8;
    unsigned seed = 0;
};

struct SplitOutcome {
    int split = 0;
    unsigned seed = 0;
    Method method = Method::nom;
    bool ok = false;
    std::string error_message;
    double cv_error = 0.0;
    double test_error = 0.0;
    double epsilon = 0.0, alpha = 0.0;
    std::string kappa_y;
    double total_ms = 0.0;
    SolveLog refit_log;
};

struct MethodSummary {
    Method method = Method::nom;
    int completed = 0;
    double mean_error = 0.0, std_error = 0.0;
    double mean_ms = 0.0;
    PairedTestResult vs_baseline;  // against the first method, common splits
};

struct BenchmarkReport {
    std::string data_hash;
    Task task = Task::classification;
    SplitSpec splits;
    CVGrid grid;
    std::vector<Method> methods;
    std::vector<SplitOutcome> cells;  // |methods| x splits.count
    std::vector<MethodSummary> summaries;

    const SplitOutcome& cell(Method m, int split) const;
    nlohmann::json to_json() const;
    std::string table_csv() const;
    void write(const std::string& out_dir) const;  // report.json, table.csv, log/
};

BenchmarkReport run_benchmark(const Dataset& dataset, const std::vector<Method>& methods,
                              const SplitSpec& splits, const CVGrid& grid,
                              const ModelConfig& base, int jobs = 0,
                              const TrainOptions& train_options = {});

struct TreatmentOptions {
    SyntheticSpec spec;  // classification synthetic source
    std::vector<int> treated_counts;
    std::vector<double> epsilons{0.005, 0.01, 0.02, 0.05, 0.1};
    int replicates = 100;
    int test_n = 2000;
    unsigned seed = 0;
    int jobs = 0;
};

struct TreatmentPoint {
    double epsilon = 0.0;
    int treated = 0;
    double mean_loss = 0.0, std_loss = 0.0;
};

struct TreatmentReport {
    TreatmentOptions options;
    std::vector<TreatmentPoint> points;
    std::vector<std::pair<double, double>> spearman;  // (epsilon, rho of loss vs treated)

    std::string curve_csv() const;
};

// Treats the first `treated` discrete groups as discrete and folds the rest
// into continuous columns, then trains the robust model and measures
// out-of-sample loss on a fresh draw from the planted model.
TreatmentReport run_feature_treatment_study(const TreatmentOptions& options);

// Bounded worker pool over [0, task_count); tasks must write disjoint slots.
void run_parallel(int jobs, int task_count, const std::function<void(int)>& task);

}  // namespace mixdro
