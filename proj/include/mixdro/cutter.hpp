#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixdro/master.hpp"

namespace mixdro {

struct TrainOptions {
    double tolerance = 1e-6;          // relative gap UB - LB vs max(1, |UB|)
    int max_iterations = 200;
    double time_limit = 0.0;          // seconds, <= 0 disables
    std::optional<ActiveCutSet> initial_cuts;  // default: seed_cuts()
    SolveSettings solver;
    std::string dump_final_master;    // path; empty disables
};

struct IterationRecord {
    int iter = 0;
    double lb = 0.0;  // best lower bound so far (masters are relaxations)
    double ub = 0.0;  // best certified upper bound so far
    int cuts_added = 0;
    double master_ms = 0.0;
    double oracle_ms = 0.0;
};

struct SolveLog {
    enum class Status { converged, iteration_limit, time_limit };

    std::vector<IterationRecord> iterations;
    Status status = Status::converged;
    double objective = 0.0;  // final UB
    int total_cuts = 0;

    // Final master solution, for certificate checks and diagnostics.
    double final_lambda = 0.0;
    std::vector<double> final_s;
    std::vector<double> final_excess;  // per-sample max(violation, 0)
    std::map<std::tuple<int, int, int>, std::vector<double>> final_q;  // (n, piece, flip)

    std::string to_csv() const;  // iter,lb,ub,cuts,master_ms,oracle_ms
};

std::string to_string(SolveLog::Status s);

ActiveCutSet seed_cuts(const Dataset& dataset, const ModelConfig& config);

// Cutting-plane training loop: alternates master solves over the active cut
// set with separation-oracle sweeps until the certified gap closes.
std::pair<Hypothesis, SolveLog> train(const Dataset& dataset, const ModelConfig& config,
                                      const TrainOptions& options = {});

}  // namespace mixdro
