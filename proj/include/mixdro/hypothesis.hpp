#pragma once

#include <nlohmann/json.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "mixdro/losses.hpp"
#include "mixdro/schema.hpp"

namespace mixdro {

struct Hypothesis {
    double beta0 = 0.0;
    Eigen::VectorXd beta_x;
    Eigen::VectorXd beta_z;

    double score(const MixedSample& s) const {
        return beta0 + beta_x.dot(s.x) + beta_z.dot(s.z);
    }
};

std::uint64_t fnv1a64(const std::string& bytes);

nlohmann::json metric_to_json(const GroundMetric& m);
GroundMetric metric_from_json(const nlohmann::json& j);
nlohmann::json loss_to_json(const LossSpec& l);
LossSpec loss_from_json(const nlohmann::json& j);

// Canonical schema document shared by dataset schema files and model files:
// {"task": ..., "continuous": [names], "groups": [{"name", "levels"}],
//  "output": {"name"}}. encode() enriches it with the label map or the raw
// output range so predictions can be mapped back.
nlohmann::json schema_to_json(const DiscreteSchema& schema, int Mx, Task task,
                              const std::vector<std::string>& x_names = {},
                              const std::string& output_name = "y");
DiscreteSchema schema_from_json(const nlohmann::json& doc, int* Mx_out = nullptr,
                                Task* task_out = nullptr);
std::uint64_t schema_hash(const nlohmann::json& doc);

struct ModelFile {
    Hypothesis hypothesis;
    Task task = Task::classification;
    GroundMetric metric;
    LossSpec loss;
    double epsilon = 0.0;
    double ridge_alpha = 0.0;
    std::string mode = "mixed";  // "mixed" or "continuous_baseline"
    nlohmann::json schema_doc;
    std::uint64_t hash = 0;
    std::optional<std::pair<double, double>> y_range;  // raw output range (regression)
    std::optional<std::pair<std::string, std::string>> labels;  // {-1 label, +1 label}
    std::optional<std::pair<Eigen::VectorXd, Eigen::VectorXd>> x_affine;  // (offset, scale)
    nlohmann::json extra;  // solve summary, provenance of the run

    nlohmann::json to_json() const;
    static ModelFile from_json(const nlohmann::json& j);
    void save(const std::string& path) const;
    static ModelFile load(const std::string& path);
};

}  // namespace mixdro
