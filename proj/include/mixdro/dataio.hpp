#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mixdro/hypothesis.hpp"
#include "mixdro/schema.hpp"

namespace mixdro {

enum class ColumnKind { numeric, categorical, output };

struct RawTable {
    std::vector<std::string> names;
    std::vector<ColumnKind> kinds;
    std::vector<std::vector<std::string>> rows;  // rectangular; cells as read
    Task task = Task::classification;
    std::optional<nlohmann::json> schema_doc;  // present when loaded against a schema
    int dropped_rows = 0;  // rows discarded for missing cells ("" or "?")

    int output_column() const;
    void validate() const;
};

// Reads a comma-separated file with a header row.  Without a schema the last
// column is the output; a column is numeric when every cell parses as a
// number, and the task is regression for numeric outputs unless the values
// are exactly {-1, +1}.  With a schema, kinds, level sets and the task come
// from the document and every cell is checked against it.
RawTable load_csv(const std::string& path);
RawTable load_csv(const std::string& path, const std::string& schema_path);

struct EncodeOptions {
    bool scale_x_minmax = false;  // map each continuous column to [0, 1]
    // Overrides so evaluation data is mapped exactly like the training data.
    std::optional<std::pair<std::string, std::string>> labels;   // {-1 label, +1 label}
    std::optional<std::pair<double, double>> y_range;            // raw output range
    std::optional<std::pair<Eigen::VectorXd, Eigen::VectorXd>> x_affine;  // (offset, scale)
};

struct EncodedDataset {
    Dataset data;
    nlohmann::json schema_doc;  // canonical structural document (hash this)
    std::pair<std::string, std::string> labels;  // classification: {-1, +1} labels
    std::pair<double, double> y_range{-1.0, 1.0};  // regression: raw range used
    Eigen::VectorXd x_offset, x_scale;             // x_enc = (x_raw - offset) .* scale

    double encode_output(double raw) const;
    double decode_output(double enc) const;
};

// One-hot encodes categorical columns dropping the reference (first) level,
// maps classification outputs onto {-1, +1} by sorted label order, and scales
// regression outputs affinely onto [-1, 1].
EncodedDataset encode(const RawTable& table, const EncodeOptions& options = {});

struct SplitResult {
    Dataset train, test;
    std::vector<int> train_index, test_index;  // row indices into the source
};

// Deterministic shuffle split with |train| = floor(fraction * N).
SplitResult split(const Dataset& dataset, double fraction, unsigned seed);

nlohmann::json split_manifest(const SplitResult& s, unsigned seed, double fraction);
SplitResult split_from_manifest(const Dataset& dataset, const nlohmann::json& manifest);

void save_json(const nlohmann::json& doc, const std::string& path);
nlohmann::json load_json(const std::string& path);

}  // namespace mixdro
