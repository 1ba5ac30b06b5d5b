#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace mixdro {

enum class Task { classification, regression };

enum class Norm { l1, l2, linf };

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool is_inf(double v) { return v == kInf; }

std::string to_string(Task t);
std::string to_string(Norm n);
Task task_from_string(const std::string& s);
Norm norm_from_string(const std::string& s);

// Error taxonomy aligned with the CLI exit codes: usage 1, data 2, solver 3,
// limits-with-partial-output 4.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mixdro
