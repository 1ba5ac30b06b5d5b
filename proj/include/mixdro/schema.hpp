#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "mixdro/common.hpp"

namespace mixdro {

// Drop-one one-hot layout: group m with k_m levels occupies columns
// [offset_m, offset_m + k_m - 1) of the z block; the all-zeros block is the
// reference level (level index 0).
struct DiscreteSchema {
    std::vector<int> group_sizes;  // k_m >= 2
    std::vector<int> offsets;      // running sum of (k_m - 1)
    std::vector<std::string> group_names;              // optional, sized K when present
    std::vector<std::vector<std::string>> level_names; // optional, level_names[m].size() == k_m

    static DiscreteSchema from_sizes(std::vector<int> sizes);

    int K() const { return static_cast<int>(group_sizes.size()); }
    int Mz() const;
    void validate() const;

    // One-hot block <-> level index (0 = reference).
    int level_of(const Eigen::VectorXd& z, int group) const;
    std::vector<int> levels_of(const Eigen::VectorXd& z) const;
    Eigen::VectorXd z_from_levels(const std::vector<int>& levels) const;
};

struct GroundMetric {
    Norm x_norm = Norm::l1;
    double kappa_z = 1.0;
    double kappa_y = 1.0;  // kInf allowed and structural
    double p = 1.0;

    bool kappa_y_infinite() const { return is_inf(kappa_y); }
    void validate() const;
};

struct MixedSample {
    Eigen::VectorXd x;
    Eigen::VectorXd z;
    double y = 0.0;
};

struct Dataset {
    DiscreteSchema schema;
    int Mx = 0;
    Task task = Task::classification;
    std::vector<MixedSample> samples;

    int N() const { return static_cast<int>(samples.size()); }
    void validate() const;
};

double norm_value(const Eigen::VectorXd& v, Norm n);
double dual_norm_value(const Eigen::VectorXd& v, Norm n);

double dz(const Eigen::VectorXd& z, const Eigen::VectorXd& z_prime, const DiscreteSchema& schema,
          double p);
double dz_levels(const std::vector<int>& a, const std::vector<int>& b, double p);
double dy(double y, double y_prime, Task task);
double du(const Eigen::VectorXd& u, const Eigen::VectorXd& z_prime, const DiscreteSchema& schema,
          double p);
double ground_distance(const MixedSample& a, const MixedSample& b, const GroundMetric& metric,
                       const DiscreteSchema& schema, Task task);

}  // namespace mixdro
