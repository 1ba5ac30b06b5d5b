#pragma once

#include <vector>

namespace mixdro {

double mean(const std::vector<double>& v);
double sample_std(const std::vector<double>& v);  // n-1 normalization

// Regularized incomplete beta function I_x(a, b), used for t-distribution
// tail probabilities.
double regularized_incomplete_beta(double a, double b, double x);

struct PairedTestResult {
    double t = 0.0;
    double df = 0.0;
    double p = 1.0;  // two-sided
    bool significant = false;  // p < 0.05
};

// Two-sided paired t-test on matched observations.
PairedTestResult paired_t_test(const std::vector<double>& a, const std::vector<double>& b);

// Spearman rank correlation with average ranks for ties; 0 when either side
// has no variation.
double spearman_rho(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace mixdro
