#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mixdro/common.hpp"

namespace mixdro {

// Sparse affine expression sum_i coef_i * x_i + constant. Duplicate variable
// terms are allowed and accumulate.
struct LinExpr {
    std::vector<std::pair<int, double>> terms;
    double constant = 0.0;

    LinExpr() = default;
    LinExpr(double c) : constant(c) {}  // NOLINT: implicit by design

    static LinExpr variable(int idx, double coef = 1.0) {
        LinExpr e;
        e.terms.emplace_back(idx, coef);
        return e;
    }

    LinExpr& add(int var, double coef) {
        if (coef != 0.0) terms.emplace_back(var, coef);
        return *this;
    }

    LinExpr& operator+=(const LinExpr& o) {
        terms.insert(terms.end(), o.terms.begin(), o.terms.end());
        constant += o.constant;
        return *this;
    }
    LinExpr& operator-=(const LinExpr& o) {
        for (const auto& [v, c] : o.terms) terms.emplace_back(v, -c);
        constant -= o.constant;
        return *this;
    }
    LinExpr& operator*=(double k) {
        for (auto& [v, c] : terms) c *= k;
        constant *= k;
        return *this;
    }
    friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
    friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
    friend LinExpr operator*(double k, LinExpr a) { return a *= k; }
    friend LinExpr operator-(LinExpr a) { return a *= -1.0; }

    double value_at(const std::vector<double>& x) const;
};

// Cone memberships over vectors of affine rows. Semantics per block v:
//   zero:    v = 0
//   nonneg:  v >= 0 componentwise
//   soc:     v[0] >= ||v[1:]||_2
//   rsoc:    2 v[0] v[1] >= ||v[2:]||_2^2, v[0], v[1] >= 0
//   expcone: v[2] >= v[1] * exp(v[0] / v[1]), v[1] > 0 (with the usual closure)
enum class Cone { zero, nonneg, soc, rsoc, expcone };

std::string to_string(Cone c);
Cone cone_from_string(const std::string& s);

struct ConeBlock {
    Cone cone;
    std::vector<LinExpr> rows;
};

enum class SolveStatus { optimal, infeasible, unbounded, numeric_limit, iteration_limit };

std::string to_string(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::numeric_limit;
    double objective = 0.0;
    std::vector<double> x;  // primal values, present iff status == optimal
    double solve_time_ms = 0.0;
    int iterations = 0;
    std::string diagnostics;
};

struct SolveSettings {
    double tolerance = 1e-8;
    int max_iterations = 200;
    double time_limit = 0.0;  // seconds, <= 0 disables
    bool verbose = false;
};

class ConicProgram {
  public:
    int add_var(std::string name = "");
    std::vector<int> add_vars(const std::string& prefix, int n);
    int num_vars() const { return static_cast<int>(names_.size()); }
    const std::string& var_name(int idx) const { return names_.at(idx); }

    void obj_add(int var, double coef);
    void obj_add(const LinExpr& e);
    void obj_add_constant(double c) { obj_const_ += c; }
    double obj_coefficient(int var) const { return obj_.at(var); }
    double obj_constant() const { return obj_const_; }

    // Returns the index of the added block.
    int add_block(Cone cone, std::vector<LinExpr> rows);
    int add_eq_zero(LinExpr e);
    int add_nonneg(LinExpr e);
    int add_le(LinExpr lhs, const LinExpr& rhs);  // lhs <= rhs

    // Encodes the dual-norm constraint ||vec||_* <= bound where `norm` names
    // the primal norm: l1 -> linf rows, l2 -> one SOC block, linf -> l1 with
    // absolute-value auxiliaries. Returns the indices of the blocks added.
    std::vector<int> add_dual_norm_row(const std::vector<LinExpr>& vec, const LinExpr& bound,
                                       Norm norm);

    const std::vector<ConeBlock>& blocks() const { return blocks_; }
    int num_rows() const;

    double objective_at(const std::vector<double>& x) const;
    bool feasible_at(const std::vector<double>& x, double tol = 1e-8) const;

    // Line-oriented debug listing; parse() inverts dump() exactly.
    std::string dump() const;
    static ConicProgram parse(const std::string& text);

  private:
    std::vector<std::string> names_;
    std::vector<double> obj_;
    double obj_const_ = 0.0;
    std::vector<ConeBlock> blocks_;
};

// Solves via the Clarabel backend. MIXDRO_SOLVER_TOL, when set, overrides
// settings.tolerance. Backend trouble is reported through SolveResult::status
// and diagnostics, never an exception.
SolveResult solve(const ConicProgram& program, const SolveSettings& settings = {});

}  // namespace mixdro
