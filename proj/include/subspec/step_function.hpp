// Nondecreasing right-continuous step functions on [0,1] with exact
// rational breakpoints. L1 distances are computed by merging breakpoints,
// so interval arithmetic carries no floating error.

#pragma once

#include <utility>
#include <vector>

#include "subspec/rational.hpp"

namespace subspec {

class StepFunction {
public:
    /// breakpoints: 0 = x0 < x1 < ... < xk = 1; values: v1 <= ... <= vk,
    /// where vj is taken on [x_{j-1}, x_j). Adjacent equal values are
    /// merged into a single run.
    StepFunction(std::vector<Rational> breakpoints, std::vector<double> values);

    static StepFunction constant(double v);

    /// N equal steps of width 1/N carrying the given ascending values.
    static StepFunction from_sorted_values(const std::vector<double>& values);

    /// Steps given as (value, length) pairs with strictly increasing values
    /// and total length <= 1; the last step is extended to reach x = 1.
    static StepFunction from_partial_steps(const std::vector<std::pair<double, Rational>>& steps);

    const std::vector<Rational>& breakpoints() const { return x_; }
    const std::vector<double>& values() const { return v_; }
    size_t step_count() const { return v_.size(); }

    double value_at(const Rational& x) const;  // x in [0,1)

    friend bool operator==(const StepFunction& a, const StepFunction& b) {
        return a.x_ == b.x_ && a.v_ == b.v_;
    }

private:
    StepFunction() = default;
    std::vector<Rational> x_;
    std::vector<double> v_;
};

/// Exact integral of |F - G| over [0,1] (exact interval lengths; values are
/// doubles).
double l1_distance(const StepFunction& F, const StepFunction& G);

}  // namespace subspec
