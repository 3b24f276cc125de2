#include "subspec/step_function.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace subspec {

StepFunction::StepFunction(std::vector<Rational> breakpoints, std::vector<double> values) {
    if (breakpoints.size() < 2 || values.size() + 1 != breakpoints.size())
        throw std::invalid_argument("StepFunction: size mismatch");
    if (breakpoints.front() != Rational(0) || breakpoints.back() != Rational(1))
        throw std::invalid_argument("StepFunction: domain must be [0,1]");
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw std::invalid_argument("StepFunction: breakpoints not strictly increasing");
    for (size_t i = 0; i + 1 < values.size(); ++i)
        if (values[i] > values[i + 1])
            throw std::invalid_argument("StepFunction: values not nondecreasing");
    // Merge runs of equal values.
    x_.push_back(breakpoints.front());
    for (size_t i = 0; i < values.size(); ++i) {
        if (!v_.empty() && v_.back() == values[i]) {
            x_.back() = breakpoints[i + 1];
        } else {
            v_.push_back(values[i]);
            x_.push_back(breakpoints[i + 1]);
        }
    }
}

StepFunction StepFunction::constant(double v) {
    return StepFunction({Rational(0), Rational(1)}, {v});
}

StepFunction StepFunction::from_sorted_values(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("StepFunction: empty value list");
    const long long n = static_cast<long long>(values.size());
    std::vector<Rational> bp;
    bp.reserve(values.size() + 1);
    for (long long j = 0; j <= n; ++j) bp.emplace_back(j, n);
    return StepFunction(std::move(bp), values);
}

StepFunction StepFunction::from_partial_steps(
    const std::vector<std::pair<double, Rational>>& steps) {
    if (steps.empty()) throw std::invalid_argument("StepFunction: empty step list");
    std::vector<Rational> bp{Rational(0)};
    std::vector<double> vals;
    Rational pos(0);
    for (const auto& [value, len] : steps) {
        if (!(Rational(0) < len)) throw std::invalid_argument("StepFunction: non-positive step length");
        pos = pos + len;
        bp.push_back(pos);
        vals.push_back(value);
    }
    if (Rational(1) < pos) throw std::invalid_argument("StepFunction: total length exceeds 1");
    if (pos < Rational(1)) bp.back() = Rational(1);  // extend the top step
    return StepFunction(std::move(bp), std::move(vals));
}

double StepFunction::value_at(const Rational& x) const {
    if (x < Rational(0) || !(x < Rational(1))) throw std::out_of_range("StepFunction: x outside [0,1)");
    for (size_t i = 0; i < v_.size(); ++i)
        if (x < x_[i + 1]) return v_[i];
    return v_.back();
}

double l1_distance(const StepFunction& F, const StepFunction& G) {
    const auto& xf = F.breakpoints();
    const auto& xg = G.breakpoints();
    size_t i = 0, j = 0;
    Rational pos(0);
    double total = 0.0;
    while (i < F.step_count() && j < G.step_count()) {
        Rational next = xf[i + 1] < xg[j + 1] ? xf[i + 1] : xg[j + 1];
        total += std::abs(F.values()[i] - G.values()[j]) * (next - pos).to_double();
        pos = next;
        if (xf[i + 1] == pos) ++i;
        if (xg[j + 1] == pos) ++j;
    }
    return total;
}

}  // namespace subspec
