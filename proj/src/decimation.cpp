#include "subspec/decimation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace subspec {

double poly_alpha(RenormPoint p, int d) {
    return (p.mu + p.lambda) * ((d - 1) * p.lambda - p.mu) + 1 - p.lambda;
}
double poly_linear(RenormPoint p, int d) { return p.mu - (d - 1) * p.lambda - 1; }
double poly_quad(RenormPoint p, int d) {
    return p.mu * p.mu - (d - 1) * p.lambda * p.lambda - (d - 2) * p.lambda * p.mu + p.lambda - 1;
}
double poly_a1(RenormPoint p) { return p.mu + p.lambda - 1; }
double poly_b2(RenormPoint p) { return p.mu + p.lambda + 1; }
double poly_phi_cap(RenormPoint p, int d) {
    return p.mu * p.mu - 1 - (d - 1) * p.lambda * p.mu - d * p.lambda * p.lambda;
}

double adjacency_map(double zeta, int d) { return zeta * zeta - (d - 1) * zeta - (d + 1); }
double laplacian_map(double zeta, int d) { return zeta * (d + 3 - zeta); }

RenormPoint renormalize(RenormPoint p, int d) {
    const double den = poly_linear(p, d) * poly_quad(p, d);
    if (std::abs(den) < 1e-12) throw std::domain_error("renormalize: singular denominator");
    const double la2 = p.lambda * p.lambda;
    const double mu_num =
        d * la2 *
        ((d - 1) * p.lambda * p.lambda + (d - 2) * p.lambda * p.mu - p.mu * p.mu + p.mu);
    return {p.mu + mu_num / den, la2 * poly_a1(p) / den};
}

RenormPoint renormalize_unfactored(RenormPoint p, int d) {
    const double a = poly_alpha(p, d);
    const double den = a * (a + (d + 1) * p.lambda);
    if (std::abs(den) < 1e-12) throw std::domain_error("renormalize: singular denominator");
    const double la2 = p.lambda * p.lambda;
    const double mu_term = (a + d * p.lambda) * d * (p.mu + p.lambda) - d * p.lambda;
    const double la_term = a + p.lambda - d * p.lambda * (p.mu + p.lambda);
    return {p.mu + la2 / den * mu_term, -la2 / den * la_term};
}

double psi(RenormPoint p, int d) {
    if (p.lambda == 0.0) throw std::domain_error("psi: lambda must be nonzero");
    return poly_phi_cap(p, d) / p.lambda;
}

double semiconjugacy_residual(RenormPoint p, int d) {
    return std::abs(psi(renormalize(p, d), d) - adjacency_map(psi(p, d), d));
}

double det_x0(RenormPoint p, int d) {
    const double phi = p.mu * p.mu - (d - 1) * p.lambda * p.lambda -
                       (d - 2) * p.lambda * p.mu - 1;
    const double s = p.mu + p.lambda;
    const long long c_d = static_cast<long long>(d + 1) * d / 2 - (d + 1);
    return poly_linear(p, d) * poly_b2(p) * std::pow(phi + p.lambda, d) *
           std::pow(s * s - 1, static_cast<double>(c_d));
}

namespace {

// Cyclic shift a: e_x -> e_{x-1} (1-based letters); entry (alpha(x), x) = 1.
Eigen::MatrixXd cyclic_power(int d, int k) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d + 1, d + 1);
    for (int x = 0; x <= d; ++x) a((x - k % (d + 1) + d + 1) % (d + 1), x) = 1.0;
    return a;
}

}  // namespace

double det_x0_explicit(RenormPoint p, int d) {
    const int m = d + 1;
    Eigen::MatrixXd X = Eigen::MatrixXd::Zero(d * m, d * m);
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
            Eigen::MatrixXd block = Eigen::MatrixXd::Identity(m, m) * p.lambda;
            if (i + j == d + 1) block += cyclic_power(d, i);
            if (i == j) block -= Eigen::MatrixXd::Identity(m, m) * (p.mu + p.lambda);
            X.block((i - 1) * m, (j - 1) * m, m, m) = block;
        }
    }
    return X.partialPivLu().determinant();
}

double det_cyclic_sum(double mu, double lambda, int d) {
    return (mu + d * lambda) * std::pow(mu - lambda, d);
}

double det_cyclic_sum_explicit(double mu, double lambda, int d) {
    Eigen::MatrixXd M = Eigen::MatrixXd::Identity(d + 1, d + 1) * mu;
    for (int i = 1; i <= d; ++i) M += lambda * cyclic_power(d, i);
    return M.partialPivLu().determinant();
}

namespace {

long long ipow(long long base, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

Multiplicities multiplicities(int d, int n) {
    if (d < 2) throw std::invalid_argument("multiplicities: need d >= 2");
    if (n < 1) throw std::invalid_argument("multiplicities: need n >= 1");
    Multiplicities m;
    m.c_d = static_cast<long long>(d + 1) * d / 2 - (d + 1);
    m.alpha.push_back(d);  // alpha_1
    m.sigma.push_back(0);  // sigma_1
    for (int k = 2; k <= n; ++k) {
        const long long beta_k = (d - 1) * (ipow(d + 1, k - 1) - 1) / 2;
        m.beta.push_back(beta_k);
        m.alpha.push_back(beta_k + d);
        m.sigma.push_back(ipow(d + 1, k - 2) - 1);
    }
    // The closed forms must satisfy the factorization recursions.
    for (int k = 2; k <= n; ++k) {
        const long long beta_prev = k == 2 ? 0 : m.beta[k - 3];
        if (m.beta[k - 2] != (m.c_d + 1) * ipow(d + 1, k - 2) + beta_prev)
            throw std::logic_error("multiplicities: beta recursion violated");
        if (m.alpha[k - 1] != m.c_d * ipow(d + 1, k - 2) + m.sigma[k - 1] + m.alpha[k - 2] + 1)
            throw std::logic_error("multiplicities: alpha recursion violated");
    }
    return m;
}

namespace {

// Roots of z^2 + b z + c = 0, larger root first, computed without
// cancellation (b < 0 for every map used here).
std::pair<double, double> stable_quadratic_roots(double b, double c) {
    const double disc = b * b - 4 * c;
    if (disc < 0) throw std::domain_error("preimage: complex roots");
    const double s = std::sqrt(disc);
    const double big = b <= 0 ? (-b + s) / 2 : (-b - s) / 2;
    const double other = big == 0.0 ? 0.0 : c / big;
    return {std::max(big, other), std::min(big, other)};
}

std::pair<double, double> preimages(double theta, int d, bool laplacian_side) {
    // Adjacency: z^2 - (d-1) z - (d+1) = theta; Laplacian: z^2 - (d+3) z + theta = 0.
    return laplacian_side ? stable_quadratic_roots(-(d + 3.0), theta)
                          : stable_quadratic_roots(-(d - 1.0), -(d + 1.0) - theta);
}

double family_root(PreimageFamily f, int d) {
    switch (f) {
        case PreimageFamily::LaplacianP: return d + 1;
        case PreimageFamily::LaplacianQ: return d + 3;
        case PreimageFamily::AdjacencyA: return 0;
        case PreimageFamily::AdjacencyB: return -2;
    }
    throw std::logic_error("family_root");
}

bool is_laplacian(PreimageFamily f) {
    return f == PreimageFamily::LaplacianP || f == PreimageFamily::LaplacianQ;
}

std::vector<double> preimage_level(const std::vector<double>& prev, int d, bool laplacian_side,
                                   double guard_tol) {
    std::vector<double> next;
    next.reserve(prev.size() * 2);
    for (double theta : prev) {
        auto [hi, lo] = preimages(theta, d, laplacian_side);
        next.push_back(lo);
        next.push_back(hi);
    }
    std::sort(next.begin(), next.end());
    // Distinctness of the preimage values is a theorem; the tolerance is a
    // consistency tripwire. It is disabled past depth 12: from there true
    // gaps (near the fixed point 0 and its counterpart at the top of the
    // range) fall below what doubles can resolve.
    for (size_t i = 0; i + 1 < next.size(); ++i)
        if (next[i + 1] - next[i] < guard_tol)
            throw std::logic_error("preimage_level: unexpected collision");
    return next;
}

double level_guard_tol(int level) { return level <= 12 ? 1e-12 : 0.0; }

}  // namespace

PreimageTree preimage_tree(int d, PreimageFamily family, int depth) {
    if (d < 2) throw std::invalid_argument("preimage_tree: need d >= 2");
    if (depth < 0) throw std::invalid_argument("preimage_tree: negative depth");
    PreimageTree t{d, family, {{family_root(family, d)}}};
    for (int i = 1; i <= depth; ++i)
        t.levels.push_back(
            preimage_level(t.levels.back(), d, is_laplacian(family), level_guard_tol(i)));
    return t;
}

long long SpectrumPrediction::total() const {
    long long s = 0;
    for (const auto& [v, m] : pairs) s += m;
    return s;
}

SpectrumPrediction predicted_spectrum_adjacency(int d, int n) {
    if (d < 2 || n < 1) throw std::invalid_argument("predicted_spectrum_adjacency: need d >= 2, n >= 1");
    const Multiplicities mult = multiplicities(d, n);
    SpectrumPrediction pred;
    pred.pairs.push_back({static_cast<double>(d + 1), 1});
    PreimageTree A = preimage_tree(d, PreimageFamily::AdjacencyA, n - 1);
    for (int i = 0; i <= n - 1; ++i)
        for (double v : A.levels[i]) pred.pairs.push_back({v, mult.alpha[n - i - 1]});
    if (n >= 2) {
        PreimageTree B = preimage_tree(d, PreimageFamily::AdjacencyB, n - 2);
        for (int i = 0; i <= n - 2; ++i)
            for (double v : B.levels[i]) pred.pairs.push_back({v, mult.beta[n - i - 2]});
    }
    std::sort(pred.pairs.begin(), pred.pairs.end());
    if (pred.total() != ipow(d + 1, n))
        throw std::logic_error("predicted_spectrum_adjacency: multiplicities do not sum to (d+1)^n");
    return pred;
}

namespace {

TruncatedLimit limit_from_families(int d, int depth, PreimageFamily f1, PreimageFamily f2,
                                   bool reflect) {
    PreimageTree t1 = preimage_tree(d, f1, depth);
    PreimageTree t2 = preimage_tree(d, f2, depth);
    std::vector<std::pair<double, Rational>> steps;
    Rational covered(0);
    for (int i = 0; i <= depth; ++i) {
        const Rational len(d - 1, 2 * static_cast<long long>(ipow(d + 1, i + 1)));
        for (const auto* level : {&t1.levels[i], &t2.levels[i]}) {
            for (double v : *level) {
                steps.push_back({reflect ? (d + 1) - v : v, len});
                covered = covered + len;
            }
        }
    }
    std::sort(steps.begin(), steps.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    TruncatedLimit out{StepFunction::from_partial_steps(steps), covered,
                       Rational::pow(Rational(2, d + 1), depth + 1)};
    return out;
}

}  // namespace

TruncatedLimit limit_quantile_cd(int d, int depth) {
    if (d < 2) throw std::invalid_argument("limit_quantile_cd: need d >= 2 (d = 1 has the sine law)");
    return limit_from_families(d, depth, PreimageFamily::LaplacianP, PreimageFamily::LaplacianQ,
                               false);
}

TruncatedLimit laplacian_limit_from_adjacency(int d, int depth) {
    return limit_from_families(d, depth, PreimageFamily::AdjacencyA, PreimageFamily::AdjacencyB,
                               true);
}

StepFunction limit_quantile_1d(int samples) {
    if (samples < 2) throw std::invalid_argument("limit_quantile_1d: need at least 2 samples");
    std::vector<Rational> bp;
    std::vector<double> vals;
    for (int j = 0; j <= samples; ++j) bp.emplace_back(j, samples);
    for (int j = 0; j < samples; ++j) {
        const double x = static_cast<double>(j) / samples;
        const double s = std::sin(std::numbers::pi * x / 2);
        vals.push_back(4 * s * s);
    }
    return StepFunction(std::move(bp), std::move(vals));
}

Rational limit_mass_to_depth(int d, int depth) {
    if (d < 2) throw std::invalid_argument("limit_mass_to_depth: need d >= 2");
    Rational mass(0);
    for (bool q_side : {false, true}) {
        std::vector<double> level{family_root(
            q_side ? PreimageFamily::LaplacianQ : PreimageFamily::LaplacianP, d)};
        for (int i = 0; i <= depth; ++i) {
            if (static_cast<long long>(level.size()) != (1LL << i))
                throw std::logic_error("limit_mass_to_depth: level size mismatch");
            mass = mass + Rational(static_cast<long long>(level.size()) * (d - 1),
                                   2 * ipow(d + 1, i + 1));
            if (i < depth) level = preimage_level(level, d, true, level_guard_tol(i + 1));
        }
    }
    return mass;
}

}  // namespace subspec
