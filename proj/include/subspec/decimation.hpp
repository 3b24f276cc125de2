// Spectral decimation for cone subdivision: the two-parameter
// renormalization of the characteristic pencil, its semi-conjugacy to a
// one-variable quadratic, the closed-form corner-block determinant, the
// multiplicity sequences of the factorized determinant, and the limiting
// quantile functions built from quadratic preimage trees.

#pragma once

#include <utility>
#include <vector>

#include "subspec/rational.hpp"
#include "subspec/step_function.hpp"

namespace subspec {

struct RenormPoint {
    double mu = 0.0;
    double lambda = 0.0;
};

// Named polynomials of the renormalization (all in (mu, lambda) at fixed d).
double poly_alpha(RenormPoint p, int d);    // (mu+la)((d-1)la-mu) + 1 - la
double poly_linear(RenormPoint p, int d);   // L  = mu - (d-1)la - 1
double poly_quad(RenormPoint p, int d);     // K  = mu^2 - (d-1)la^2 - (d-2)la*mu + la - 1
double poly_a1(RenormPoint p);              // A1 = mu + la - 1
double poly_b2(RenormPoint p);              // B2 = mu + la + 1
double poly_phi_cap(RenormPoint p, int d);  // Phi = mu^2 - 1 - (d-1)la*mu - d*la^2

/// One-variable decimation polynomial on the adjacency side:
/// g(z) = z^2 - (d-1) z - (d+1).
double adjacency_map(double zeta, int d);
/// Laplacian side: f(z) = z (d+3-z).
double laplacian_map(double zeta, int d);

/// Renormalization map F via the factored formulas; throws
/// std::domain_error when |L*K| < 1e-12 (singular point).
RenormPoint renormalize(RenormPoint p, int d);

/// The same map computed from the matrix-coronal expressions (denominator
/// alpha*(alpha+(d+1)lambda)); used as the independent route.
RenormPoint renormalize_unfactored(RenormPoint p, int d);

/// Psi = Phi(mu, lambda) / lambda; semi-conjugates F to the adjacency map.
double psi(RenormPoint p, int d);

/// |Psi(F(p)) - g(Psi(p))|.
double semiconjugacy_residual(RenormPoint p, int d);

/// Closed form of the determinant of the d x d corner block over the
/// cyclic-shift algebra:
/// L * B2 * (phi+la)^d * ((mu+la)^2 - 1)^(C(d+1,2)-(d+1)).
double det_x0(RenormPoint p, int d);

/// The same determinant from the explicitly assembled d(d+1)-order real
/// matrix (oracle route).
double det_x0_explicit(RenormPoint p, int d);

/// det(mu I + la sum_{i=1}^d a^i) = (mu + d la)(mu - la)^d, and its dense
/// (d+1) x (d+1) evaluation.
double det_cyclic_sum(double mu, double lambda, int d);
double det_cyclic_sum_explicit(double mu, double lambda, int d);

/// Exponent sequences of the determinant factorization
/// D_n = D0 A1^{a_n} ... A_n^{a_1} B2^{b_n} ... B_n^{b_2}.
struct Multiplicities {
    std::vector<long long> alpha;  // alpha_1 .. alpha_n
    std::vector<long long> beta;   // beta_2 .. beta_n (empty for n = 1)
    std::vector<long long> sigma;  // sigma_1 .. sigma_n (internal, for debugging)
    long long c_d = 0;             // C(d+1,2) - (d+1)
};
Multiplicities multiplicities(int d, int n);

/// Iterated quadratic preimages. Families P/Q start at d+1 / d+3 under the
/// Laplacian map; A/B start at 0 / -2 under the adjacency map.
enum class PreimageFamily { LaplacianP, LaplacianQ, AdjacencyA, AdjacencyB };

struct PreimageTree {
    int d = 0;
    PreimageFamily family{};
    std::vector<std::vector<double>> levels;  // level i: 2^i sorted values
};
PreimageTree preimage_tree(int d, PreimageFamily family, int depth);

/// Predicted eigenvalues of the level-n Schreier adjacency matrix with
/// multiplicities: d+1 once, values of A_i with alpha_{n-i}, values of B_i
/// with beta_{n-i}; total (d+1)^n.
struct SpectrumPrediction {
    std::vector<std::pair<double, long long>> pairs;  // sorted by value
    long long total() const;
};
SpectrumPrediction predicted_spectrum_adjacency(int d, int n);

/// Truncation of the universal cone-subdivision limit: every value of
/// depth <= depth is kept at its exact step length
/// (d-1)/(2 (d+1)^{i+1}); the top step is stretched over the omitted tail.
struct TruncatedLimit {
    StepFunction function;
    Rational covered_mass;  // sum of kept step lengths
    Rational tail_mass;     // (2/(d+1))^{depth+1}, mass of omitted steps
};
TruncatedLimit limit_quantile_cd(int d, int depth);

/// Reflection (d+1) - x of the adjacency-side limit; reproduces
/// limit_quantile_cd exactly.
TruncatedLimit laplacian_limit_from_adjacency(int d, int depth);

/// Piecewise-constant left-endpoint discretization of the d = 1 limit law
/// 4 sin^2(pi x / 2).
StepFunction limit_quantile_1d(int samples);

/// Sum of kept step lengths down to the given depth, computed streaming
/// (level counts validated against 2^i).
Rational limit_mass_to_depth(int d, int depth);

}  // namespace subspec
