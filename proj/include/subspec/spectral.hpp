// Dense symmetric eigensolving, spectral quantile functions, and the
// normalized-L1 eigenvalue perturbation check.

#pragma once

#include <Eigen/Dense>

#include "subspec/step_function.hpp"

namespace subspec {

/// Ascending eigenvalues listed with multiplicity.
struct SpectrumList {
    std::vector<double> eigenvalues;
};

/// Eigenvalues of a symmetric matrix, ascending. The input must be
/// symmetric within tol (relative to its largest entry); otherwise throws.
SpectrumList eigenvalues_sym(const Eigen::MatrixXd& M, double tol = 1e-10);

template <typename Derived>
SpectrumList eigenvalues_sym(const Eigen::MatrixBase<Derived>& M, double tol = 1e-10) {
    return eigenvalues_sym(Eigen::MatrixXd(M.template cast<double>()), tol);
}

/// Shifted spectral quantile function: the j-th smallest eigenvalue on
/// [(j-1)/N, j/N).
StepFunction quantile_function(const SpectrumList& s);

/// Quantile function of the down-Laplacian spectrum at dimension i.
StepFunction laplacian_quantile(const class Complex& K, int i);

struct WielandtResult {
    double lhs;  // ||Lambda(L+E) - Lambda(L)||_L1
    double rhs;  // sum |E_ij| / N
    bool holds;
};

/// Checks the L1 eigenvalue perturbation inequality
/// ||Lambda(L+E) - Lambda(L)||_L1 <= ||E||_1 / N for symmetric L, E.
WielandtResult wielandt_check(const Eigen::MatrixXd& L, const Eigen::MatrixXd& E);

}  // namespace subspec
