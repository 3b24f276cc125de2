#include "subspec/spectral.hpp"

#include <stdexcept>

#include "subspec/complex.hpp"

namespace subspec {

SpectrumList eigenvalues_sym(const Eigen::MatrixXd& M, double tol) {
    if (M.rows() != M.cols()) throw std::invalid_argument("eigenvalues_sym: not square");
    const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
    if ((M - M.transpose()).cwiseAbs().maxCoeff() > tol * scale)
        throw std::invalid_argument("eigenvalues_sym: matrix not symmetric within tolerance");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalues_sym: eigensolver failed to converge");
    SpectrumList out;
    out.eigenvalues.assign(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + solver.eigenvalues().size());
    return out;
}

StepFunction quantile_function(const SpectrumList& s) {
    if (s.eigenvalues.empty()) throw std::invalid_argument("quantile_function: empty spectrum");
    return StepFunction::from_sorted_values(s.eigenvalues);
}

StepFunction laplacian_quantile(const Complex& K, int i) {
    return quantile_function(eigenvalues_sym(down_laplacian(K, i)));
}

WielandtResult wielandt_check(const Eigen::MatrixXd& L, const Eigen::MatrixXd& E) {
    if (L.rows() != E.rows() || L.cols() != E.cols())
        throw std::invalid_argument("wielandt_check: order mismatch");
    WielandtResult r;
    r.lhs = l1_distance(quantile_function(eigenvalues_sym(Eigen::MatrixXd(L + E))),
                        quantile_function(eigenvalues_sym(L)));
    r.rhs = E.cwiseAbs().sum() / static_cast<double>(L.rows());
    r.holds = r.lhs <= r.rhs + 1e-9;
    return r;
}

}  // namespace subspec
