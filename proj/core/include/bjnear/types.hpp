#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bjnear {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;

/// Bad caller input (shape mismatch, non-finite entries, violated preconditions).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A numerical routine failed to deliver its contract (non-convergence etc.).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input document.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Tolerances and budgets shared by every solver entry point.
///
/// All equality decisions in this library are tolerance based; the defaults
/// below are the knobs that define them.
struct ToleranceConfig {
    double multiplicity_rel_tol = 1e-8;  ///< relative gap for clustering the top singular value
    double rank_rel_tol = 1e-10;         ///< relative threshold for treating eigenvalues as zero
    double feasibility_tol = 1e-9;       ///< residual bound for certificates and feasibility
    double solver_tol = 1e-7;            ///< target accuracy of iterative minimizers
    int max_iter = 10000;                ///< iteration budget per solver phase
    std::uint64_t seed = 0;              ///< seed for multi-start randomization

    void validate() const {
        if (!(multiplicity_rel_tol > 0) || !(rank_rel_tol > 0) || !(feasibility_tol > 0) ||
            !(solver_tol > 0)) {
            throw InputError("ToleranceConfig: all tolerances must be positive");
        }
        if (max_iter < 1) {
            throw InputError("ToleranceConfig: max_iter must be >= 1");
        }
    }
};

/// Trace inner product tr(X* Y); makes n x n matrices a complex Hilbert space.
inline Complex inner_c(const Mat& x, const Mat& y) { return (x.adjoint() * y).trace(); }

/// Re tr(X* Y); the real Hilbert space inner product on the same matrices.
inline double inner_r(const Mat& x, const Mat& y) { return inner_c(x, y).real(); }

inline Mat hermitian_part(const Mat& x) { return 0.5 * (x + x.adjoint()); }

void require_finite(const Mat& a, const char* what = "matrix");
void require_square(const Mat& a, const char* what = "matrix");
void require_same_shape(const Mat& a, const Mat& b, const char* what = "matrices");

}  // namespace bjnear
