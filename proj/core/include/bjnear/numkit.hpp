#pragma once

#include "bjnear/types.hpp"

namespace bjnear {

/// Full singular value decomposition A = U diag(s) V*.
///
/// Thin factors: for an r x c input, U is r x k and V is c x k with
/// k = min(r, c), both with orthonormal columns, and s is descending.
/// Column phases and the order inside degenerate clusters follow a fixed
/// canonical rule so the decomposition is reproducible for a fixed input.
struct SpectralData {
    RealVec singular_values;
    Mat left_vectors;
    Mat right_vectors;
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
struct EigenData {
    RealVec eigenvalues;
    Mat eigenvectors;
};

/// The right singular subspace attached to the maximum singular value.
struct TopSubspace {
    int multiplicity = 0;  ///< m(A): number of singular values within tolerance of the top one
    Mat right_basis;       ///< n x multiplicity, orthonormal columns
    double top_value = 0.0;
};

/// Outcome of the zero-membership test for the numerical range
/// W(M) = { x* M x : ||x|| = 1 }.
struct NumericalRangeResult {
    bool contains_zero = false;
    Vec witness;                    ///< unit vector with x* M x ~ 0; set when contains_zero
    double witness_residual = 0.0;  ///< |x* M x| at the returned witness
    /// max over rotations of lambda_min(Herm(e^{i t} M)); positive values
    /// certify that a half-plane separates 0 from W(M).
    double separation = 0.0;
};

/// Operator (spectral) norm: the largest singular value.
double operator_norm(const Mat& a);

/// Trace norm: the sum of all singular values.
double trace_norm(const Mat& a);

SpectralData svd(const Mat& a);

/// Decompose a Hermitian matrix. Inputs are accepted when
/// ||H - H*||_F <= 1e-10 (1 + ||H||_F) and symmetrized before decomposition.
EigenData hermitian_eig(const Mat& h);

/// Moore-Penrose inverse of a Hermitian positive semidefinite matrix.
/// Eigenvalues below rank_rel_tol * lambda_max are treated as exact zeros.
/// Only the PSD case is supported; a clearly negative eigenvalue is an
/// input error.
Mat mp_inverse(const Mat& h, const ToleranceConfig& cfg = {});

/// Basis of the right singular subspace for the top singular value cluster
/// (relative gap <= cfg.multiplicity_rel_tol). The zero matrix is refused.
TopSubspace top_singular_subspace(const Mat& a, const ToleranceConfig& cfg = {});

/// Decide 0 in W(M) by scanning supporting half-planes over rotation angles
/// (720-point grid plus golden-section refinement). On membership, a unit
/// witness is assembled from extreme eigenvectors of two supporting
/// rotations via the convexity construction for numerical ranges.
NumericalRangeResult numrange_contains_zero(const Mat& m, const ToleranceConfig& cfg = {});

}  // namespace bjnear
