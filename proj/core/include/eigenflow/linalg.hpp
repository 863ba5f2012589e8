#pragma once

#include "eigenflow/rng.hpp"
#include "eigenflow/types.hpp"

#include <vector>

namespace eigenflow {

struct QrResult {
    ComplexMatrix q;  // n x k, orthonormal columns
    ComplexMatrix r;  // k x k, upper triangular
};

// Reduced QR of an n x k matrix (k <= n) by Householder reflections, with the
// frozen sign convention r_jj = -phase(x_1) * ||x||. The map M -> Q is then
// deterministic and continuous off a measure-zero set. Throws RankError when a
// diagonal entry of R falls below max(n,k) * 2^-52 * ||M||_F.
QrResult householder_qr_reduced(const ComplexMatrix& m);

// Solves R x = b for upper-triangular R. Throws RankError on a zero pivot.
ComplexVector solve_upper_triangular(const ComplexMatrix& r, const ComplexVector& b);

// Haar-distributed unitary: QR of a Ginibre matrix followed by the diagonal
// phase correction U = Q * diag(r_ii / |r_ii|).
ComplexMatrix haar_unitary(Eigen::Index n, Rng& rng);

struct SvdResult {
    RealVector singular_values;  // descending, >= 0
    ComplexMatrix u;             // empty unless bases requested
    ComplexMatrix v;
    bool has_bases = false;
};

SvdResult svd(const ComplexMatrix& m, bool with_bases = false);

struct PinvNorms {
    double op = 0.0;    // ||M^+||, +inf when rank-deficient vs expected rank
    double frob = 0.0;  // ||M^+||_F
};

// Pseudoinverse norms via singular values. A sigma_i below
// max(rows, cols) * sigma_1 * 2^-52 counts as zero; the result is infinite
// when the numerical rank is below `expected_rank` (default min(rows, cols)).
// Only the largest `expected_rank` singular values enter the sums, so a
// structurally rank-deficient matrix can be queried against its true rank.
PinvNorms pinv_norms(const ComplexMatrix& m, Eigen::Index expected_rank = -1);

PinvNorms pinv_norms_from_singular_values(const RealVector& sigma, Eigen::Index rows,
                                          Eigen::Index cols, Eigen::Index expected_rank = -1);

struct EigenPair {
    ComplexScalar lambda;
    ComplexVector v;  // unit norm
};

// Dense eigensolver used purely as a test/experiment oracle (Schur-based, not
// the homotopy algorithm; no certification claims). Eigenvalues are repeated
// per multiplicity. Throws OracleError on non-convergence or n > cap.
std::vector<EigenPair> reference_eigendecomposition(const ComplexMatrix& a, Eigen::Index cap = 64);

}  // namespace eigenflow
