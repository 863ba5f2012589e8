#pragma once

#include <Eigen/Dense>

#include <complex>

namespace eigenflow {

using ComplexScalar = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Hermitian Frobenius inner product <X, Y> = sum_ij X_ij * conj(Y_ij).
inline ComplexScalar frobenius_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
    return (x.array() * y.array().conjugate()).sum();
}

inline double frobenius_norm(const ComplexMatrix& m) { return m.norm(); }

inline bool all_finite(const ComplexMatrix& m) {
    return m.allFinite();
}

}  // namespace eigenflow
