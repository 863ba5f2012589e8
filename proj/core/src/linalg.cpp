#include "eigenflow/linalg.hpp"

#include "eigenflow/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <limits>

namespace eigenflow {

namespace {

constexpr double kEps = 0x1.0p-52;

ComplexScalar phase_of(ComplexScalar x) {
    const double m = std::abs(x);
    return m == 0.0 ? ComplexScalar(1.0, 0.0) : x / m;
}

}  // namespace

QrResult householder_qr_reduced(const ComplexMatrix& m) {
    const Eigen::Index n = m.rows();
    const Eigen::Index k = m.cols();
    if (k > n) throw DimensionError("householder_qr_reduced: need rows >= cols");

    const double scale = m.norm();
    const double rank_tol = static_cast<double>(std::max(n, k)) * kEps * scale;

    ComplexMatrix a = m;  // becomes R in the top k x k block
    std::vector<ComplexVector> reflectors;
    reflectors.reserve(static_cast<std::size_t>(k));

    for (Eigen::Index j = 0; j < k; ++j) {
        ComplexVector x = a.col(j).tail(n - j);
        const double xnorm = x.norm();
        if (xnorm <= rank_tol) throw RankError("householder_qr_reduced: rank-deficient input");

        // v = x + phase(x_1)*||x||*e1 maps x to -phase(x_1)*||x||*e1.
        ComplexVector v = x;
        v(0) += phase_of(x(0)) * xnorm;
        const double vnorm = v.norm();
        if (vnorm > 0.0) v /= vnorm;

        auto trailing = a.bottomRightCorner(n - j, k - j);
        trailing.noalias() -= 2.0 * v * (v.adjoint() * trailing);
        reflectors.push_back(std::move(v));

        if (std::abs(a(j, j)) <= rank_tol) {
            throw RankError("householder_qr_reduced: rank-deficient input");
        }
    }

    // Q = H_1 ... H_k applied to the first k columns of the identity.
    ComplexMatrix q = ComplexMatrix::Identity(n, k);
    for (Eigen::Index j = k; j-- > 0;) {
        auto block = q.bottomRows(n - j);
        const ComplexVector& v = reflectors[static_cast<std::size_t>(j)];
        block.noalias() -= 2.0 * v * (v.adjoint() * block);
    }

    QrResult out;
    out.q = std::move(q);
    out.r = a.topRows(k).triangularView<Eigen::Upper>();
    return out;
}

ComplexVector solve_upper_triangular(const ComplexMatrix& r, const ComplexVector& b) {
    const Eigen::Index k = r.rows();
    if (r.cols() != k || b.size() != k) throw DimensionError("solve_upper_triangular: shape");
    ComplexVector x(k);
    for (Eigen::Index i = k; i-- > 0;) {
        ComplexScalar s = b(i);
        for (Eigen::Index j = i + 1; j < k; ++j) s -= r(i, j) * x(j);
        if (r(i, i) == ComplexScalar(0.0, 0.0)) {
            throw RankError("solve_upper_triangular: zero pivot");
        }
        x(i) = s / r(i, i);
    }
    return x;
}

ComplexMatrix haar_unitary(Eigen::Index n, Rng& rng) {
    if (n < 1) throw DimensionError("haar_unitary: n must be >= 1");
    const ComplexMatrix g = sample_gaussian_matrix(n, n, rng);
    QrResult qr = householder_qr_reduced(g);
    ComplexMatrix u = std::move(qr.q);
    for (Eigen::Index i = 0; i < n; ++i) {
        u.col(i) *= phase_of(qr.r(i, i));
    }
    return u;
}

SvdResult svd(const ComplexMatrix& m, bool with_bases) {
    if (!all_finite(m)) throw DimensionError("svd: non-finite entries");
    SvdResult out;
    if (with_bases) {
        Eigen::JacobiSVD<ComplexMatrix> dec(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
        out.singular_values = dec.singularValues();
        out.u = dec.matrixU();
        out.v = dec.matrixV();
        out.has_bases = true;
    } else {
        Eigen::JacobiSVD<ComplexMatrix> dec(m);
        out.singular_values = dec.singularValues();
    }
    return out;
}

PinvNorms pinv_norms_from_singular_values(const RealVector& sigma, Eigen::Index rows,
                                          Eigen::Index cols, Eigen::Index expected_rank) {
    const Eigen::Index full = std::min(rows, cols);
    if (expected_rank < 0) expected_rank = full;
    const double inf = std::numeric_limits<double>::infinity();
    if (sigma.size() == 0 || expected_rank == 0) return {inf, inf};

    const double tol = static_cast<double>(std::max(rows, cols)) * sigma(0) * kEps;
    if (expected_rank > sigma.size() || sigma(expected_rank - 1) <= tol) return {inf, inf};

    double frob_sq = 0.0;
    for (Eigen::Index i = 0; i < expected_rank; ++i) frob_sq += 1.0 / (sigma(i) * sigma(i));
    return {1.0 / sigma(expected_rank - 1), std::sqrt(frob_sq)};
}

PinvNorms pinv_norms(const ComplexMatrix& m, Eigen::Index expected_rank) {
    if (m.size() == 0) return {std::numeric_limits<double>::infinity(),
                               std::numeric_limits<double>::infinity()};
    return pinv_norms_from_singular_values(svd(m).singular_values, m.rows(), m.cols(),
                                           expected_rank);
}

std::vector<EigenPair> reference_eigendecomposition(const ComplexMatrix& a, Eigen::Index cap) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n) throw DimensionError("reference_eigendecomposition: square input required");
    if (n > cap) throw OracleError("reference_eigendecomposition: n exceeds oracle cap");

    Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success) {
        throw OracleError("reference_eigendecomposition: eigensolver did not converge");
    }

    std::vector<EigenPair> pairs;
    pairs.reserve(static_cast<std::size_t>(n));
    const double anorm = a.norm();
    for (Eigen::Index i = 0; i < n; ++i) {
        EigenPair p;
        p.lambda = solver.eigenvalues()(i);
        p.v = solver.eigenvectors().col(i).normalized();
        // One pseudoinverse-based inverse-iteration polish if the Schur route
        // left a weak residual (defective clusters).
        const double res = (p.lambda * p.v - a * p.v).norm();
        if (res > 1e-12 * anorm && anorm > 0.0) {
            ComplexMatrix shifted = a - p.lambda * ComplexMatrix::Identity(n, n);
            Eigen::JacobiSVD<ComplexMatrix> dec(shifted,
                                                Eigen::ComputeThinU | Eigen::ComputeThinV);
            const RealVector& s = dec.singularValues();
            const double cutoff = static_cast<double>(n) * kEps * s(0);
            ComplexVector y = dec.matrixU().adjoint() * p.v;
            for (Eigen::Index j = 0; j < s.size(); ++j) {
                y(j) = (s(j) > cutoff) ? y(j) / s(j) : ComplexScalar(0.0, 0.0);
            }
            ComplexVector w = dec.matrixV() * y;
            const double wn = w.norm();
            if (wn > 0.0) {
                w /= wn;
                if ((p.lambda * w - a * w).norm() < res) p.v = w;
            }
        }
        pairs.push_back(std::move(p));
    }
    return pairs;
}

}  // namespace eigenflow
