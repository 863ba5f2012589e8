#include "eigenflow/geometry.hpp"

#include "eigenflow/errors.hpp"
#include "eigenflow/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace eigenflow {

namespace {

// Householder vector w of unit v: H = I - 2 w w* sends v to a multiple of e1,
// so rows 2..n of H X equal W* X for the vperp_basis frame W.
ComplexVector householder_w(const ComplexVector& v) {
    ComplexVector w = v;
    const ComplexScalar ph =
        std::abs(v(0)) == 0.0 ? ComplexScalar(1.0, 0.0) : v(0) / std::abs(v(0));
    w(0) += ph * v.norm();
    const double wnorm = w.norm();
    if (wnorm == 0.0) throw DimensionError("householder_w: zero vector");
    return w / wnorm;
}

}  // namespace

ComplexMatrix vperp_basis(const ComplexVector& v) {
    const Eigen::Index n = v.size();
    if (n < 2) throw DimensionError("vperp_basis: need dimension >= 2");
    // Reflector H = I - 2 w w* with w ~ v + phase(v_0) ||v|| e1; H v is a
    // multiple of e1, so columns 2..n of H span v^perp.
    ComplexVector w = v;
    const double vnorm = v.norm();
    const ComplexScalar ph =
        std::abs(v(0)) == 0.0 ? ComplexScalar(1.0, 0.0) : v(0) / std::abs(v(0));
    w(0) += ph * vnorm;
    const double wnorm = w.norm();
    if (wnorm == 0.0) throw DimensionError("vperp_basis: zero vector");
    w /= wnorm;
    ComplexMatrix h = ComplexMatrix::Identity(n, n);
    h.noalias() -= 2.0 * w * w.adjoint();
    return h.rightCols(n - 1);
}

ComplexMatrix restricted_operator(const EigenTriple& t) {
    const Eigen::Index n = t.a.rows();
    if (t.a.cols() != n || t.v.size() != n) throw DimensionError("restricted_operator: shape");
    const ComplexMatrix w = vperp_basis(t.v);
    ComplexMatrix shifted = -t.a;
    shifted.diagonal().array() += t.lambda;
    return w.adjoint() * shifted * w;
}

ConditionReport condition_numbers(const EigenTriple& t) {
    const Eigen::Index n = t.a.rows();
    if (t.a.cols() != n || t.v.size() != n) throw DimensionError("condition_numbers: shape");
    ComplexMatrix shifted = -t.a;
    shifted.diagonal().array() += t.lambda;

    // K = W*(lambda I - A) for an orthonormal basis W of v^perp shares the
    // nonzero singular values of (I - v v*)(lambda I - A); its squared
    // singular values are the eigenvalues of the (n-1)x(n-1) Gram matrix,
    // which is much cheaper than a rectangular SVD at these sizes.
    const ComplexVector w = householder_w(t.v);
    ComplexMatrix hx = shifted;
    hx.noalias() -= 2.0 * w * (w.adjoint() * shifted);
    const auto k = hx.bottomRows(n - 1);
    ComplexMatrix gram = k * k.adjoint();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram, Eigen::EigenvaluesOnly);
    const RealVector& eig = es.eigenvalues();  // ascending

    const double anorm = t.a.norm();
    const double inf = std::numeric_limits<double>::infinity();
    // Rank test at the Gram level: absolute eigenvalue error is O(eps ||G||),
    // so sigma below ~sqrt(n eps) sigma_1 is indistinguishable from zero.
    const double tol = static_cast<double>(n) * 0x1.0p-52 * std::max(eig(n - 2), 0.0);
    ConditionReport rep;
    if (eig(0) <= tol) {
        rep.mu = inf;
        rep.mu_f = inf;
        return rep;
    }
    double frob_sq = 0.0;
    for (Eigen::Index i = 0; i < n - 1; ++i) frob_sq += 1.0 / eig(i);
    rep.mu = std::max(1.0, anorm / std::sqrt(eig(0)));
    rep.mu_f = std::max(1.0, anorm * std::sqrt(frob_sq));
    return rep;
}

double mu_of(const EigenTriple& t) { return condition_numbers(t).mu; }

double proj_distance(const ComplexVector& u, const ComplexVector& w) {
    const double un = u.norm();
    const double wn = w.norm();
    if (un == 0.0 || wn == 0.0) throw DimensionError("proj_distance: zero vector");
    // atan2 of the rejection keeps full precision near zero, where the
    // arccos form loses half the digits to cancellation.
    const ComplexVector uh = u / un;
    const ComplexVector wh = w / wn;
    const ComplexScalar c = uh.dot(wh);  // conj(u)^T w
    const double s = (wh - uh * c).norm();
    return std::atan2(s, std::abs(c));
}

double pair_distance(const ComplexMatrix& a1, ComplexScalar lambda1, const ComplexMatrix& a2,
                     ComplexScalar lambda2) {
    const double n1 = std::sqrt(a1.squaredNorm() + std::norm(lambda1));
    const double n2 = std::sqrt(a2.squaredNorm() + std::norm(lambda2));
    if (n1 == 0.0 || n2 == 0.0) throw DimensionError("pair_distance: zero point");
    // Same rejection trick on the concatenated point (A, lambda) of C^{n^2+1}.
    const ComplexScalar c =
        (frobenius_inner(a2, a1) + std::conj(lambda1) * lambda2) / (n1 * n2);
    const ComplexMatrix orth_a = a2 / n2 - (a1 / n1) * c;
    const ComplexScalar orth_l = lambda2 / n2 - (lambda1 / n1) * c;
    const double s = std::sqrt(orth_a.squaredNorm() + std::norm(orth_l));
    return std::atan2(s, std::abs(c));
}

double dp2(const EigenTriple& t1, const EigenTriple& t2) {
    const double d_pair = pair_distance(t1.a, t1.lambda, t2.a, t2.lambda);
    const double d_vec = proj_distance(t1.v, t2.v);
    return std::hypot(d_pair, d_vec);
}

EigenTriple newton_step(const EigenTriple& t) {
    const Eigen::Index n = t.a.rows();
    if (t.a.cols() != n || t.v.size() != n) throw DimensionError("newton_step: shape");

    ComplexMatrix shifted = -t.a;  // lambda*I - A
    shifted.diagonal().array() += t.lambda;

    // Work in the reflector frame: with H = I - 2 w w*, the restricted
    // operator is (H shifted H)[1:, 1:] and the right-hand side
    // W*(lambda I - A)v is (H shifted v)[1:].
    const ComplexVector w = householder_w(t.v);
    ComplexMatrix hs = shifted;
    hs.noalias() -= 2.0 * w * (w.adjoint() * shifted);
    ComplexMatrix hsh = hs;
    hsh.noalias() -= 2.0 * (hs * w) * w.adjoint();
    ComplexVector hv = shifted * t.v;
    hv -= 2.0 * w * w.dot(hv);

    const Eigen::HouseholderQR<ComplexMatrix> qr(hsh.block(1, 1, n - 1, n - 1));
    const double scale = hsh.block(1, 1, n - 1, n - 1).norm();
    const double pivot_tol = static_cast<double>(n) * 0x1.0p-52 * scale;
    if (qr.matrixQR().diagonal().cwiseAbs().minCoeff() <= pivot_tol) {
        throw IllPosedError("newton_step: restricted operator numerically singular");
    }
    const ComplexVector y = qr.solve(hv.tail(n - 1));

    // v_dot = W y = H [0; y].
    ComplexVector z(n);
    z(0) = ComplexScalar(0.0, 0.0);
    z.tail(n - 1) = y;
    ComplexVector v_dot = z - 2.0 * w * w.dot(z);

    ComplexVector v_new = t.v - v_dot;
    const ComplexScalar lambda_dot =
        t.v.dot(shifted * v_new) / static_cast<ComplexScalar>(t.v.squaredNorm());

    EigenTriple out;
    out.a = t.a;
    out.lambda = t.lambda - lambda_dot;
    const double vn = v_new.norm();
    if (vn == 0.0) throw IllPosedError("newton_step: degenerate update");
    out.v = v_new / vn;
    return out;
}

bool certify_approximate(const EigenTriple& t, const EigenTriple& exact) {
    const double anorm = exact.a.norm();
    if (residual(exact) > 1e-12 * anorm) {
        throw ContractError("certify_approximate: exact pair residual too large");
    }
    const double mu = mu_of(exact);
    if (!std::isfinite(mu)) {
        throw ContractError("certify_approximate: exact pair is ill-posed");
    }
    return dp2(t, exact) <= kC0 / mu;
}

bool mu_perturbation_bound(const EigenTriple& t, const EigenTriple& tp, double eps) {
    if (!(eps > 0.0 && eps <= 0.5)) {
        throw ContractError("mu_perturbation_bound: eps must be in (0, 1/2]");
    }
    if (std::abs(t.a.norm() - 1.0) > 1e-8) {
        throw ContractError("mu_perturbation_bound: ||A||_F must be 1");
    }
    if (t.a.rows() != tp.a.rows() || t.a.cols() != tp.a.cols() ||
        !(t.a.array() == tp.a.array()).all()) {
        throw ContractError("mu_perturbation_bound: triples must share the matrix");
    }
    const double mu = mu_of(t);
    if (!std::isfinite(mu)) {
        throw ContractError("mu_perturbation_bound: mu(t) must be finite");
    }
    if (dp2(t, tp) > eps / (5.0 * mu)) {
        throw ContractError("mu_perturbation_bound: dp2(t, t') exceeds eps/(5 mu)");
    }
    const double mu_p = mu_of(tp);
    return mu / (1.0 + eps) <= mu_p && mu_p <= mu / (1.0 - eps);
}

}  // namespace eigenflow
