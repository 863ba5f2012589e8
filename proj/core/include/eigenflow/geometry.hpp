#pragma once

#include "eigenflow/types.hpp"

namespace eigenflow {

// Radius constant of the approximate-eigenpair certificate.
inline constexpr double kC0 = 0.0739;

// A matrix with a candidate eigenvalue and unit eigenvector. The vector is a
// representative of a projective point; ||v|| = 1 is expected by every
// operation below.
struct EigenTriple {
    ComplexMatrix a;
    ComplexScalar lambda;
    ComplexVector v;
};

inline double residual(const EigenTriple& t) {
    return (t.lambda * t.v - t.a * t.v).norm();
}

struct ConditionReport {
    double mu = 1.0;    // >= 1 or +inf
    double mu_f = 1.0;  // mu <= mu_f <= sqrt(n-1) * mu when finite
};

// Deterministic orthonormal basis of the orthogonal complement of v, built by
// Householder completion: columns 2..n of the reflector sending v to a
// multiple of e1. Returns n x (n-1).
ComplexMatrix vperp_basis(const ComplexVector& v);

// Matrix of Pi_{v^perp} (lambda*I - A) |_{v^perp} in the vperp_basis frame;
// (n-1) x (n-1). Singular values do not depend on the basis choice.
ComplexMatrix restricted_operator(const EigenTriple& t);

// mu   = max(1, ||A||_F * ||((I - v v*)(lambda I - A))^+||)
// mu_f = same with the pseudoinverse Frobenius norm.
// Infinite when the numerical rank of (I - v v*)(lambda I - A) is <= n-2.
ConditionReport condition_numbers(const EigenTriple& t);

// Convenience accessor for the operator-norm condition number.
double mu_of(const EigenTriple& t);

// Riemannian distance between projective classes of nonzero vectors:
// arccos(|<u, w>| / (||u|| ||w||)) in [0, pi/2].
double proj_distance(const ComplexVector& u, const ComplexVector& w);

// Projective distance between (A1, lambda1) and (A2, lambda2) viewed as
// points of P(C^{n^2+1}), with the Hermitian inner product
// <(A,l),(A',l')> = <A,A'>_F + l * conj(l').
double pair_distance(const ComplexMatrix& a1, ComplexScalar lambda1, const ComplexMatrix& a2,
                     ComplexScalar lambda2);

// Product metric sqrt(d_P((A1,l1),(A2,l2))^2 + d_P(v1,v2)^2).
double dp2(const EigenTriple& t1, const EigenTriple& t2);

// One projective Newton step: solves the restricted system for v_dot, then
//   lambda_dot = <(lambda I - A)(v - v_dot), v> / ||v||^2,
// returning (lambda - lambda_dot, normalize(v - v_dot)) on the same matrix.
// Throws IllPosedError when the restricted operator is singular.
EigenTriple newton_step(const EigenTriple& t);

// True iff dp2(t, exact) <= c0 / mu(exact); guarantees immediate quadratic
// Newton convergence from t to the exact pair. `exact` must satisfy
// residual <= 1e-12 ||A||_F with finite mu (ContractError otherwise).
bool certify_approximate(const EigenTriple& t, const EigenTriple& exact);

// Checked perturbation sandwich for mu: requires ||A||_F = 1, t.a == tp.a,
// eps in (0, 1/2], finite mu(t) and dp2(t, tp) <= eps / (5 mu(t));
// returns whether mu(t)/(1+eps) <= mu(tp) <= mu(t)/(1-eps).
bool mu_perturbation_bound(const EigenTriple& t, const EigenTriple& tp, double eps);

}  // namespace eigenflow
