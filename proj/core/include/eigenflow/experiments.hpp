#pragma once

#include "eigenflow/geometry.hpp"
#include "eigenflow/homotopy.hpp"
#include "eigenflow/rng.hpp"
#include "eigenflow/types.hpp"

#include <nlohmann/json_fwd.hpp>

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eigenflow {

enum class BoundKind {
    Equality,      // pass iff |estimate - reference| <= tolerance
    UpperBound,    // pass iff estimate <= reference + half_width
    LowerBound,    // pass iff estimate >= reference - half_width
    Informational  // reported, never gated
};

struct ExperimentReport {
    std::string name;
    int n = 0;  // matrix size (n or m, per experiment)
    std::size_t samples = 0;
    double estimate = 0.0;
    double half_width = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    BoundKind kind = BoundKind::Equality;
    bool pass = false;
    RngHandle seed;
    std::vector<std::pair<std::string, double>> extras;  // e.g. plain mean next to MoM

    void apply_verdict();
};

// |det(B - lambda I)|^2, the coarea reweighting factor.
struct CoareaWeight {
    double value = 0.0;
};
CoareaWeight coarea_weight(const ComplexMatrix& b, ComplexScalar lambda);

// E|det A|^2 over centered Gaussian G(m, sigma^2); reference sigma^{2m} m!.
ExperimentReport exp_det_moment(int m, double sigma, std::size_t samples, RngHandle rng);

// Median-of-means of ||A^{-1}||_F^2 |det A|^2 over G(m); reference m! * m.
ExperimentReport exp_inv_det_moment(int m, std::size_t samples, RngHandle rng);

// Median-of-means of ||M^+||_F^2 over (n-1) x n Gaussians; reference n - 1.
ExperimentReport exp_pinv_moment(int n, std::size_t samples, RngHandle rng);

using CoareaTestFunction =
    std::function<double(const ComplexMatrix& a, ComplexScalar lambda, const ComplexVector& v)>;
CoareaTestFunction coarea_phi_one();
CoareaTestFunction coarea_phi_exp_neg_lambda_sq();

// Both sides of the eigenpair-sum deintegration identity for a bounded
// unitarily invariant phi: left sums phi over oracle eigenpairs of Gaussian A,
// right averages phi * |det(B - lambda I)|^2 / Gamma(n) in the (lambda, w, B)
// chart. estimate is left - right; extras carry both sides.
ExperimentReport exp_coarea_identity(int n, const CoareaTestFunction& phi,
                                     std::string_view phi_name, std::size_t samples,
                                     RngHandle rng);

// Mean of (1/n) sum mu_F^2 / ||A||_F^2 over G(n, sigma^2) centered anywhere;
// one-sided against n / sigma^2.
ExperimentReport exp_mu_average(int n, double sigma, const ComplexMatrix& center,
                                std::size_t samples, RngHandle rng);

// Same statistic for A uniform on the unit Frobenius sphere; bound n^3.
ExperimentReport exp_mu_sphere(int n, std::size_t samples, RngHandle rng);

// Mean spherical distance between independent uniform sphere points; pi/2.
ExperimentReport exp_geodesic_constant(int n, std::size_t samples, RngHandle rng);

// Two rows: acceptance probability of the Omega_n test (>= 1/2, so C_n <= 2)
// and the max accepted-sample determinant ratio (<= 2e).
std::vector<ExperimentReport> exp_sn_cn_bounds(int n, std::size_t samples, RngHandle rng);

struct StepScalingResult {
    std::vector<ExperimentReport> rows;  // mean total steps per n (informational)
    double loglog_slope = 0.0;
    std::size_t failed_runs = 0;
};

// Mean homotopy step counts per size for algorithm a) or b); asymptotic
// claims are reported, not gated.
StepScalingResult exp_step_scaling(char algo, std::span<const int> n_list, std::size_t trials,
                                   RngHandle rng);

// --- Oracle quadrature of the step-count bound -----------------------------

struct QuadratureOptions {
    int initial_nodes = 128;  // intervals of the first pass
    int max_depth = 14;       // further bisection levels per interval
    double rel_tol = 2e-3;
};

// Integral of mu(B_t, lambda_t, v_t)^2 over the path, with (lambda_t, v_t)
// continued by matching reference-eigendecomposition pairs between nodes.
// Independent of the tracker; this is the reference side of the step bound.
double mu_squared_path_integral(const GreatCirclePath& path, ComplexScalar lambda0,
                                const ComplexVector& v0, const QuadratureOptions& opts = {});

// Oracle continuation step: the eigenpair of `a` closest to `anchor` in dp2.
EigenTriple oracle_continued_pair(const ComplexMatrix& a, const EigenTriple& anchor);

// --- Suite + serialization --------------------------------------------------

struct VerifySuiteOptions {
    RngHandle seed;
    std::vector<std::string> filter;  // substring match on report names; empty = all
};

// The equality/bound battery driven by `verify`: determinant moments,
// inverse-determinant moments, pseudoinverse moments, coarea identity,
// geodesic constant, condition-number bounds, sampler cost.
std::vector<ExperimentReport> run_verify_suite(const VerifySuiteOptions& opts);

std::string reports_to_csv(std::span<const ExperimentReport> reports);
nlohmann::json reports_to_json(std::span<const ExperimentReport> reports);
std::string reports_to_text(std::span<const ExperimentReport> reports);

}  // namespace eigenflow
