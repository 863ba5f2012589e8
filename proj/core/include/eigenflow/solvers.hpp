#pragma once

#include "eigenflow/geometry.hpp"
#include "eigenflow/homotopy.hpp"
#include "eigenflow/rng.hpp"
#include "eigenflow/types.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace eigenflow {

// Centers of the unit-side hexagonal tiling (nearest-center distance sqrt(3)),
// enumerated by increasing modulus with an angular tie-break in [0, 2pi);
// the first point is 0 and the first ring sits at angles k*pi/3 with one
// center on the positive real axis.
std::vector<ComplexScalar> hexagonal_lattice_points(int n);

struct StartPair {
    ComplexScalar lambda;
    ComplexVector v;
};

struct StartSystem {
    ComplexMatrix a0;
    std::vector<StartPair> pairs;
    // ||A0||_F^2 * max_{i != j} |lambda_i - lambda_j|^{-2}; NaN unless the
    // start is a normal (diagonal) matrix where the formula applies.
    double mu0_squared = std::numeric_limits<double>::quiet_NaN();
};

// Diagonal start A0 = Diag(lattice points) with pairs (lambda_i, e_i).
StartSystem hexagonal_start(int n);

// One draw of the randomized start's raw ingredients. The acceptance region
// is n |z| ||M^+||_F <= 1; z and M are resampled jointly until accepted.
struct OmegaSample {
    ComplexScalar z;
    ComplexMatrix m;          // (n-1) x n Gaussian
    ComplexMatrix u;          // (n-1) x (n-1) Haar unitary
    ComplexVector w;          // length n-1 Gaussian
    std::uint64_t rejections = 0;  // discarded (z, M) rounds
};

OmegaSample sample_omega(int n, Rng& rng);

// Assembles [[z, w*], [0, M Q_M U]] with known eigenpair (z, e1), where Q_M is
// the Q factor of the reduced QR of M*. Throws a resample signal (RankError)
// on the measure-zero QR failure.
StartSystem phi_n(const OmegaSample& s);

struct SolveBudget {
    double eps = 1.0 / 16.0;
    std::size_t max_steps = 1'000'000;
};

struct SolvedPair {
    ComplexScalar lambda;  // on the input matrix A
    ComplexVector v;
    double mu = 0.0;       // condition number at the returned pair
    std::size_t steps = 0;
    double residual = 0.0;  // ||(lambda I - A) v|| / ||A||_F
    bool certified = false;
};

struct PathFailure {
    std::size_t index = 0;
    std::string reason;
};

struct SolveOutput {
    std::vector<SolvedPair> pairs;
    std::vector<std::size_t> steps_per_path;
    std::vector<PathFailure> failures;
    double wall_ms = 0.0;
    RngHandle seed;  // echo; zero handle for the deterministic algorithm
    // Start system actually tracked (for independent step-bound audits).
    StartSystem start;
    std::uint64_t sampler_rejections = 0;  // algorithm b) only

    bool full_success() const { return failures.empty(); }
};

// Deterministic all-pairs solver: follows the n great-circle paths from the
// hexagonal diagonal start. Paths run as independent parallel tasks.
SolveOutput algorithm_a(const ComplexMatrix& a, const SolveBudget& budget = {});

// Randomized single-pair solver: Omega_n sample -> phi_n -> tracking. On a
// path failure the start is resampled once before the error surfaces.
SolveOutput algorithm_b(const ComplexMatrix& a, Rng& rng, const SolveBudget& budget = {});

// Certify-by-refinement: three extra Newton steps must reach a relative
// residual <= 1e-12 with quadratically decaying residuals.
struct RefinementCheck {
    bool ok = false;
    EigenTriple refined;
    std::vector<double> residuals;  // relative, before/after each step
};

RefinementCheck certify_by_refinement(const ComplexMatrix& a, ComplexScalar lambda,
                                      const ComplexVector& v);

}  // namespace eigenflow
