#include "eigenflow/solvers.hpp"

#include "eigenflow/errors.hpp"
#include "eigenflow/linalg.hpp"
#include "eigenflow/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

namespace eigenflow {

namespace {

constexpr double kSameClassTol = 1e-12;

bool same_projective_class(const ComplexMatrix& a0, const ComplexMatrix& a) {
    const double n0 = a0.norm();
    const double n1 = a.norm();
    if (n0 == 0.0 || n1 == 0.0) return false;
    return frobenius_inner(a0, a).real() / (n0 * n1) >= 1.0 - kSameClassTol;
}

SolvedPair make_solved_pair(const ComplexMatrix& a, ComplexScalar lambda, const ComplexVector& v,
                            std::size_t steps) {
    RefinementCheck check = certify_by_refinement(a, lambda, v);
    SolvedPair out;
    out.lambda = check.refined.lambda;
    out.v = check.refined.v;
    out.mu = mu_of(check.refined);
    out.steps = steps;
    out.residual = check.residuals.back();
    out.certified = check.ok;
    return out;
}

}  // namespace

std::vector<ComplexScalar> hexagonal_lattice_points(int n) {
    if (n < 1) throw DimensionError("hexagonal_lattice_points: n must be >= 1");

    // Lattice i*u + j*w with u = sqrt(3), w = sqrt(3) e^{i pi/3};
    // |i u + j w|^2 = 3 (i^2 + i j + j^2), an exact integer times 3.
    struct Candidate {
        long norm_key;  // i^2 + i j + j^2
        double angle;   // in [0, 2 pi)
        ComplexScalar value;
    };

    // A box of radius R covers at least the first 1 + 3R(R+1)... hexagon
    // rings; grow until enough candidates exist inside a safe modulus.
    int radius = 2;
    while (3 * radius * (radius - 1) + 1 < n) ++radius;
    radius += 2;

    const double root3 = std::numbers::sqrt3;
    std::vector<Candidate> candidates;
    candidates.reserve(static_cast<std::size_t>((2 * radius + 1) * (2 * radius + 1)));
    for (int i = -radius; i <= radius; ++i) {
        for (int j = -radius; j <= radius; ++j) {
            const double re = root3 * (i + 0.5 * j);
            const double im = 1.5 * j;
            double angle = std::atan2(im, re);
            if (angle < 0.0) angle += 2.0 * std::numbers::pi;
            candidates.push_back({static_cast<long>(i) * i + static_cast<long>(i) * j +
                                      static_cast<long>(j) * j,
                                  angle, ComplexScalar(re, im)});
        }
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.norm_key != b.norm_key) return a.norm_key < b.norm_key;
        return a.angle < b.angle;
    });

    std::vector<ComplexScalar> points;
    points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) points.push_back(candidates[static_cast<std::size_t>(i)].value);
    return points;
}

StartSystem hexagonal_start(int n) {
    if (n < 2) throw DimensionError("hexagonal_start: n must be >= 2");
    const std::vector<ComplexScalar> lambdas = hexagonal_lattice_points(n);

    StartSystem sys;
    sys.a0 = ComplexMatrix::Zero(n, n);
    sys.pairs.reserve(static_cast<std::size_t>(n));
    double norm_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        sys.a0(i, i) = lambdas[static_cast<std::size_t>(i)];
        norm_sq += std::norm(lambdas[static_cast<std::size_t>(i)]);
        StartPair p;
        p.lambda = lambdas[static_cast<std::size_t>(i)];
        p.v = ComplexVector::Unit(n, i);
        sys.pairs.push_back(std::move(p));
    }
    double min_gap_sq = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            min_gap_sq = std::min(min_gap_sq, std::norm(lambdas[static_cast<std::size_t>(i)] -
                                                        lambdas[static_cast<std::size_t>(j)]));
        }
    }
    sys.mu0_squared = norm_sq / min_gap_sq;
    return sys;
}

OmegaSample sample_omega(int n, Rng& rng) {
    if (n < 2) throw DimensionError("sample_omega: n must be >= 2");
    OmegaSample s;
    const double scale = std::sqrt(2.0 * static_cast<double>(n) * n * n);
    for (;;) {
        const ComplexScalar y = rng.complex_normal();
        s.z = y / scale;
        s.m = sample_gaussian_matrix(n - 1, n, rng);
        const PinvNorms p = pinv_norms(s.m);
        if (static_cast<double>(n) * std::abs(s.z) * p.frob <= 1.0) break;
        ++s.rejections;
    }
    s.w = sample_gaussian_vector(n - 1, rng);
    s.u = haar_unitary(n - 1, rng);
    return s;
}

StartSystem phi_n(const OmegaSample& s) {
    const Eigen::Index n = s.m.cols();
    if (s.m.rows() != n - 1 || s.u.rows() != n - 1 || s.u.cols() != n - 1 ||
        s.w.size() != n - 1) {
        throw DimensionError("phi_n: inconsistent sample shapes");
    }
    // Q factor of the reduced QR of M*; rank failure here is the measure-zero
    // resample signal.
    const QrResult qr = householder_qr_reduced(s.m.adjoint());
    const ComplexMatrix block = s.m * qr.q * s.u;  // (n-1) x (n-1)

    StartSystem sys;
    sys.a0 = ComplexMatrix::Zero(n, n);
    sys.a0(0, 0) = s.z;
    sys.a0.block(0, 1, 1, n - 1) = s.w.adjoint();
    sys.a0.block(1, 1, n - 1, n - 1) = block;

    StartPair p;
    p.lambda = s.z;
    p.v = ComplexVector::Unit(n, 0);
    sys.pairs.push_back(std::move(p));
    return sys;
}

RefinementCheck certify_by_refinement(const ComplexMatrix& a, ComplexScalar lambda,
                                      const ComplexVector& v) {
    const double anorm = a.norm();
    RefinementCheck check;
    check.refined = EigenTriple{a, lambda, v.normalized()};
    check.residuals.push_back(residual(check.refined) / anorm);

    bool decay_ok = true;
    for (int k = 0; k < 3; ++k) {
        try {
            check.refined = newton_step(check.refined);
        } catch (const IllPosedError&) {
            decay_ok = false;
            break;
        }
        const double rel = residual(check.refined) / anorm;
        const double prev = check.residuals.back();
        if (rel > std::max(2.0 * prev * prev, 1e-13)) decay_ok = false;
        check.residuals.push_back(rel);
    }
    check.ok = decay_ok && check.residuals.back() <= 1e-12;
    return check;
}

SolveOutput algorithm_a(const ComplexMatrix& a, const SolveBudget& budget) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n || n < 2) throw DimensionError("algorithm_a: square input with n >= 2");
    if (!all_finite(a)) throw DimensionError("algorithm_a: non-finite input");

    const auto t0 = std::chrono::steady_clock::now();
    SolveOutput out;
    out.start = hexagonal_start(static_cast<int>(n));
    out.pairs.resize(static_cast<std::size_t>(n));
    out.steps_per_path.assign(static_cast<std::size_t>(n), 0);

    const double a0_norm = out.start.a0.norm();

    if (same_projective_class(out.start.a0, a)) {
        // Zero-length paths: the start pairs already solve A up to scale.
        const double scale = a.norm() / a0_norm;
        for (std::size_t i = 0; i < out.pairs.size(); ++i) {
            const StartPair& p = out.start.pairs[i];
            out.pairs[i] = make_solved_pair(a, p.lambda * scale, p.v, 0);
        }
    } else {
        const GreatCirclePath path = build_path(out.start.a0, a);
        const StepConstants constants = StepConstants::for_eps(budget.eps);
        std::vector<PathFailure> failures(static_cast<std::size_t>(n));
        std::vector<bool> failed(static_cast<std::size_t>(n), false);

        parallel_for(0, static_cast<std::size_t>(n), [&](std::size_t i) {
            const StartPair& p = out.start.pairs[i];
            try {
                TrackOptions opts;
                opts.max_steps = budget.max_steps;
                const TrackResult r =
                    track(path, p.lambda / a0_norm, p.v, constants, opts);
                const EigenTriple on_a = rescale_to_input(r.lambda, r.v, a);
                out.pairs[i] = make_solved_pair(a, on_a.lambda, on_a.v, r.steps);
                out.steps_per_path[i] = r.steps;
            } catch (const Error& e) {
                failed[i] = true;
                failures[i] = PathFailure{i, e.what()};
            }
        });
        for (std::size_t i = 0; i < failed.size(); ++i) {
            if (failed[i]) out.failures.push_back(failures[i]);
        }
        // Drop slots of failed paths, preserving index order of the rest.
        if (!out.failures.empty()) {
            std::vector<SolvedPair> kept;
            for (std::size_t i = 0; i < out.pairs.size(); ++i) {
                if (!failed[i]) kept.push_back(std::move(out.pairs[i]));
            }
            out.pairs = std::move(kept);
        }
    }

    out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return out;
}

SolveOutput algorithm_b(const ComplexMatrix& a, Rng& rng, const SolveBudget& budget) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n || n < 2) throw DimensionError("algorithm_b: square input with n >= 2");
    if (!all_finite(a)) throw DimensionError("algorithm_b: non-finite input");

    const auto t0 = std::chrono::steady_clock::now();
    SolveOutput out;
    out.seed = rng.handle();

    // One resample retry: the failure set has measure zero.
    for (int attempt = 0; attempt < 2; ++attempt) {
        StartSystem start;
        OmegaSample sample;
        try {
            sample = sample_omega(static_cast<int>(n), rng);
            start = phi_n(sample);
        } catch (const RankError&) {
            continue;
        }
        try {
            const double a0_norm = start.a0.norm();
            std::size_t steps = 0;
            ComplexScalar lambda_final;
            ComplexVector v_final;
            if (same_projective_class(start.a0, a)) {
                lambda_final = start.pairs[0].lambda * (a.norm() / a0_norm);
                v_final = start.pairs[0].v;
                out.pairs.push_back(make_solved_pair(a, lambda_final, v_final, 0));
            } else {
                const GreatCirclePath path = build_path(start.a0, a);
                TrackOptions opts;
                opts.max_steps = budget.max_steps;
                const TrackResult r = track(path, start.pairs[0].lambda / a0_norm,
                                            start.pairs[0].v,
                                            StepConstants::for_eps(budget.eps), opts);
                steps = r.steps;
                const EigenTriple on_a = rescale_to_input(r.lambda, r.v, a);
                out.pairs.push_back(make_solved_pair(a, on_a.lambda, on_a.v, steps));
            }
            out.steps_per_path.assign(1, steps);
            out.start = std::move(start);
            out.sampler_rejections = sample.rejections;
            out.failures.clear();
            break;
        } catch (const Error& e) {
            out.failures.assign(1, PathFailure{0, e.what()});
            out.pairs.clear();
        }
    }

    out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return out;
}

}  // namespace eigenflow
