#pragma once

#include "eigenflow/geometry.hpp"
#include "eigenflow/types.hpp"

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

namespace eigenflow {

// Great-circle path on the unit Frobenius sphere:
//   B_t = start * cos(t) + direction * sin(t),  t in [0, arc_length].
struct GreatCirclePath {
    ComplexMatrix start;      // unit Frobenius norm
    ComplexMatrix direction;  // unit, Re<start, direction> = 0
    double arc_length = 0.0;  // in [0, pi]

    ComplexMatrix at(double t) const;
};

// Path joining A0/||A0||_F to A/||A||_F. Throws DegeneratePathError when the
// endpoint classes coincide or are antipodal.
GreatCirclePath build_path(const ComplexMatrix& a0, const ComplexMatrix& a);

// Step-size constants of the certified tracker.
struct StepConstants {
    double eps = 1.0 / 16.0;
    double c_eps = 0.0;  // arctan(eps / (sqrt(2) + alpha (1+eps))) / (1+eps)
    double c0 = kC0;
    double alpha = 0.0;  // 2 sqrt(2) (1 + sqrt(5))

    static StepConstants for_eps(double eps = 1.0 / 16.0);
};

// b = C_eps / (3 sqrt(2) (1+eps) mu^2): the 1/3 coefficient sits strictly
// inside the mandated window [C_eps/(6 sqrt2 (1+eps) mu^2), C_eps/(2 sqrt2
// (1+eps) mu^2)]. Throws IllPosedError for infinite mu.
double step_size(double mu_now, const StepConstants& k);

struct StepRecord {
    double t;   // parameter at which the step was taken
    double b;   // accepted step size
    double mu;  // extended condition number used to choose b
};

struct TrackResult {
    ComplexScalar lambda;  // pair on B_a
    ComplexVector v;
    std::size_t steps = 0;
    std::vector<StepRecord> trace;  // empty unless recording was requested
};

// Called after each accepted step with (t_new, b, mu_used, pair at t_new).
using TrackObserver =
    std::function<void(double, double, double, const ComplexScalar&, const ComplexVector&)>;

struct TrackOptions {
    std::size_t max_steps = 1'000'000;
    bool record_trace = false;
    TrackObserver observer;  // optional
};

// Certified predictor-corrector loop: while t < a, compute mu of the current
// pair on B_t, step t by step_size, move to B_t and apply one Newton step.
// The start pair must satisfy the c0/(4 mu) certificate on B_0 (trivially met
// by an exact pair). Throws IllPosedError when mu becomes infinite and
// BudgetExceededError past max_steps.
TrackResult track(const GreatCirclePath& path, ComplexScalar lambda0, const ComplexVector& v0,
                  const StepConstants& k, const TrackOptions& opts = {});

// Carries a certified pair on B_a = A/||A||_F back to A: (lambda ||A||_F, v).
EigenTriple rescale_to_input(ComplexScalar lambda, const ComplexVector& v,
                             const ComplexMatrix& a);

// JSON lines, one record per step: {"t": ..., "b": ..., "mu": ...}.
void write_trace_jsonl(std::ostream& os, const std::vector<StepRecord>& trace);

}  // namespace eigenflow
