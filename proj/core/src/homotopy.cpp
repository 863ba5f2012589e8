#include "eigenflow/homotopy.hpp"

#include "eigenflow/errors.hpp"

#include <cmath>
#include <limits>
#include <ostream>

namespace eigenflow {

namespace {

constexpr double kDegenerateTol = 1e-12;

}  // namespace

ComplexMatrix GreatCirclePath::at(double t) const {
    return start * std::cos(t) + direction * std::sin(t);
}

GreatCirclePath build_path(const ComplexMatrix& a0, const ComplexMatrix& a) {
    if (a0.rows() != a.rows() || a0.cols() != a.cols()) {
        throw DimensionError("build_path: endpoint shapes differ");
    }
    const double n0 = a0.norm();
    const double n1 = a.norm();
    if (n0 == 0.0 || n1 == 0.0) throw DegeneratePathError("build_path: zero endpoint");

    const ComplexMatrix b0 = a0 / n0;
    const ComplexMatrix b1 = a / n1;
    const double cos_a = frobenius_inner(b0, b1).real();
    if (cos_a >= 1.0 - kDegenerateTol) {
        throw DegeneratePathError("build_path: endpoints in the same class");
    }
    if (cos_a <= -1.0 + kDegenerateTol) {
        throw DegeneratePathError("build_path: antipodal endpoints");
    }

    GreatCirclePath path;
    path.arc_length = std::acos(cos_a);
    path.start = b0;
    path.direction = (b1 - cos_a * b0) / std::sqrt(1.0 - cos_a * cos_a);
    return path;
}

StepConstants StepConstants::for_eps(double eps) {
    if (!(eps > 0.0)) throw DimensionError("StepConstants: eps must be positive");
    StepConstants k;
    k.eps = eps;
    k.alpha = 2.0 * std::sqrt(2.0) * (1.0 + std::sqrt(5.0));
    k.c_eps = std::atan(eps / (std::sqrt(2.0) + k.alpha * (1.0 + eps))) / (1.0 + eps);
    return k;
}

double step_size(double mu_now, const StepConstants& k) {
    if (!std::isfinite(mu_now)) throw IllPosedError("step_size: infinite condition number");
    return k.c_eps / (3.0 * std::sqrt(2.0) * (1.0 + k.eps) * mu_now * mu_now);
}

TrackResult track(const GreatCirclePath& path, ComplexScalar lambda0, const ComplexVector& v0,
                  const StepConstants& k, const TrackOptions& opts) {
    TrackResult result;
    result.lambda = lambda0;
    result.v = v0.normalized();

    double t = 0.0;
    const double a = path.arc_length;
    EigenTriple current{path.at(0.0), result.lambda, result.v};

    while (t < a) {
        const double mu = mu_of(current);
        if (!std::isfinite(mu)) {
            throw IllPosedError("track: infinite condition number on the path");
        }
        const double b = step_size(mu, k);
        const double t_next = std::min(t + b, a);

        current.a = path.at(t_next);
        current = newton_step(current);
        ++result.steps;
        if (result.steps > opts.max_steps) {
            throw BudgetExceededError("track: step budget exceeded");
        }
        if (opts.record_trace) result.trace.push_back({t, b, mu});
        if (opts.observer) opts.observer(t_next, b, mu, current.lambda, current.v);
        t = t_next;
    }

    result.lambda = current.lambda;
    result.v = current.v;
    return result;
}

EigenTriple rescale_to_input(ComplexScalar lambda, const ComplexVector& v,
                             const ComplexMatrix& a) {
    EigenTriple out;
    out.a = a;
    out.lambda = lambda * a.norm();
    out.v = v;
    return out;
}

void write_trace_jsonl(std::ostream& os, const std::vector<StepRecord>& trace) {
    os.precision(17);
    for (const StepRecord& rec : trace) {
        os << "{\"t\": " << rec.t << ", \"b\": " << rec.b << ", \"mu\": " << rec.mu << "}\n";
    }
}

}  // namespace eigenflow
