#include <eigenflow/errors.hpp>
#include <eigenflow/experiments.hpp>
#include <eigenflow/linalg.hpp>
#include <eigenflow/matrix_io.hpp>
#include <eigenflow/solvers.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace {

using namespace eigenflow;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitPartialFailure = 2;
constexpr int kExitVerifyFailure = 3;

struct CommonOptions {
    std::string algorithm = "a";
    std::optional<std::uint64_t> seed;
    double eps = 1.0 / 16.0;
    std::size_t max_steps = 1'000'000;
    std::string input_path;
    std::string output_path;
    std::string format = "json";
    std::string n_spec = "4";
    std::size_t trials = 50;
    std::vector<std::string> experiments;
};

std::uint64_t resolve_seed(const CommonOptions& opts) {
    if (opts.seed) return *opts.seed;
    std::random_device rd;
    const std::uint64_t chosen =
        (static_cast<std::uint64_t>(rd()) << 32) ^ static_cast<std::uint64_t>(rd());
    std::cerr << "seed: " << chosen << "\n";
    return chosen;
}

void write_output(const CommonOptions& opts, const std::string& content) {
    if (opts.output_path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(opts.output_path);
    if (!out) throw ParseError("cannot open output file: " + opts.output_path);
    out << content;
    if (!content.empty() && content.back() != '\n') out << '\n';
}

nlohmann::json complex_to_json(const ComplexScalar& z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

nlohmann::json vector_to_json(const ComplexVector& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(complex_to_json(v(i)));
    return arr;
}

// Parses "4" or "2..6" into an inclusive list of sizes.
std::vector<int> parse_n_spec(const std::string& spec) {
    const auto dots = spec.find("..");
    if (dots == std::string::npos) return {std::stoi(spec)};
    const int lo = std::stoi(spec.substr(0, dots));
    const int hi = std::stoi(spec.substr(dots + 2));
    if (hi < lo) throw ParseError("bad --n range: " + spec);
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
}

int cmd_solve(const CommonOptions& opts) {
    ComplexMatrix a;
    try {
        a = load_matrix_file(opts.input_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    if (a.rows() != a.cols()) {
        std::cerr << "error: matrix must be square\n";
        return kExitInputError;
    }
    if (a.rows() < 2) {
        std::cerr << "error: need n >= 2\n";
        return kExitInputError;
    }

    const std::uint64_t seed = resolve_seed(opts);
    SolveBudget budget{opts.eps, opts.max_steps};
    SolveOutput sol;
    if (opts.algorithm == "a") {
        sol = algorithm_a(a, budget);
        sol.seed = RngHandle{seed, 0};
    } else {
        Rng rng(seed);
        sol = algorithm_b(a, rng, budget);
    }

    nlohmann::json pairs = nlohmann::json::array();
    for (const SolvedPair& p : sol.pairs) {
        pairs.push_back({{"lambda", complex_to_json(p.lambda)},
                         {"v", vector_to_json(p.v)},
                         {"mu", p.mu},
                         {"steps", p.steps},
                         {"residual", p.residual},
                         {"certified", p.certified}});
    }
    nlohmann::json failed = nlohmann::json::array();
    for (const PathFailure& f : sol.failures) {
        failed.push_back({{"path", f.index}, {"reason", f.reason}});
    }
    const nlohmann::json doc{{"pairs", pairs},
                             {"n", a.rows()},
                             {"algorithm", opts.algorithm},
                             {"seed", seed},
                             {"eps", opts.eps},
                             {"failed_paths", failed},
                             {"wall_ms", sol.wall_ms}};

    if (opts.format == "text") {
        std::ostringstream os;
        os.precision(12);
        for (const SolvedPair& p : sol.pairs) {
            os << "lambda = " << p.lambda.real() << (p.lambda.imag() < 0 ? " - " : " + ")
               << std::abs(p.lambda.imag()) << "i   mu = " << p.mu << "  steps = " << p.steps
               << (p.certified ? "" : "  [uncertified]") << "\n";
        }
        for (const PathFailure& f : sol.failures) {
            os << "path " << f.index << " failed: " << f.reason << "\n";
        }
        write_output(opts, os.str());
    } else {
        write_output(opts, doc.dump(2));
    }

    if (!sol.failures.empty()) {
        for (const PathFailure& f : sol.failures) {
            std::cerr << "path " << f.index << " failed: " << f.reason << "\n";
        }
        return kExitPartialFailure;
    }
    return kExitOk;
}

int cmd_sample_start(const CommonOptions& opts) {
    const std::vector<int> ns = parse_n_spec(opts.n_spec);
    if (ns.size() != 1 || ns[0] < 2) {
        std::cerr << "error: sample-start needs a single --n >= 2\n";
        return kExitInputError;
    }
    const int n = ns[0];
    const std::uint64_t seed = resolve_seed(opts);
    Rng rng(seed);
    const OmegaSample s = sample_omega(n, rng);
    const StartSystem sys = phi_n(s);

    nlohmann::json pairs = nlohmann::json::array();
    for (const StartPair& p : sys.pairs) {
        pairs.push_back({{"lambda", complex_to_json(p.lambda)}, {"v", vector_to_json(p.v)}});
    }
    const nlohmann::json doc{{"a0", matrix_to_json(sys.a0)},
                             {"pairs", pairs},
                             {"z", complex_to_json(s.z)},
                             {"m", matrix_to_json(s.m)},
                             {"u", matrix_to_json(s.u)},
                             {"w", vector_to_json(s.w)},
                             {"rejections", s.rejections},
                             {"n", n},
                             {"seed", seed}};
    write_output(opts, doc.dump(2));
    return kExitOk;
}

int cmd_verify(const CommonOptions& opts) {
    const std::uint64_t seed = resolve_seed(opts);
    VerifySuiteOptions vopts;
    vopts.seed = RngHandle{seed, 0};
    vopts.filter = opts.experiments;
    const std::vector<ExperimentReport> reports = run_verify_suite(vopts);

    if (opts.format == "csv") {
        write_output(opts, reports_to_csv(reports));
    } else if (opts.format == "text") {
        write_output(opts, reports_to_text(reports));
    } else {
        write_output(opts, reports_to_json(reports).dump(2));
    }

    std::size_t failed = 0;
    for (const ExperimentReport& rep : reports) {
        if (rep.kind != BoundKind::Informational && !rep.pass) {
            ++failed;
            std::cerr << "FAIL " << rep.name << ": estimate " << rep.estimate << " vs reference "
                      << rep.reference << "\n";
        }
    }
    if (reports.empty()) {
        std::cerr << "error: no experiments matched the filter\n";
        return kExitInputError;
    }
    if (failed > 0) {
        std::cerr << failed << " experiment(s) failed\n";
        return kExitVerifyFailure;
    }
    return kExitOk;
}

int cmd_bench(const CommonOptions& opts) {
    const std::uint64_t seed = resolve_seed(opts);
    const std::vector<int> ns = parse_n_spec(opts.n_spec);
    const char algo = opts.algorithm == "b" ? 'b' : 'a';
    const StepScalingResult result =
        exp_step_scaling(algo, ns, opts.trials, RngHandle{seed, 0});

    std::vector<ExperimentReport> rows = result.rows;
    if (opts.format == "json") {
        nlohmann::json doc{{"rows", reports_to_json(rows)},
                           {"loglog_slope", result.loglog_slope},
                           {"failed_runs", result.failed_runs},
                           {"seed", seed}};
        write_output(opts, doc.dump(2));
    } else if (opts.format == "text") {
        std::ostringstream os;
        os << reports_to_text(rows);
        os << "log-log slope: " << result.loglog_slope << "\n";
        write_output(opts, os.str());
    } else {
        write_output(opts, reports_to_csv(rows));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified homotopy eigensolver for dense complex matrices"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::uint64_t seed_value = 0;

    const auto add_common = [&](CLI::App* sub, bool with_input) {
        sub->add_option("--algorithm,--algo,-a", opts.algorithm, "Solver algorithm")
            ->check(CLI::IsMember({"a", "b"}));
        sub->add_option("--seed", seed_value, "RNG seed (64-bit)")->each([&](const std::string&) {
            opts.seed = seed_value;
        });
        sub->add_option("--eps", opts.eps, "Tracker step constant epsilon")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-steps", opts.max_steps, "Per-path step budget");
        if (with_input) sub->add_option("--input,-i", opts.input_path, "Input matrix path");
        sub->add_option("--output,-o", opts.output_path, "Output path (default stdout)");
        sub->add_option("--format,-f", opts.format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--n", opts.n_spec, "Matrix size (INT or LO..HI for bench)");
        sub->add_option("--trials", opts.trials, "Trials per size (bench)");
        sub->add_option("--experiments", opts.experiments, "Experiment name filter (verify)")
            ->delimiter(',');
    };

    CLI::App* solve = app.add_subcommand("solve", "Compute certified eigenpairs of a matrix");
    add_common(solve, true);
    CLI::App* sample = app.add_subcommand("sample-start", "Draw a randomized start system");
    add_common(sample, false);
    CLI::App* bench = app.add_subcommand("bench", "Measure homotopy step scaling");
    add_common(bench, false);
    CLI::App* verify = app.add_subcommand("verify", "Run the statistical verification suite");
    add_common(verify, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            if (opts.input_path.empty()) {
                std::cerr << "error: solve requires --input\n";
                return kExitInputError;
            }
            return cmd_solve(opts);
        }
        if (sample->parsed()) return cmd_sample_start(opts);
        if (bench->parsed()) return cmd_bench(opts);
        if (verify->parsed()) return cmd_verify(opts);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
