// Copyright 2026 The wernerest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wernerest/bounds.hpp"
#include "wernerest/errors.hpp"
#include "wernerest/experiment.hpp"
#include "wernerest/io.hpp"
#include "wernerest/protocol.hpp"
#include "wernerest/qcore.hpp"
#include "wernerest/validation.hpp"

namespace wernerest::cli {

namespace {

// Defaults mirror the published figure where it states them (delta, S);
// eps' and the grid are our own choices.
const double kFigureS = std::exp(-0.2);
constexpr double kDefaultEps = 0.1;
constexpr double kDefaultDelta = 0.01;
constexpr double kDefaultGridStart = 0.0;
constexpr double kDefaultGridStop = 0.95;
constexpr double kDefaultGridStep = 0.01;

struct Emitter {
    std::ostream& out;
    std::string path;

    void emit(std::string_view text) const {
        if (path.empty() || path == "-") {
            out << text;
        } else {
            write_output(path, text);
        }
    }
};

std::string num6(double v) { return format_number(v, kTableDigits); }

struct GridFlags {
    std::optional<double> w;
    double start = kDefaultGridStart;
    double stop = kDefaultGridStop;
    double step = kDefaultGridStep;

    std::vector<double> grid() const {
        if (w) {
            return {*w};
        }
        if (start < 0.0 || stop > 1.0) {
            throw DomainError("--w-start/--w-stop must lie within [0, 1]");
        }
        return make_grid(start, stop, step);
    }
};

void add_grid_flags(CLI::App* cmd, GridFlags& g, bool allow_single) {
    if (allow_single) {
        cmd->add_option("--w", g.w, "Single Werner parameter (overrides the grid)")->check(CLI::Range(0.0, 1.0));
    }
    cmd->add_option("--w-start", g.start, "First grid point")->capture_default_str();
    cmd->add_option("--w-stop", g.stop, "Last grid point (inclusive)")->capture_default_str();
    cmd->add_option("--w-step", g.step, "Grid spacing")->check(CLI::PositiveNumber)->capture_default_str();
}

// ---- exact -----------------------------------------------------------------

struct ExactFlags {
    double w = 0.0;
    double x = 0.0;
    std::string format = "text";
    std::string out;
};

int cmd_exact(const ExactFlags& f, std::ostream& out) {
    const NoisePairConfig cfg{WernerParam(f.w), DepolarizingParam(f.x)};
    const OutcomeDistribution dist = outcome_distribution(cfg);
    const double F = fidelity_from_w(cfg.w);
    // The closed-form recursion covers two identical copies; with an idled
    // copy the kept pair's fidelity comes from the dense pipeline.
    double F_after = fidelity_after_distillation(F);
    if (f.x != 0.0) {
        const DensityMatrix fresh = werner_state(cfg.w);
        const auto kept = post_selected_state(distill_round(depolarize(fresh, cfg.x), fresh));
        F_after = kept ? phi_plus_fidelity(*kept) : std::nan("");
    }

    const Emitter emitter{out, f.out};
    if (f.format == "json") {
        const Json j{{"w", round_significant(f.w)},
                     {"x", round_significant(f.x)},
                     {"p00", round_significant(dist.p00)},
                     {"p01", round_significant(dist.p01)},
                     {"p10", round_significant(dist.p10)},
                     {"p11", round_significant(dist.p11)},
                     {"success", round_significant(dist.correlated())},
                     {"F", round_significant(F)},
                     {"F_after", round_significant(F_after)}};
        emitter.emit(j.dump(2) + "\n");
        return kOk;
    }
    std::ostringstream s;
    const auto row = [&s](const char* label, double v) { s << std::left << std::setw(10) << label << num6(v) << '\n'; };
    row("w", f.w);
    row("x", f.x);
    row("p00", dist.p00);
    row("p01", dist.p01);
    row("p10", dist.p10);
    row("p11", dist.p11);
    row("success", dist.correlated());
    row("F", F);
    row("F_after", F_after);
    emitter.emit(s.str());
    return kOk;
}

// ---- bounds / figure1 --------------------------------------------------------

struct BoundsFlags {
    double eps = kDefaultEps;
    double delta = kDefaultDelta;
    double S = kFigureS;
    GridFlags grid;
    std::string format = "text";
    std::string out;
};

std::string curves_table(const std::vector<Figure1Row>& rows) {
    std::ostringstream s;
    s << std::left << std::setw(10) << "w" << std::setw(14) << "n_distill" << std::setw(14) << "n_tomo"
      << std::setw(14) << "n_noisy" << '\n';
    const auto cell = [](const SampleCount& n) { return n ? std::to_string(*n) : std::string(kUnreachable); };
    for (const Figure1Row& r : rows) {
        s << std::left << std::setw(10) << num6(r.w) << std::setw(14) << cell(r.n_distill) << std::setw(14)
          << cell(r.n_tomo) << std::setw(14) << cell(r.n_noisy) << '\n';
    }
    return s.str();
}

int emit_curves(const BoundsFlags& f, std::ostream& out) {
    const Figure1Curves curves = figure1_curves(f.eps, f.delta, f.S, f.grid.grid());
    const Emitter emitter{out, f.out};
    if (f.format == "json") {
        emitter.emit(to_json(curves).dump(2) + "\n");
    } else if (f.format == "csv") {
        emitter.emit(figure1_csv(figure1_rows(curves)));
    } else {
        emitter.emit(curves_table(figure1_rows(curves)));
    }
    return kOk;
}

// ---- run -----------------------------------------------------------------------

struct RunFlags {
    double w = 0.0;
    std::uint64_t N = 0;
    double eps_w = 0.0;
    std::uint64_t seed = 1;
    std::uint64_t reps = 0;
    std::optional<double> x;
    std::optional<double> t;
    std::optional<double> T;
    std::string idle = "constant";
    unsigned threads = 1;
    bool dense = false;
    std::string format = "json";
    std::string out;
};

NoiseSchedule schedule_from(const RunFlags& f) {
    if (f.x) {
        return NoiseSchedule::fixed(DepolarizingParam(*f.x));
    }
    if (f.t) {
        const double T = f.T.value_or(1.0);
        return f.idle == "exponential" ? NoiseSchedule::exponential_idle(*f.t, T) : NoiseSchedule::constant_idle(*f.t, T);
    }
    return NoiseSchedule::none();
}

int cmd_run(const RunFlags& f, std::ostream& out, std::ostream& err) {
    ExperimentConfig cfg;
    cfg.w = WernerParam(f.w);
    cfg.noise = schedule_from(f);
    cfg.model = f.dense ? OutcomeModel::kDense : OutcomeModel::kAnalytic;
    const Emitter emitter{out, f.out};

    if (f.reps == 0) {
        const ExperimentResult r = run_algorithm1(f.N, f.eps_w, cfg, f.seed, f.threads);
        if (f.format == "csv") {
            emitter.emit(experiment_csv(r));
        } else {
            emitter.emit(to_json(r).dump(2) + "\n");
        }
        return kOk;
    }

    const RepetitionSummary summary = empirical_failure_rate(cfg, f.N, f.eps_w, f.reps, f.seed, f.threads);
    const bool noisy = !cfg.noise.noise_free();
    const double S = noisy ? summary.mean_realized_S : 1.0;
    const TailBound bound = noisy ? noisy_distill_failure_bound({f.N, f.eps_w, cfg.w, S})
                                  : distill_failure_bound(f.N, f.eps_w, cfg.w);
    const double margin = 3.0 * std::sqrt(bound.value * (1.0 - bound.value) / static_cast<double>(f.reps));
    const bool within = summary.rate <= bound.value + margin;

    Json summary_json{{"method", std::string(method_name(noisy ? Method::kNoisyDistillation : Method::kDistillation))},
                      {"w", round_significant(f.w)},
                      {"N", f.N},
                      {"eps_w", round_significant(f.eps_w)},
                      {"reps", f.reps},
                      {"master_seed", f.seed},
                      {"failures", summary.failures},
                      {"failure_rate", round_significant(summary.rate)},
                      {"sigma", round_significant(summary.sigma)},
                      {"mean_realized_S", round_significant(summary.mean_realized_S)},
                      {"analytic_bound", round_significant(bound.value)},
                      {"three_sigma_margin", round_significant(margin)},
                      {"within_bound", within}};
    if (f.format == "csv") {
        emitter.emit(repetition_csv(summary));
        err << summary_json.dump() << '\n';
    } else {
        Json reps = Json::array();
        for (const RepetitionRecord& rec : summary.records) {
            reps.push_back(Json{{"rep", rec.rep}, {"seed", rec.seed}, {"w_hat", round_significant(rec.w_hat)},
                                {"fail", rec.fail}});
        }
        emitter.emit(Json{{"summary", summary_json}, {"reps", std::move(reps)}}.dump(2) + "\n");
    }
    return kOk;
}

// ---- validate ------------------------------------------------------------------

struct ValidateFlags {
    unsigned grid_density = 1;
    std::optional<std::string> perturb;
    std::string out;
};

int cmd_validate(const ValidateFlags& f, std::ostream& out) {
    ValidationOptions options;
    options.grid_density = f.grid_density;
    options.perturb = f.perturb;
    const ValidationReport report = run_validation(options);
    std::ostringstream s;
    for (const CheckResult& c : report.checks) {
        s << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(24) << c.name
          << " worst=" << format_number(c.worst_deviation, 3);
        if (!c.detail.empty()) {
            s << " at " << c.detail;
        }
        s << '\n';
    }
    s << (report.all_passed() ? "all checks passed" : "validation FAILED") << '\n';
    Emitter{out, f.out}.emit(s.str());
    return report.all_passed() ? kOk : kValidationFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Werner-parameter estimation from distillation statistics", "wernerest"};
    app.require_subcommand(1);

    ExactFlags exact;
    auto* exact_cmd = app.add_subcommand("exact", "Exact outcome statistics and fidelities for one round");
    exact_cmd->add_option("--w", exact.w, "Werner parameter")->required()->check(CLI::Range(0.0, 1.0));
    exact_cmd->add_option("--x", exact.x, "Depolarizing strength on the idled copy")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    exact_cmd->add_option("--format", exact.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    exact_cmd->add_option("--out", exact.out, "Output path (default stdout)");

    BoundsFlags bounds;
    auto* bounds_cmd = app.add_subcommand("bounds", "Minimum sample counts for all estimators");
    BoundsFlags figure;
    figure.format = "csv";
    auto* figure_cmd = app.add_subcommand("figure1", "Three-curve sample-complexity table");
    for (auto [cmd, f] : {std::pair{bounds_cmd, &bounds}, std::pair{figure_cmd, &figure}}) {
        cmd->add_option("--eps,--eps-prime", f->eps, "Target precision on w")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--delta", f->delta, "Target failure probability")
            ->check(CLI::Range(0.0, 1.0))
            ->capture_default_str();
        cmd->add_option("--S", f->S, "Noise attenuation factor for the noisy curve")
            ->check(CLI::Range(0.0, 1.0))
            ->capture_default_str();
        add_grid_flags(cmd, f->grid, cmd == bounds_cmd);
        cmd->add_option("--out", f->out, "Output path (default stdout)");
    }
    bounds_cmd->add_option("--format", bounds.format)
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    figure_cmd->add_option("--format", figure.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    RunFlags run;
    auto* run_cmd = app.add_subcommand("run", "Monte Carlo estimation experiment");
    run_cmd->add_option("--w", run.w, "True Werner parameter")->required()->check(CLI::Range(0.0, 1.0));
    run_cmd->add_option("--N", run.N, "Rounds per experiment")->required()->check(CLI::PositiveNumber);
    run_cmd->add_option("--eps-w", run.eps_w, "Estimation precision")->required()->check(CLI::PositiveNumber);
    run_cmd->add_option("--seed", run.seed, "Seed (master seed with --reps)")->capture_default_str();
    run_cmd->add_option("--reps", run.reps, "Repeat the experiment and report the failure rate");
    auto* x_opt = run_cmd->add_option("--x", run.x, "Fixed depolarizing strength on the idled copy")
                      ->check(CLI::Range(0.0, 1.0));
    auto* t_opt = run_cmd->add_option("--t", run.t, "Idle time of the first copy")->check(CLI::NonNegativeNumber);
    auto* T_opt = run_cmd->add_option("--T", run.T, "Memory time")->check(CLI::PositiveNumber);
    auto* idle_opt = run_cmd->add_option("--idle", run.idle, "Idle-time model")
                         ->check(CLI::IsMember({"constant", "exponential"}))
                         ->capture_default_str();
    x_opt->excludes(t_opt)->excludes(T_opt);
    T_opt->needs(t_opt);
    idle_opt->needs(t_opt);
    run_cmd->add_option("--threads", run.threads, "Worker threads (0 = all cores); output does not depend on it")
        ->capture_default_str();
    run_cmd->add_flag("--dense", run.dense, "Sample from the dense density-matrix model");
    run_cmd->add_option("--format", run.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    run_cmd->add_option("--out", run.out, "Output path (default stdout)");

    ValidateFlags validate;
    auto* validate_cmd = app.add_subcommand("validate", "Run the cross-module consistency checks");
    validate_cmd->add_option("--grid-density", validate.grid_density, "Grid refinement factor")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    validate_cmd->add_option("--perturb", validate.perturb, "Perturb one check's constant (harness self-test)");
    validate_cmd->add_option("--out", validate.out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (*exact_cmd) {
            return cmd_exact(exact, out);
        }
        if (*bounds_cmd) {
            return emit_curves(bounds, out);
        }
        if (*figure_cmd) {
            return emit_curves(figure, out);
        }
        if (*run_cmd) {
            return cmd_run(run, out, err);
        }
        return cmd_validate(validate, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const ShapeError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
}

}  // namespace wernerest::cli
