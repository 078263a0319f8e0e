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

#include "wernerest/validation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "wernerest/bounds.hpp"
#include "wernerest/errors.hpp"
#include "wernerest/io.hpp"
#include "wernerest/protocol.hpp"
#include "wernerest/qcore.hpp"
#include "wernerest/tomography.hpp"

namespace wernerest {

namespace {

constexpr double kExactTolerance = 1e-12;

// Tracks the worst deviation of a check and whether any point violated it.
class Tracker {
   public:
    Tracker(std::string name, bool perturbed, double size) : perturbed_(perturbed), size_(size) {
        result_.name = std::move(name);
    }

    bool perturbed() const { return perturbed_; }
    /// Additive offset applied to analytic values when perturbed.
    double offset() const { return perturbed_ ? size_ : 0.0; }

    void deviation(double dev, double tol, const std::string& where) {
        if (dev > result_.worst_deviation || (std::isnan(dev) && result_.passed)) {
            result_.worst_deviation = dev;
            result_.detail = where;
        }
        if (!(dev <= tol)) {
            fail(where);
        }
    }

    void require(bool ok, const std::string& where) {
        if (!ok) {
            fail(where);
        }
    }

    CheckResult finish() && { return std::move(result_); }

   private:
    void fail(const std::string& where) {
        if (result_.passed) {
            result_.passed = false;
            result_.detail = where;
        }
    }

    bool perturbed_;
    double size_;
    CheckResult result_;
};

std::string at(double w) { return "w=" + format_number(w); }
std::string at(double w, double x) { return "w=" + format_number(w) + " x=" + format_number(x); }

std::vector<double> unit_grid(std::size_t intervals) {
    std::vector<double> grid(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i) {
        grid[i] = static_cast<double>(i) / static_cast<double>(intervals);
    }
    return grid;
}

void oracle_equivalence(Tracker& t, unsigned density) {
    for (double w : unit_grid(100 * density)) {
        for (double x : unit_grid(10 * density)) {
            const NoisePairConfig cfg{WernerParam(w), DepolarizingParam(x)};
            const OutcomeDistribution analytic = outcome_distribution(cfg);
            const DensityMatrix fresh = werner_state(cfg.w);
            const OutcomeDistribution dense = distill_round(depolarize(fresh, cfg.x), fresh).probabilities;
            for (Outcome o : kAllOutcomes) {
                t.deviation(std::abs(analytic[o] + t.offset() - dense[o]), kExactTolerance, at(w, x));
            }
        }
    }
}

void depolarized_werner(Tracker& t, unsigned density) {
    for (double w : unit_grid(20 * density)) {
        for (double x : unit_grid(10 * density)) {
            const DensityMatrix lhs = depolarize(werner_state(WernerParam(w)), DepolarizingParam(x));
            const double w_out = std::clamp(1.0 - (1.0 - x) * (1.0 - w) + t.offset(), 0.0, 1.0);
            t.deviation(lhs.max_abs_diff(werner_state(WernerParam(w_out))), kExactTolerance, at(w, x));
        }
    }
}

void constructors_valid(Tracker& t, unsigned density) {
    for (double w : unit_grid(20 * density)) {
        const DensityMatrix rho = werner_state(WernerParam(w));
        const double offset = t.offset();
        t.deviation(rho.trace_error() + offset, kTraceTolerance, at(w));
        t.deviation(rho.hermiticity_error(), kHermitianTolerance, at(w));
        t.require(rho.min_eigenvalue() >= -kPsdTolerance, at(w) + " not PSD");
    }
    t.require(bell_phi_plus().is_valid(), "bell_phi_plus");
}

void p00_round_trip(Tracker& t, unsigned density) {
    for (double w : unit_grid(1000 * density)) {
        const double back = w_from_p00(p00_from_w(WernerParam(w)) + t.offset()).w.value();
        t.deviation(std::abs(back - w), kExactTolerance, at(w));
    }
}

void tomo_round_trip(Tracker& t, unsigned density) {
    for (double w : unit_grid(1000 * density)) {
        const double back = tomo_w_from_p00(tomo_p00_from_w(WernerParam(w)) + t.offset()).w.value();
        t.deviation(std::abs(back - w), kExactTolerance, at(w));
        const double dense = werner_state(WernerParam(w))(0, 0).real();
        t.deviation(std::abs(dense - tomo_p00_from_w(WernerParam(w))), kExactTolerance, at(w));
    }
}

void p00_monotone(Tracker& t, unsigned density) {
    const auto grid = unit_grid(1000 * density);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double prev = p00_from_w(WernerParam(grid[i - 1]));
        double cur = p00_from_w(WernerParam(grid[i]));
        if (t.perturbed() && i == grid.size() / 2) {
            cur = prev;
        }
        t.require(cur < prev, at(grid[i]) + " not strictly decreasing");
    }
}

void fidelity_recursion(Tracker& t, unsigned density) {
    // F spans (1/4, 1] so every Werner parameter w = 4(1 - F)/3 is valid.
    const std::size_t points = 100 * density;
    for (std::size_t i = 1; i <= points; ++i) {
        const double F = 0.25 + 0.75 * static_cast<double>(i) / static_cast<double>(points);
        const DensityMatrix pair = werner_state(w_from_fidelity(F));
        const auto kept = post_selected_state(distill_round(pair, pair));
        t.require(kept.has_value(), "F=" + format_number(F) + " no kept state");
        if (kept) {
            const double dense = phi_plus_fidelity(*kept);
            t.deviation(std::abs(fidelity_after_distillation(F) + t.offset() - dense), kExactTolerance,
                        "F=" + format_number(F));
        }
    }
}

void fidelity_gain(Tracker& t, unsigned density) {
    const double threshold = t.perturbed() ? 0.45 : 0.5;
    const std::size_t points = 100 * density;
    for (std::size_t i = 1; i < points; ++i) {
        const double F = 0.25 + 0.75 * static_cast<double>(i) / static_cast<double>(points);
        const double gain = fidelity_after_distillation(F) - F;
        if (F > threshold) {
            t.require(gain > 0.0, "F=" + format_number(F) + " no gain");
        } else if (F < threshold) {
            t.require(gain < 0.0, "F=" + format_number(F) + " gain below threshold");
        }
    }
    for (double fixed : {0.5, 1.0}) {
        t.deviation(std::abs(fidelity_after_distillation(fixed) - fixed), kExactTolerance,
                    "F=" + format_number(fixed));
    }
}

void bound_reduction(Tracker& t, unsigned density) {
    const double unit = t.perturbed() ? std::nextafter(1.0, 0.0) : 1.0;
    for (double w : unit_grid(20 * density)) {
        for (std::uint64_t n : {1ULL, 100ULL, 1175ULL, 4239ULL}) {
            const double plain = distill_failure_bound(n, 0.1, WernerParam(w)).value;
            const double noisy = noisy_distill_failure_bound({n, 0.1, WernerParam(w), unit}).value;
            t.require(plain == noisy, at(w) + " n=" + std::to_string(n) + " not bit-identical");
        }
    }
}

void min_samples_exact(Tracker& t, unsigned density) {
    const double S = std::exp(-0.2);
    for (Method method : {Method::kDistillation, Method::kTomography, Method::kNoisyDistillation}) {
        for (double eps : {0.05, 0.1, 0.2}) {
            for (double delta : {0.01, 0.05, 0.1}) {
                for (double w : unit_grid(20 * density)) {
                    const SampleCount n = min_samples(method, eps, delta, WernerParam(w), S);
                    std::ostringstream where;
                    where << method_name(method) << " eps=" << eps << " delta=" << delta << ' ' << at(w);
                    if (!n) {
                        const double dev = p00_deviation(method, eps, WernerParam(w), S);
                        const bool out_of_reach =
                            dev <= 0.0 ||
                            std::log(2.0 / delta) / (2.0 * dev * dev) >= static_cast<double>(kMaxSampleCount);
                        t.require(out_of_reach, where.str() + " unexpectedly unreachable");
                        continue;
                    }
                    const auto bound = [&](std::uint64_t k) {
                        return failure_bound(method, k, eps, WernerParam(w), S).value;
                    };
                    t.require(bound(*n) <= delta, where.str() + " bound(n_min) > delta");
                    t.require(*n == 1 || bound(*n - 1) > delta, where.str() + " n_min not minimal");
                }
            }
        }
    }
    const SampleCount tomo = min_samples(Method::kTomography, 0.1, 0.01, WernerParam(0.0));
    const std::uint64_t expected = t.perturbed() ? 4240 : 4239;
    t.require(tomo && *tomo == expected, "tomography eps=0.1 delta=0.01 != " + std::to_string(expected));
}

void crossover(Tracker& t, unsigned density) {
    for (double eps : {0.05, 0.1, 0.2}) {
        const double c = crossover_w(eps).value() + (t.perturbed() ? 0.02 : 0.0);
        for (double w : unit_grid(100 * density)) {
            const SampleCount d = min_samples(Method::kDistillation, eps, 0.01, WernerParam(w));
            const SampleCount tomo = min_samples(Method::kTomography, eps, 0.01, WernerParam(w));
            const std::string where = "eps=" + format_number(eps) + ' ' + at(w);
            if (w < c - 1e-9) {
                t.require(d && *d < *tomo, where + " distillation not cheaper below crossover");
            } else if (w > c + 1e-9) {
                t.require(!d || *d > *tomo, where + " distillation not costlier above crossover");
            } else {
                t.require(d && (*d > *tomo ? *d - *tomo : *tomo - *d) <= 1, where + " mismatch at crossover");
            }
        }
    }
}

struct NamedCheck {
    const char* name;
    std::function<void(Tracker&, unsigned)> run;
};

const std::vector<NamedCheck>& checks() {
    static const std::vector<NamedCheck> all = {
        {"constructor-invariants", constructors_valid},
        {"oracle-equivalence", oracle_equivalence},
        {"depolarized-werner", depolarized_werner},
        {"p00-round-trip", p00_round_trip},
        {"tomo-round-trip", tomo_round_trip},
        {"p00-monotone", p00_monotone},
        {"fidelity-recursion", fidelity_recursion},
        {"fidelity-gain", fidelity_gain},
        {"bound-reduction", bound_reduction},
        {"min-samples-exact", min_samples_exact},
        {"crossover", crossover},
    };
    return all;
}

}  // namespace

bool ValidationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> validation_check_names() {
    std::vector<std::string> names;
    for (const NamedCheck& c : checks()) {
        names.emplace_back(c.name);
    }
    return names;
}

ValidationReport run_validation(const ValidationOptions& options) {
    if (options.grid_density == 0) {
        throw DomainError("grid density must be at least 1");
    }
    if (options.perturb) {
        const auto names = validation_check_names();
        if (std::find(names.begin(), names.end(), *options.perturb) == names.end()) {
            throw DomainError("unknown validation check '" + *options.perturb + "'");
        }
    }
    ValidationReport report;
    for (const NamedCheck& c : checks()) {
        const bool perturbed = options.perturb && *options.perturb == c.name;
        Tracker tracker(c.name, perturbed, options.perturbation_size);
        try {
            c.run(tracker, options.grid_density);
        } catch (const std::exception& e) {
            tracker.require(false, std::string("exception: ") + e.what());
        }
        report.checks.push_back(std::move(tracker).finish());
    }
    return report;
}

}  // namespace wernerest
