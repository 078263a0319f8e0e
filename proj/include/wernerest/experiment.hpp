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

#ifndef WERNEREST_EXPERIMENT_HPP
#define WERNEREST_EXPERIMENT_HPP

// Monte Carlo realization of the distillation-based estimation experiment:
// sample rounds, count (+1, +1) target outcomes, invert to w_hat and report
// the a-posteriori failure probability delta. A repetition harness checks the
// empirical failure frequency against the analytic bounds.
//
// Reproducibility: trials are grouped in fixed blocks of kTrialBlockSize and
// block b draws from Rng(derive_seed(seed, b)); repetition r of a harness run
// uses seed derive_seed(master_seed, r). Results are therefore independent of
// how many worker threads execute the blocks.
//
// Note that delta is computed from the realized precision eps, as the
// procedure prescribes, so it is a post-hoc quantity rather than a
// pre-registered confidence level.

#include <cstdint>
#include <span>
#include <vector>

#include "wernerest/outcome.hpp"
#include "wernerest/protocol.hpp"
#include "wernerest/qcore.hpp"
#include "wernerest/rng.hpp"

namespace wernerest {

inline constexpr std::uint64_t kTrialBlockSize = 1ULL << 16;

/// Z eigenvalues (+1 or -1) read by Alice and Bob on their target qubits.
struct TrialOutcome {
    int za = +1;
    int zb = +1;

    friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

TrialOutcome to_trial_outcome(Outcome o);
Outcome to_outcome(TrialOutcome t);

/// Per-trial depolarizing strength applied to the idled first copy.
class NoiseSchedule {
   public:
    enum class Mode { kNone, kFixed, kConstantIdle, kExponentialIdle };

    static NoiseSchedule none() { return NoiseSchedule(); }
    static NoiseSchedule fixed(DepolarizingParam x);
    /// Every trial idles for t: x = 1 - exp(-t / T).
    static NoiseSchedule constant_idle(double t, double T);
    /// Idle times t_i drawn i.i.d. exponential with the given mean.
    static NoiseSchedule exponential_idle(double mean_t, double T);

    Mode mode() const { return mode_; }
    double x() const { return x_; }
    double t() const { return t_; }
    double T() const { return T_; }

    /// True when every trial has x_i = 0.
    bool noise_free() const { return mode_ == Mode::kExponentialIdle ? t_ == 0.0 : x_ == 0.0; }
    /// x_i for the next trial. Consumes randomness only in exponential mode.
    DepolarizingParam draw(Rng& rng) const;

   private:
    NoiseSchedule() = default;

    Mode mode_ = Mode::kNone;
    double x_ = 0.0;
    double t_ = 0.0;
    double T_ = 1.0;
};

const char* mode_name(NoiseSchedule::Mode mode);

enum class OutcomeModel {
    /// Closed-form outcome_distribution.
    kAnalytic,
    /// Dense density-matrix pipeline; slow, for cross-checking.
    kDense,
};

/// Draws one round's target outcome from outcome_distribution(cfg).
TrialOutcome sample_trial(const NoisePairConfig& cfg, Rng& rng);

/// Every intermediate quantity of the estimation step.
struct EstimationTrace {
    std::uint64_t n_count = 0;
    std::uint64_t N = 0;
    double eps_w = 0.0;
    double S = 1.0;
    double p00_hat = 0.0;
    /// p00_hat after clamping onto the physical range.
    double p00_used = 0.0;
    double w_hat = 0.0;
    double w_plus = 0.0;
    double w_minus = 0.0;
    double p00_plus = 0.0;
    double p00_minus = 0.0;
    double eps = 0.0;
    double delta_raw = 0.0;
    /// delta_raw capped at 1.
    double delta = 0.0;
    bool clamped = false;
    /// w_plus or w_minus left [0, 1] and was clamped.
    bool bracket_clamped = false;
};

/// Estimation step from the number of 00 counts in N rounds.
///
/// With S = 1 the noise-free relations p00 = (2 - 2w + w^2) / 4 and
/// w = 1 - sqrt(4 p00 - 1) are used; otherwise their S-attenuated forms.
EstimationTrace estimate_from_counts(std::uint64_t n_count, std::uint64_t N, double eps_w, double S = 1.0);

/// Counts (+1, +1) outcomes in a recorded sequence and runs the estimation step.
EstimationTrace estimate_from_outcomes(std::span<const TrialOutcome> outcomes, double eps_w);

struct ExperimentConfig {
    WernerParam w{0.0};
    NoiseSchedule noise = NoiseSchedule::none();
    OutcomeModel model = OutcomeModel::kAnalytic;
};

struct ExperimentResult {
    std::uint64_t n_count = 0;
    std::uint64_t N = 0;
    double eps_w = 0.0;
    double p00_hat = 0.0;
    double w_hat = 0.0;
    double eps = 0.0;
    double delta = 1.0;
    double realized_S = 1.0;
    std::uint64_t seed = 0;
    bool clamped = false;
    OutcomeCounts counts;
};

/// Runs N distillation rounds and the estimation step. threads = 0 uses the
/// hardware concurrency; the result does not depend on it.
ExperimentResult run_algorithm1(std::uint64_t N, double eps_w, const ExperimentConfig& cfg, std::uint64_t seed,
                                unsigned threads = 1);

struct RepetitionRecord {
    std::uint64_t rep = 0;
    std::uint64_t seed = 0;
    double w_hat = 0.0;
    double realized_S = 1.0;
    bool fail = false;
};

struct RepetitionSummary {
    std::vector<RepetitionRecord> records;
    std::uint64_t failures = 0;
    double rate = 0.0;
    /// Binomial standard error sqrt(rate (1 - rate) / reps).
    double sigma = 0.0;
    double mean_realized_S = 1.0;
};

/// Repeats run_algorithm1 reps times and records how often |w_hat - w| >= eps_w.
RepetitionSummary empirical_failure_rate(const ExperimentConfig& cfg, std::uint64_t N, double eps_w,
                                         std::uint64_t reps, std::uint64_t master_seed, unsigned threads = 1);

}  // namespace wernerest

#endif
