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

#include "wernerest/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "wernerest/errors.hpp"

namespace wernerest {

namespace {

// Runs body(i) for i in [0, count) on up to `threads` workers. Callers write
// into per-index slots, so the outcome does not depend on scheduling.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    const auto workers = static_cast<std::size_t>(std::min<std::size_t>(threads, count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t k = 0; k < workers; ++k) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                body(i);
            }
        });
    }
}

double p00_model(double w, double S) {
    const WernerParam param(w);
    return S == 1.0 ? p00_from_w(param) : attenuated_p00(param, S);
}

OutcomeDistribution model_distribution(WernerParam w, DepolarizingParam x, OutcomeModel model) {
    if (model == OutcomeModel::kAnalytic) {
        return outcome_distribution({w, x});
    }
    const DensityMatrix fresh = werner_state(w);
    return distill_round(depolarize(fresh, x), fresh).probabilities;
}

struct BlockTally {
    OutcomeCounts counts;
    double survival_sum = 0.0;
};

}  // namespace

TrialOutcome to_trial_outcome(Outcome o) {
    const auto bits = index_of(o);
    return {(bits & 2) ? -1 : +1, (bits & 1) ? -1 : +1};
}

Outcome to_outcome(TrialOutcome t) {
    if ((t.za != 1 && t.za != -1) || (t.zb != 1 && t.zb != -1)) {
        throw DomainError("Z measurement results must be +1 or -1");
    }
    const std::size_t bits = (t.za == -1 ? 2u : 0u) | (t.zb == -1 ? 1u : 0u);
    return kAllOutcomes[bits];
}

NoiseSchedule NoiseSchedule::fixed(DepolarizingParam x) {
    NoiseSchedule s;
    s.mode_ = Mode::kFixed;
    s.x_ = x.value();
    return s;
}

NoiseSchedule NoiseSchedule::constant_idle(double t, double T) {
    NoiseSchedule s;
    s.mode_ = Mode::kConstantIdle;
    s.x_ = DepolarizingParam::from_idle_time(t, T).value();
    s.t_ = t;
    s.T_ = T;
    return s;
}

NoiseSchedule NoiseSchedule::exponential_idle(double mean_t, double T) {
    // Validates the pair.
    (void)DepolarizingParam::from_idle_time(mean_t, T);
    NoiseSchedule s;
    s.mode_ = Mode::kExponentialIdle;
    s.t_ = mean_t;
    s.T_ = T;
    return s;
}

DepolarizingParam NoiseSchedule::draw(Rng& rng) const {
    if (mode_ == Mode::kExponentialIdle) {
        return DepolarizingParam::from_idle_time(rng.exponential(t_), T_);
    }
    return DepolarizingParam(x_);
}

const char* mode_name(NoiseSchedule::Mode mode) {
    switch (mode) {
        case NoiseSchedule::Mode::kNone:
            return "none";
        case NoiseSchedule::Mode::kFixed:
            return "fixed-x";
        case NoiseSchedule::Mode::kConstantIdle:
            return "constant-idle";
        case NoiseSchedule::Mode::kExponentialIdle:
            return "exponential-idle";
    }
    return "unknown";
}

TrialOutcome sample_trial(const NoisePairConfig& cfg, Rng& rng) {
    return to_trial_outcome(rng.draw(outcome_distribution(cfg)));
}

EstimationTrace estimate_from_counts(std::uint64_t n_count, std::uint64_t N, double eps_w, double S) {
    if (N == 0) {
        throw DomainError("number of samples N must be at least 1");
    }
    if (n_count > N) {
        throw DomainError("00 count exceeds the number of samples");
    }
    if (!(eps_w > 0.0) || !std::isfinite(eps_w)) {
        throw DomainError("estimation precision eps_w must be positive, got " + show(eps_w));
    }
    if (!(S > 0.0 && S <= 1.0)) {
        throw DomainError("attenuation factor S must lie in (0, 1], got " + show(S));
    }

    EstimationTrace tr;
    tr.n_count = n_count;
    tr.N = N;
    tr.eps_w = eps_w;
    tr.S = S;
    tr.p00_hat = static_cast<double>(n_count) / static_cast<double>(N);

    const WernerEstimate est = S == 1.0 ? w_from_p00(tr.p00_hat) : w_from_attenuated_p00(tr.p00_hat, S);
    tr.w_hat = est.w.value();
    tr.clamped = est.clamped;
    tr.p00_used = std::clamp(tr.p00_hat, 0.25, (1.0 + S) / 4.0);

    const double w_plus = tr.w_hat + eps_w;
    const double w_minus = tr.w_hat - eps_w;
    tr.w_plus = std::min(w_plus, 1.0);
    tr.w_minus = std::max(w_minus, 0.0);
    tr.bracket_clamped = tr.w_plus != w_plus || tr.w_minus != w_minus;

    tr.p00_plus = p00_model(tr.w_plus, S);
    tr.p00_minus = p00_model(tr.w_minus, S);
    tr.eps = std::max(std::abs(tr.p00_hat - tr.p00_plus), std::abs(tr.p00_hat - tr.p00_minus));
    tr.delta_raw = 2.0 * std::exp(-2.0 * static_cast<double>(N) * tr.eps * tr.eps);
    // Kept strictly positive if the exponential underflows.
    tr.delta = std::clamp(tr.delta_raw, std::numeric_limits<double>::denorm_min(), 1.0);
    return tr;
}

EstimationTrace estimate_from_outcomes(std::span<const TrialOutcome> outcomes, double eps_w) {
    std::uint64_t n_count = 0;
    for (const TrialOutcome& t : outcomes) {
        if (to_outcome(t) == Outcome::k00) {
            ++n_count;
        }
    }
    return estimate_from_counts(n_count, outcomes.size(), eps_w);
}

ExperimentResult run_algorithm1(std::uint64_t N, double eps_w, const ExperimentConfig& cfg, std::uint64_t seed,
                                unsigned threads) {
    if (N == 0) {
        throw DomainError("number of samples N must be at least 1");
    }
    if (!(eps_w > 0.0) || !std::isfinite(eps_w)) {
        throw DomainError("estimation precision eps_w must be positive, got " + show(eps_w));
    }

    const bool per_trial_noise = cfg.noise.mode() == NoiseSchedule::Mode::kExponentialIdle;
    OutcomeDistribution shared_dist;
    if (!per_trial_noise) {
        shared_dist = model_distribution(cfg.w, DepolarizingParam(cfg.noise.x()), cfg.model);
    }

    const std::size_t blocks = static_cast<std::size_t>((N + kTrialBlockSize - 1) / kTrialBlockSize);
    std::vector<BlockTally> tallies(blocks);
    parallel_for(blocks, threads, [&](std::size_t b) {
        Rng rng(derive_seed(seed, b));
        const std::uint64_t begin = b * kTrialBlockSize;
        const std::uint64_t end = std::min(N, begin + kTrialBlockSize);
        BlockTally& tally = tallies[b];
        for (std::uint64_t i = begin; i < end; ++i) {
            const DepolarizingParam x = cfg.noise.draw(rng);
            const OutcomeDistribution dist = per_trial_noise ? model_distribution(cfg.w, x, cfg.model) : shared_dist;
            ++tally.counts[rng.draw(dist)];
            tally.survival_sum += x.survival();
        }
    });

    ExperimentResult result;
    double survival_sum = 0.0;
    for (const BlockTally& tally : tallies) {
        result.counts += tally.counts;
        survival_sum += tally.survival_sum;
    }
    result.realized_S = survival_sum / static_cast<double>(N);
    if (!(result.realized_S > 0.0)) {
        throw DomainError("noise schedule fully depolarizes every idled copy (S = 0); w cannot be estimated");
    }

    const EstimationTrace tr = estimate_from_counts(result.counts.c00, N, eps_w, result.realized_S);
    result.n_count = tr.n_count;
    result.N = N;
    result.eps_w = eps_w;
    result.p00_hat = tr.p00_hat;
    result.w_hat = tr.w_hat;
    result.eps = tr.eps;
    result.delta = tr.delta;
    result.seed = seed;
    result.clamped = tr.clamped || tr.bracket_clamped;
    return result;
}

RepetitionSummary empirical_failure_rate(const ExperimentConfig& cfg, std::uint64_t N, double eps_w,
                                         std::uint64_t reps, std::uint64_t master_seed, unsigned threads) {
    if (reps == 0) {
        throw DomainError("repetition count must be at least 1");
    }
    RepetitionSummary summary;
    summary.records.resize(reps);
    const double true_w = cfg.w.value();
    parallel_for(static_cast<std::size_t>(reps), threads, [&](std::size_t r) {
        const std::uint64_t seed = derive_seed(master_seed, r);
        const ExperimentResult res = run_algorithm1(N, eps_w, cfg, seed, 1);
        summary.records[r] = {r, seed, res.w_hat, res.realized_S, std::abs(res.w_hat - true_w) >= eps_w};
    });
    double s_sum = 0.0;
    for (const RepetitionRecord& rec : summary.records) {
        summary.failures += rec.fail ? 1 : 0;
        s_sum += rec.realized_S;
    }
    const auto n = static_cast<double>(reps);
    summary.rate = static_cast<double>(summary.failures) / n;
    summary.sigma = std::sqrt(summary.rate * (1.0 - summary.rate) / n);
    summary.mean_realized_S = s_sum / n;
    return summary;
}

}  // namespace wernerest
