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

#ifndef WERNEREST_BOUNDS_HPP
#define WERNEREST_BOUNDS_HPP

// Hoeffding tail bounds on the failure probability Pr(|w_hat - w| >= eps')
// for the distillation and tomography estimators, and their inversion to
// minimum sample counts.
//
// Every bound here is 2 exp(-2 n t^2) for a [0, 1]-valued indicator, where t
// is the smallest deviation of the empirical p00 implied by |w_hat - w| >= eps':
//   tomography:               t = eps' / 4
//   distillation (noisy, S):  t = S (2 eps' (1 - w) - eps'^2) / 4
// The distillation form keeps the looser of the two one-sided deviations.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "wernerest/qcore.hpp"

namespace wernerest {

enum class Method { kDistillation, kTomography, kNoisyDistillation };

std::string_view method_name(Method m);

/// Sample counts above this are reported as unreachable. It is the largest
/// count a double represents exactly.
inline constexpr std::uint64_t kMaxSampleCount = 1ULL << 53;

struct BoundSpec {
    std::uint64_t n = 1;
    double eps_prime = 0.1;
    WernerParam w{0.0};
    /// Attenuation of the p00 sensitivity by idling noise; 1 is noise-free.
    double S = 1.0;
};

struct TailBound {
    /// Failure probability bound, capped at 1.
    double value = 1.0;
    /// The deviation t is not positive, so no sample count helps.
    bool vacuous = false;
};

/// Empty when the target failure probability cannot be reached.
using SampleCount = std::optional<std::uint64_t>;

/// 2 exp(-2 n t^2 / (b - a)^2) without the cap at 1.
double hoeffding_tail_raw(std::uint64_t n, double t, double a, double b);
/// The above, capped at 1.
double hoeffding_tail(std::uint64_t n, double t, double a, double b);

/// Minimum deviation of p00 implied by an eps' error on w, for each method.
double p00_deviation(Method method, double eps_prime, WernerParam w, double S = 1.0);

TailBound distill_failure_bound(std::uint64_t n, double eps_prime, WernerParam w);
TailBound tomo_failure_bound(std::uint64_t n, double eps_prime);
/// Reduces to distill_failure_bound bit-for-bit at S = 1.
TailBound noisy_distill_failure_bound(const BoundSpec& spec);

/// Dispatches to the method's bound. S is ignored except for kNoisyDistillation.
TailBound failure_bound(Method method, std::uint64_t n, double eps_prime, WernerParam w, double S = 1.0);

/// Smallest n with failure_bound(n) <= delta.
SampleCount min_samples(Method method, double eps_prime, double delta, WernerParam w, double S = 1.0);

/// w at which the distillation and tomography bounds coincide, (1 - eps') / 2.
WernerParam crossover_w(double eps_prime);

struct SampleComplexityCurve {
    Method method = Method::kDistillation;
    double eps_prime = 0.1;
    double delta = 0.01;
    double S = 1.0;
    std::vector<double> w_grid;
    std::vector<SampleCount> n_min;
};

struct Figure1Curves {
    SampleComplexityCurve distillation;
    SampleComplexityCurve tomography;
    SampleComplexityCurve noisy_distillation;
};

/// Evenly spaced points start, start + step, ... up to stop inclusive.
std::vector<double> make_grid(double start, double stop, double step);

/// Minimum-sample curves of all three methods over w_grid.
Figure1Curves figure1_curves(double eps_prime, double delta, double S, const std::vector<double>& w_grid);

}  // namespace wernerest

#endif
