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

#include "wernerest/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wernerest/errors.hpp"

namespace wernerest {

namespace {

void require_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("outcome probability must lie in [0, 1], got " + show(p));
    }
}

void require_attenuation(double S) {
    if (!(S > 0.0 && S <= 1.0)) {
        throw DomainError("attenuation factor S must lie in (0, 1], got " + show(S));
    }
}

}  // namespace

double p00_from_w(WernerParam w) {
    const double v = w.value();
    return (2.0 - 2.0 * v + v * v) / 4.0;
}

WernerEstimate w_from_p00(double p00) {
    require_probability(p00);
    const double clamped = std::clamp(p00, 0.25, 0.5);
    const double w = 1.0 - std::sqrt(4.0 * clamped - 1.0);
    return {WernerParam(std::clamp(w, 0.0, 1.0)), clamped != p00};
}

double attenuated_p00(WernerParam w, double S) {
    require_attenuation(S);
    const double coherence = 1.0 - w.value();
    return (1.0 + S * coherence * coherence) / 4.0;
}

WernerEstimate w_from_attenuated_p00(double p00, double S) {
    require_probability(p00);
    require_attenuation(S);
    const double clamped = std::clamp(p00, 0.25, (1.0 + S) / 4.0);
    const double w = 1.0 - std::sqrt((4.0 * clamped - 1.0) / S);
    return {WernerParam(std::clamp(w, 0.0, 1.0)), clamped != p00};
}

OutcomeDistribution outcome_distribution(const NoisePairConfig& cfg) {
    // Bell-diagonal bookkeeping: the target pair reads correlated iff the two
    // copies carry the same bit-flip parity. With the first copy's coherence
    // weight scaled by (1 - x), P(correlated) = (1 + (1 - x)(1 - w)^2) / 2,
    // split evenly between 00 and 11.
    double p00 = p00_from_w(cfg.w);
    if (cfg.x.value() != 0.0) {
        const double coherence = 1.0 - cfg.w.value();
        p00 = (1.0 + cfg.x.survival() * coherence * coherence) / 4.0;
    }
    const double p01 = 0.5 - p00;
    return {p00, p01, p01, p00};
}

double success_probability(const NoisePairConfig& cfg) { return outcome_distribution(cfg).correlated(); }

double fidelity_from_w(WernerParam w) { return w.fidelity(); }

WernerParam w_from_fidelity(double fidelity) { return WernerParam::from_fidelity(fidelity); }

double fidelity_after_distillation(double fidelity) {
    if (!(fidelity >= 0.25 && fidelity <= 1.0)) {
        throw DomainError("fidelity must lie in [1/4, 1], got " + show(fidelity));
    }
    const double F = fidelity;
    const double G = 1.0 - F;
    const double numerator = F * F + G * G / 9.0;
    const double denominator = F * F + 2.0 * F * G / 3.0 + 5.0 * G * G / 9.0;
    return numerator / denominator;
}

}  // namespace wernerest
