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

#ifndef WERNEREST_PROTOCOL_HPP
#define WERNEREST_PROTOCOL_HPP

// Closed-form model of one distillation round on two Werner pairs, with the
// first (idled) copy optionally depolarized before the bilateral CNOT.

#include "wernerest/outcome.hpp"
#include "wernerest/qcore.hpp"

namespace wernerest {

/// One round's inputs: both copies start as werner_state(w); the first copy
/// then idles under depolarizing noise x while the second is generated.
struct NoisePairConfig {
    WernerParam w;
    DepolarizingParam x{0.0};
};

/// An estimate of w recovered from an outcome probability.
struct WernerEstimate {
    WernerParam w;
    /// The input probability fell outside the physical range and was clamped.
    bool clamped = false;
};

/// Probability of the 00 outcome for two noise-free copies: (2 - 2w + w^2) / 4.
double p00_from_w(WernerParam w);

/// Inverse of p00_from_w: w = 1 - sqrt(4 p00 - 1).
///
/// Values in [0, 1] but outside [1/4, 1/2] are clamped onto that interval
/// and flagged. Values outside [0, 1] are not probabilities and throw
/// DomainError.
WernerEstimate w_from_p00(double p00);

/// Probability of the 00 outcome when the first copy has coherence weight
/// scaled by S: (1 + S (1 - w)^2) / 4. Equals p00_from_w at S = 1 up to rounding.
double attenuated_p00(WernerParam w, double S);

/// Inverse of attenuated_p00 for fixed S in (0, 1]; clamps onto [1/4, (1 + S)/4].
WernerEstimate w_from_attenuated_p00(double p00, double S);

OutcomeDistribution outcome_distribution(const NoisePairConfig& cfg);

/// Probability that the round keeps the control pair (outcome 00 or 11).
double success_probability(const NoisePairConfig& cfg);

double fidelity_from_w(WernerParam w);
WernerParam w_from_fidelity(double fidelity);

/// Φ+ fidelity of the kept pair after one round on two Werner pairs of
/// fidelity F. Throws DomainError unless 1/4 <= F <= 1.
double fidelity_after_distillation(double fidelity);

}  // namespace wernerest

#endif
