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

#ifndef WERNEREST_TOMOGRAPHY_HPP
#define WERNEREST_TOMOGRAPHY_HPP

// Baseline estimator: both parties measure single Werner pairs in the Z basis
// and invert the correlated-outcome frequency. Only the Z⊗Z setting is
// modelled; tomography pairs are consumed on arrival, so no noise enters.

#include <cstdint>

#include "wernerest/outcome.hpp"
#include "wernerest/protocol.hpp"
#include "wernerest/qcore.hpp"

namespace wernerest {

using TomoOutcomeDistribution = OutcomeDistribution;
using TomoOutcomeCounts = OutcomeCounts;

/// (2 - w) / 4
double tomo_p00_from_w(WernerParam w);

/// 2 - 4 p00, with the same clamping policy as w_from_p00.
WernerEstimate tomo_w_from_p00(double p00);

TomoOutcomeDistribution tomo_outcome_distribution(WernerParam w);

/// n independent single-copy Z⊗Z measurements. Deterministic in seed.
TomoOutcomeCounts sample_tomo_outcomes(WernerParam w, std::uint64_t n, std::uint64_t seed);

}  // namespace wernerest

#endif
