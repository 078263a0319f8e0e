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

#include "wernerest/tomography.hpp"

#include <algorithm>
#include <string>

#include "wernerest/errors.hpp"
#include "wernerest/rng.hpp"

namespace wernerest {

double tomo_p00_from_w(WernerParam w) { return (2.0 - w.value()) / 4.0; }

WernerEstimate tomo_w_from_p00(double p00) {
    if (!(p00 >= 0.0 && p00 <= 1.0)) {
        throw DomainError("outcome probability must lie in [0, 1], got " + show(p00));
    }
    const double clamped = std::clamp(p00, 0.25, 0.5);
    return {WernerParam(std::clamp(2.0 - 4.0 * clamped, 0.0, 1.0)), clamped != p00};
}

TomoOutcomeDistribution tomo_outcome_distribution(WernerParam w) {
    const double p00 = tomo_p00_from_w(w);
    const double p01 = w.value() / 4.0;
    return {p00, p01, p01, p00};
}

TomoOutcomeCounts sample_tomo_outcomes(WernerParam w, std::uint64_t n, std::uint64_t seed) {
    if (n == 0) {
        throw DomainError("sample count n must be at least 1");
    }
    const auto dist = tomo_outcome_distribution(w);
    Rng rng(seed);
    TomoOutcomeCounts counts;
    for (std::uint64_t i = 0; i < n; ++i) {
        ++counts[rng.draw(dist)];
    }
    return counts;
}

}  // namespace wernerest
