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

#include "wernerest/rng.hpp"

#include <cmath>

namespace wernerest {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) { return mix64(mix64(master) ^ mix64(~index)); }

double Rng::exponential(double mean) { return -mean * std::log1p(-uniform01()); }

Outcome Rng::draw(const OutcomeDistribution& dist) {
    const double u = uniform01();
    double cumulative = dist.p00;
    if (u < cumulative) {
        return Outcome::k00;
    }
    cumulative += dist.p01;
    if (u < cumulative) {
        return Outcome::k01;
    }
    cumulative += dist.p10;
    if (u < cumulative) {
        return Outcome::k10;
    }
    return Outcome::k11;
}

}  // namespace wernerest
