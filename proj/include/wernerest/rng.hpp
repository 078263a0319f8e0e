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

#ifndef WERNEREST_RNG_HPP
#define WERNEREST_RNG_HPP

#include <cstdint>
#include <random>

#include "wernerest/outcome.hpp"

namespace wernerest {

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z);

/// Seed for the index-th independent stream under a master seed. Streams are
/// a pure function of (master, index), so any scheduling of the work that
/// consumes them yields the same results.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Platform-stable random source. std::mt19937_64's output sequence is fixed
/// by the standard; the floating-point conversions below are done by hand
/// because the <random> distributions are implementation-defined.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Exponential variate with the given mean.
    double exponential(double mean);
    /// Draws an outcome pair by inverting the cumulative distribution.
    Outcome draw(const OutcomeDistribution& dist);

   private:
    std::mt19937_64 engine_;
};

}  // namespace wernerest

#endif
