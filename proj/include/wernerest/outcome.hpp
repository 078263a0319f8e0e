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

#ifndef WERNEREST_OUTCOME_HPP
#define WERNEREST_OUTCOME_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace wernerest {

/// Joint Z-basis result on Alice's and Bob's target qubits. The first digit is
/// Alice's bit; bit 0 is the +1 eigenstate of Z.
enum class Outcome : std::uint8_t { k00 = 0, k01 = 1, k10 = 2, k11 = 3 };

inline constexpr std::array<Outcome, 4> kAllOutcomes = {Outcome::k00, Outcome::k01, Outcome::k10,
                                                        Outcome::k11};

constexpr std::size_t index_of(Outcome o) { return static_cast<std::size_t>(o); }

constexpr std::string_view outcome_label(Outcome o) {
    constexpr std::array<std::string_view, 4> labels = {"00", "01", "10", "11"};
    return labels[index_of(o)];
}

/// Probabilities of the four Z⊗Z outcome pairs.
struct OutcomeDistribution {
    double p00 = 0.0;
    double p01 = 0.0;
    double p10 = 0.0;
    double p11 = 0.0;

    double operator[](Outcome o) const {
        switch (o) {
            case Outcome::k00:
                return p00;
            case Outcome::k01:
                return p01;
            case Outcome::k10:
                return p10;
            case Outcome::k11:
                return p11;
        }
        return 0.0;
    }
    double total() const { return p00 + p01 + p10 + p11; }
    double correlated() const { return p00 + p11; }
};

/// Tallies of sampled outcome pairs.
struct OutcomeCounts {
    std::uint64_t c00 = 0;
    std::uint64_t c01 = 0;
    std::uint64_t c10 = 0;
    std::uint64_t c11 = 0;

    std::uint64_t& operator[](Outcome o) {
        switch (o) {
            case Outcome::k00:
                return c00;
            case Outcome::k01:
                return c01;
            case Outcome::k10:
                return c10;
            case Outcome::k11:
                break;
        }
        return c11;
    }
    std::uint64_t operator[](Outcome o) const { return const_cast<OutcomeCounts&>(*this)[o]; }
    std::uint64_t total() const { return c00 + c01 + c10 + c11; }

    OutcomeCounts& operator+=(const OutcomeCounts& other) {
        c00 += other.c00;
        c01 += other.c01;
        c10 += other.c10;
        c11 += other.c11;
        return *this;
    }
    friend bool operator==(const OutcomeCounts&, const OutcomeCounts&) = default;
};

}  // namespace wernerest

#endif
