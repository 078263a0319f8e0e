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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "wernerest/bounds.hpp"
#include "wernerest/errors.hpp"

using namespace wernerest;

namespace {

const double kFigureS = std::exp(-0.2);

double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("hoeffding_tail") {
    CHECK(rel_diff(hoeffding_tail(1, 1.0, 0.0, 1.0), 0.2706705664732254) <= 1e-15);
    CHECK(hoeffding_tail(1, 1e-9, 0.0, 1.0) == 1.0);
    CHECK(hoeffding_tail_raw(1, 1e-9, 0.0, 1.0) > 1.0);
    // Rescaling the range and deviation together leaves the bound unchanged.
    CHECK(hoeffding_tail(10, 0.5, -1.0, 1.0) == hoeffding_tail(10, 0.25, 0.0, 1.0));

    for (std::uint64_t n : {1u, 7u, 100u}) {
        for (double t : {0.01, 0.1, 0.3}) {
            const double single = hoeffding_tail_raw(n, t, 0.0, 1.0) / 2.0;
            const double doubled = hoeffding_tail_raw(2 * n, t, 0.0, 1.0) / 2.0;
            CHECK(rel_diff(doubled, single * single) <= 1e-13);
        }
    }

    CHECK_THROWS_AS(hoeffding_tail(1, 0.1, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(hoeffding_tail(1, 0.0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(hoeffding_tail(1, -0.1, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(hoeffding_tail(0, 0.1, 0.0, 1.0), DomainError);
}

TEST_CASE("distill_failure_bound") {
    SUBCASE("vacuous at w = 1") {
        for (double eps : {0.01, 0.1, 0.5}) {
            const TailBound b = distill_failure_bound(1000000, eps, WernerParam(1.0));
            CHECK(b.vacuous);
            CHECK(b.value == 1.0);
        }
    }
    SUBCASE("matches the tomography bound at the crossover") {
        const TailBound b = distill_failure_bound(4239, 0.1, WernerParam(0.45));
        CHECK_FALSE(b.vacuous);
        CHECK(rel_diff(b.value, 0.009995674601203921) <= 1e-9);
        CHECK(b.value == doctest::Approx(0.01).epsilon(1e-3));
    }
    SUBCASE("direct evaluation") {
        const double expected = 2.0 * std::exp(-150.0 * 0.19 * 0.19);
        CHECK(rel_diff(distill_failure_bound(1200, 0.1, WernerParam(0.0)).value, expected) <= 1e-14);
        CHECK(rel_diff(expected, 0.008898675625502788) <= 1e-14);
    }
    CHECK_THROWS_AS(distill_failure_bound(0, 0.1, WernerParam(0.0)), DomainError);
    CHECK_THROWS_AS(distill_failure_bound(10, 0.0, WernerParam(0.0)), DomainError);
}

TEST_CASE("tomo_failure_bound") {
    CHECK(tomo_failure_bound(4239, 0.1).value <= 0.01);
    CHECK(tomo_failure_bound(4238, 0.1).value > 0.01);
    double prev = 1.0;
    for (double eps = 0.05; eps < 2.0; eps += 0.05) {
        const double b = tomo_failure_bound(1000, eps).value;
        CHECK(b <= prev);
        prev = b;
    }
    CHECK(prev < 1e-100);
    for (std::uint64_t n : {3u, 50u, 1000u}) {
        for (double eps : {0.05, 0.1, 0.3}) {
            CHECK(tomo_failure_bound(n, eps).value == tomo_failure_bound(4 * n, eps / 2.0).value);
        }
    }
}

TEST_CASE("noisy_distill_failure_bound") {
    SUBCASE("S = 1 reproduces the noise-free bound bit for bit") {
        for (int i = 0; i <= 20; ++i) {
            for (std::uint64_t n : {1u, 500u, 5000u}) {
                const WernerParam w(i / 20.0);
                CHECK(noisy_distill_failure_bound({n, 0.1, w, 1.0}).value == distill_failure_bound(n, 0.1, w).value);
            }
        }
    }
    SUBCASE("sample counts scale as 1/S^2") {
        for (double S : {0.9, kFigureS, 0.5}) {
            for (int i = 0; i < 18; ++i) {
                const WernerParam w(i / 20.0);
                const auto clean = min_samples(Method::kDistillation, 0.1, 0.01, w);
                const auto noisy = min_samples(Method::kNoisyDistillation, 0.1, 0.01, w, S);
                REQUIRE(clean);
                REQUIRE(noisy);
                const double scaled = static_cast<double>(*clean) / (S * S);
                CHECK(std::abs(static_cast<double>(*noisy) - scaled) <= 1.0 / (S * S) + 1.0);
            }
        }
    }
    SUBCASE("inflation at the figure's attenuation") {
        const auto clean = min_samples(Method::kDistillation, 0.1, 0.01, WernerParam(0.0));
        const auto noisy = min_samples(Method::kNoisyDistillation, 0.1, 0.01, WernerParam(0.0), kFigureS);
        CHECK(std::abs(static_cast<double>(*noisy) / static_cast<double>(*clean) - std::exp(0.4)) <= 2e-3);
        CHECK(std::abs(std::exp(0.4) - 1.4918) <= 1e-4);
    }
    CHECK_THROWS_AS(noisy_distill_failure_bound({10, 0.1, WernerParam(0.0), 0.0}), DomainError);
    CHECK_THROWS_AS(noisy_distill_failure_bound({10, 0.1, WernerParam(0.0), 1.2}), DomainError);
}

TEST_CASE("min_samples") {
    CHECK(min_samples(Method::kTomography, 0.1, 0.01, WernerParam(0.3)) == 4239u);
    CHECK(min_samples(Method::kDistillation, 0.1, 0.01, WernerParam(0.0)) == 1175u);
    // ceil(8 ln 200 / (e^{-2/5} 0.19^2)) = ceil(1751.61...)
    CHECK(min_samples(Method::kNoisyDistillation, 0.1, 0.01, WernerParam(0.0), kFigureS) == 1752u);

    CHECK(distill_failure_bound(1175, 0.1, WernerParam(0.0)).value <= 0.01);
    CHECK(distill_failure_bound(1174, 0.1, WernerParam(0.0)).value > 0.01);

    SUBCASE("exact integer threshold") {
        for (Method m : {Method::kDistillation, Method::kTomography, Method::kNoisyDistillation}) {
            for (double eps : {0.01, 0.05, 0.1, 0.2, 0.5}) {
                for (double delta : {0.001, 0.01, 0.05, 0.2, 0.9}) {
                    for (double w : {0.0, 0.1, 0.25, 0.45, 0.6, 0.8}) {
                        const auto n = min_samples(m, eps, delta, WernerParam(w), kFigureS);
                        if (!n) {
                            CHECK(m != Method::kTomography);
                            continue;
                        }
                        CHECK(failure_bound(m, *n, eps, WernerParam(w), kFigureS).value <= delta);
                        if (*n > 1) {
                            CHECK(failure_bound(m, *n - 1, eps, WernerParam(w), kFigureS).value > delta);
                        }
                    }
                }
            }
        }
    }

    SUBCASE("unreachable when the sensitivity vanishes") {
        CHECK_FALSE(min_samples(Method::kDistillation, 0.1, 0.01, WernerParam(1.0)));
        CHECK_FALSE(min_samples(Method::kDistillation, 0.1, 0.01, WernerParam(0.96)));
        CHECK_FALSE(min_samples(Method::kNoisyDistillation, 0.1, 0.01, WernerParam(0.95), 0.5));
        // 2 eps (1 - w) = eps^2 up to rounding: treated as out of reach.
        CHECK_FALSE(min_samples(Method::kDistillation, 0.1, 0.01, WernerParam(0.95)));
        CHECK(min_samples(Method::kTomography, 0.1, 0.01, WernerParam(1.0)) == 4239u);
    }

    CHECK_THROWS_AS(min_samples(Method::kTomography, 0.1, 0.0, WernerParam(0.0)), DomainError);
    CHECK_THROWS_AS(min_samples(Method::kTomography, 0.1, 1.0, WernerParam(0.0)), DomainError);
    CHECK_THROWS_AS(min_samples(Method::kTomography, -0.1, 0.1, WernerParam(0.0)), DomainError);
}

TEST_CASE("crossover_w") {
    CHECK(std::abs(crossover_w(0.1).value() - 0.45) <= 1e-15);
    CHECK(std::abs(crossover_w(1e-9).value() - 0.5) <= 1e-9);
    CHECK_THROWS_AS(crossover_w(0.0), DomainError);
    CHECK_THROWS_AS(crossover_w(1.0), DomainError);

    for (double eps : {0.05, 0.1, 0.2}) {
        const WernerParam c = crossover_w(eps);
        const auto d = min_samples(Method::kDistillation, eps, 0.01, c);
        const auto t = min_samples(Method::kTomography, eps, 0.01, c);
        REQUIRE(d);
        CHECK(std::abs(static_cast<double>(*d) - static_cast<double>(*t)) <= 1.0);
    }

    SUBCASE("bound ordering flips at the crossover for equal n") {
        for (double eps : {0.05, 0.1, 0.2}) {
            const double c = crossover_w(eps).value();
            for (int i = 0; i <= 100; ++i) {
                const double w = i / 100.0;
                if (std::abs(w - c) < 1e-9) {
                    continue;
                }
                const double d = distill_failure_bound(50000, eps, WernerParam(w)).value;
                const double t = tomo_failure_bound(50000, eps).value;
                if (w < c) {
                    CHECK(d < t);
                } else if (t < 1.0) {
                    CHECK(d > t);
                }
            }
        }
    }
}

TEST_CASE("make_grid") {
    const auto grid = make_grid(0.0, 0.95, 0.01);
    REQUIRE(grid.size() == 96);
    CHECK(grid.front() == 0.0);
    CHECK(std::abs(grid.back() - 0.95) <= 1e-15);
    CHECK(make_grid(0.5, 0.5, 0.1).size() == 1);
    CHECK_THROWS_AS(make_grid(0.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(make_grid(0.6, 0.5, 0.1), DomainError);
}

TEST_CASE("figure1_curves") {
    const auto grid = make_grid(0.0, 0.95, 0.01);
    const Figure1Curves curves = figure1_curves(0.1, 0.01, kFigureS, grid);
    REQUIRE(curves.distillation.n_min.size() == grid.size());
    REQUIRE(curves.tomography.n_min.size() == grid.size());
    REQUIRE(curves.noisy_distillation.n_min.size() == grid.size());
    CHECK(curves.noisy_distillation.S == kFigureS);
    CHECK(curves.distillation.S == 1.0);

    for (const auto& n : curves.tomography.n_min) {
        CHECK(n == 4239u);
    }
    std::uint64_t prev = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& d = curves.distillation.n_min[i];
        const auto& noisy = curves.noisy_distillation.n_min[i];
        if (!d) {
            CHECK_FALSE(noisy);
            continue;
        }
        CHECK(*d > prev);
        prev = *d;
        REQUIRE(noisy);
        CHECK(std::abs(static_cast<double>(*noisy) - std::exp(0.4) * static_cast<double>(*d)) <= std::exp(0.4) + 1.0);
    }
    // Grows like (1 - w)^-2 towards the vacuous end.
    CHECK(*curves.distillation.n_min[94] > 1000 * *curves.distillation.n_min[0]);

    CHECK_THROWS_AS(figure1_curves(0.1, 0.01, kFigureS, {1.5}), DomainError);
}
