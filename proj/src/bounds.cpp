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

#include "wernerest/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wernerest/errors.hpp"

namespace wernerest {

namespace {

void require_positive_n(std::uint64_t n) {
    if (n == 0) {
        throw DomainError("sample count n must be at least 1");
    }
}

void require_eps(double eps_prime) {
    if (!(eps_prime > 0.0) || !std::isfinite(eps_prime)) {
        throw DomainError("precision eps' must be positive, got " + show(eps_prime));
    }
}

void require_attenuation(double S) {
    if (!(S > 0.0 && S <= 1.0)) {
        throw DomainError("attenuation factor S must lie in (0, 1], got " + show(S));
    }
}

void require_delta(double delta) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw DomainError("failure probability delta must lie in (0, 1), got " + show(delta));
    }
}

TailBound tail_from_deviation(std::uint64_t n, double t) {
    if (!(t > 0.0)) {
        return {1.0, true};
    }
    return {hoeffding_tail(n, t, 0.0, 1.0), false};
}

}  // namespace

std::string_view method_name(Method m) {
    switch (m) {
        case Method::kDistillation:
            return "distillation";
        case Method::kTomography:
            return "tomography";
        case Method::kNoisyDistillation:
            return "noisy-distillation";
    }
    return "unknown";
}

double hoeffding_tail_raw(std::uint64_t n, double t, double a, double b) {
    require_positive_n(n);
    if (!(b > a)) {
        throw DomainError("Hoeffding range requires b > a");
    }
    if (!(t > 0.0)) {
        throw DomainError("Hoeffding deviation t must be positive, got " + show(t));
    }
    const double width = b - a;
    return 2.0 * std::exp(-2.0 * static_cast<double>(n) * t * t / (width * width));
}

double hoeffding_tail(std::uint64_t n, double t, double a, double b) {
    return std::min(1.0, hoeffding_tail_raw(n, t, a, b));
}

double p00_deviation(Method method, double eps_prime, WernerParam w, double S) {
    require_eps(eps_prime);
    switch (method) {
        case Method::kTomography:
            return eps_prime / 4.0;
        case Method::kDistillation:
            S = 1.0;
            break;
        case Method::kNoisyDistillation:
            require_attenuation(S);
            break;
    }
    const double sensitivity = 2.0 * eps_prime * (1.0 - w.value()) - eps_prime * eps_prime;
    return S * sensitivity / 4.0;
}

TailBound distill_failure_bound(std::uint64_t n, double eps_prime, WernerParam w) {
    return noisy_distill_failure_bound({n, eps_prime, w, 1.0});
}

TailBound tomo_failure_bound(std::uint64_t n, double eps_prime) {
    require_positive_n(n);
    return tail_from_deviation(n, p00_deviation(Method::kTomography, eps_prime, WernerParam(0.0)));
}

TailBound noisy_distill_failure_bound(const BoundSpec& spec) {
    require_positive_n(spec.n);
    return tail_from_deviation(spec.n, p00_deviation(Method::kNoisyDistillation, spec.eps_prime, spec.w, spec.S));
}

TailBound failure_bound(Method method, std::uint64_t n, double eps_prime, WernerParam w, double S) {
    switch (method) {
        case Method::kDistillation:
            return distill_failure_bound(n, eps_prime, w);
        case Method::kTomography:
            return tomo_failure_bound(n, eps_prime);
        case Method::kNoisyDistillation:
            break;
    }
    return noisy_distill_failure_bound({n, eps_prime, w, S});
}

SampleCount min_samples(Method method, double eps_prime, double delta, WernerParam w, double S) {
    require_delta(delta);
    const double t = p00_deviation(method, eps_prime, w, S);
    if (!(t > 0.0)) {
        return std::nullopt;
    }
    // 2 exp(-2 n t^2) <= delta  <=>  n >= ln(2 / delta) / (2 t^2)
    const double threshold = std::log(2.0 / delta) / (2.0 * t * t);
    if (!(threshold < static_cast<double>(kMaxSampleCount))) {
        return std::nullopt;
    }
    auto n = static_cast<std::uint64_t>(std::ceil(threshold));
    if (n == 0) {
        n = 1;
    }
    // The closed form can land one off after rounding; settle on the exact threshold.
    const auto bound = [&](std::uint64_t k) { return failure_bound(method, k, eps_prime, w, S).value; };
    while (bound(n) > delta) {
        ++n;
    }
    while (n > 1 && bound(n - 1) <= delta) {
        --n;
    }
    return n;
}

WernerParam crossover_w(double eps_prime) {
    if (!(eps_prime > 0.0 && eps_prime < 1.0)) {
        throw DomainError("crossover requires eps' in (0, 1), got " + show(eps_prime));
    }
    return WernerParam((1.0 - eps_prime) / 2.0);
}

std::vector<double> make_grid(double start, double stop, double step) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw DomainError("grid step must be positive");
    }
    if (!(stop >= start)) {
        throw DomainError("grid stop must not precede start");
    }
    // Points are start + i * step so rounding does not accumulate.
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> grid;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid.push_back(start + static_cast<double>(i) * step);
    }
    return grid;
}

Figure1Curves figure1_curves(double eps_prime, double delta, double S, const std::vector<double>& w_grid) {
    require_eps(eps_prime);
    require_delta(delta);
    require_attenuation(S);
    Figure1Curves curves;
    curves.distillation = {Method::kDistillation, eps_prime, delta, 1.0, w_grid, {}};
    curves.tomography = {Method::kTomography, eps_prime, delta, 1.0, w_grid, {}};
    curves.noisy_distillation = {Method::kNoisyDistillation, eps_prime, delta, S, w_grid, {}};
    for (double w_value : w_grid) {
        const WernerParam w(w_value);
        curves.distillation.n_min.push_back(min_samples(Method::kDistillation, eps_prime, delta, w));
        curves.tomography.n_min.push_back(min_samples(Method::kTomography, eps_prime, delta, w));
        curves.noisy_distillation.n_min.push_back(min_samples(Method::kNoisyDistillation, eps_prime, delta, w, S));
    }
    return curves;
}

}  // namespace wernerest
