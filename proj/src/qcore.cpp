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

#include "wernerest/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wernerest/errors.hpp"

namespace wernerest {

namespace {

void require_dim(const DensityMatrix& rho, std::size_t dim, const char* op) {
    if (rho.dim() != dim) {
        throw ShapeError(std::string(op) + ": expected " + std::to_string(dim) + "x" + std::to_string(dim) +
                         " matrix, got " + std::to_string(rho.dim()) + "x" + std::to_string(rho.dim()));
    }
}

// Maps the basis index (ac, bc, at, bt) to (ac, bc, at ^ ac, bt ^ bc).
constexpr std::size_t bilateral_cnot_image(std::size_t index) {
    const std::size_t a_control = (index >> 3) & 1;
    const std::size_t b_control = (index >> 2) & 1;
    return index ^ (a_control << 1) ^ b_control;
}

}  // namespace

WernerParam::WernerParam(double w) : w_(w) {
    if (!(w >= 0.0 && w <= 1.0)) {
        throw DomainError("Werner parameter w must lie in [0, 1], got " + show(w));
    }
}

WernerParam WernerParam::from_fidelity(double fidelity) {
    if (!(fidelity >= 0.25 && fidelity <= 1.0)) {
        throw DomainError("Werner fidelity must lie in [1/4, 1], got " + show(fidelity));
    }
    // Guard the endpoints against rounding in 4(1 - F)/3.
    return WernerParam(std::clamp(4.0 * (1.0 - fidelity) / 3.0, 0.0, 1.0));
}

DepolarizingParam::DepolarizingParam(double x) : x_(x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("depolarizing parameter x must lie in [0, 1], got " + show(x));
    }
}

DepolarizingParam DepolarizingParam::from_idle_time(double t, double T) {
    if (!(t >= 0.0)) {
        throw DomainError("idle time t must be nonnegative, got " + show(t));
    }
    if (!(T > 0.0)) {
        throw DomainError("memory time T must be positive, got " + show(T));
    }
    return DepolarizingParam(-std::expm1(-t / T));
}

DensityMatrix::DensityMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        throw ShapeError("density matrix must be square");
    }
    if (entries_.rows() != 4 && entries_.rows() != 16) {
        throw ShapeError("density matrix dimension must be 4 or 16, got " + std::to_string(entries_.rows()));
    }
}

double DensityMatrix::hermiticity_error() const { return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff(); }

double DensityMatrix::trace_error() const { return std::abs(trace() - Complex(1.0, 0.0)); }

std::vector<double> DensityMatrix::eigenvalues() const {
    const ComplexMatrix hermitian_part = 0.5 * (entries_ + entries_.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& values = solver.eigenvalues();
    return {values.data(), values.data() + values.size()};
}

double DensityMatrix::min_eigenvalue() const { return eigenvalues().front(); }

std::size_t DensityMatrix::rank(double tol) const {
    const auto values = eigenvalues();
    return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [tol](double v) { return v > tol; }));
}

bool DensityMatrix::is_valid() const {
    return hermiticity_error() <= kHermitianTolerance && trace_error() <= kTraceTolerance &&
           min_eigenvalue() >= -kPsdTolerance;
}

double DensityMatrix::max_abs_diff(const DensityMatrix& other) const {
    if (other.dim() != dim()) {
        throw ShapeError("cannot compare density matrices of different dimension");
    }
    return (entries_ - other.entries_).cwiseAbs().maxCoeff();
}

DensityMatrix bell_phi_plus() {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
    return DensityMatrix(std::move(m));
}

DensityMatrix maximally_mixed(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return DensityMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(dim));
}

DensityMatrix werner_state(WernerParam w) {
    const double weight = w.value();
    return DensityMatrix((1.0 - weight) * bell_phi_plus().matrix() + (weight / 4.0) * ComplexMatrix::Identity(4, 4));
}

DensityMatrix depolarize(const DensityMatrix& rho, DepolarizingParam x) {
    require_dim(rho, 4, "depolarize");
    const double strength = x.value();
    return DensityMatrix((1.0 - strength) * rho.matrix() + (strength / 4.0) * ComplexMatrix::Identity(4, 4));
}

DensityMatrix tensor(const DensityMatrix& control_pair, const DensityMatrix& target_pair) {
    require_dim(control_pair, 4, "tensor");
    require_dim(target_pair, 4, "tensor");
    ComplexMatrix out(16, 16);
    for (Eigen::Index i = 0; i < 4; ++i) {
        for (Eigen::Index j = 0; j < 4; ++j) {
            out.block(4 * i, 4 * j, 4, 4) = control_pair.matrix()(i, j) * target_pair.matrix();
        }
    }
    return DensityMatrix(std::move(out));
}

DensityMatrix bilateral_cnot(const DensityMatrix& rho4q) {
    require_dim(rho4q, 16, "bilateral_cnot");
    // U is a permutation, so U rho U^dagger just relabels rows and columns.
    ComplexMatrix out(16, 16);
    for (std::size_t r = 0; r < 16; ++r) {
        for (std::size_t c = 0; c < 16; ++c) {
            out(static_cast<Eigen::Index>(bilateral_cnot_image(r)), static_cast<Eigen::Index>(bilateral_cnot_image(c))) =
                rho4q(r, c);
        }
    }
    return DensityMatrix(std::move(out));
}

double phi_plus_fidelity(const DensityMatrix& rho) {
    require_dim(rho, 4, "phi_plus_fidelity");
    const auto& m = rho.matrix();
    return 0.5 * (m(0, 0) + m(0, 3) + m(3, 0) + m(3, 3)).real();
}

TargetMeasurement measure_target_zz(const DensityMatrix& rho4q) {
    require_dim(rho4q, 16, "measure_target_zz");
    TargetMeasurement result;
    std::array<double, 4> probs{};
    for (Outcome o : kAllOutcomes) {
        const std::size_t target_bits = index_of(o);
        ComplexMatrix block(4, 4);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                block(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    rho4q((i << 2) | target_bits, (j << 2) | target_bits);
            }
        }
        const double p = block.trace().real();
        probs[index_of(o)] = p;
        if (p >= kBranchProbabilityFloor) {
            result.control_states[index_of(o)] = DensityMatrix(block / p);
        }
    }
    result.probabilities = {probs[0], probs[1], probs[2], probs[3]};
    return result;
}

TargetMeasurement distill_round(const DensityMatrix& control_pair, const DensityMatrix& target_pair) {
    return measure_target_zz(bilateral_cnot(tensor(control_pair, target_pair)));
}

std::optional<DensityMatrix> post_selected_state(const TargetMeasurement& m) {
    const double kept = m.probabilities.correlated();
    if (kept < kBranchProbabilityFloor) {
        return std::nullopt;
    }
    ComplexMatrix sum = ComplexMatrix::Zero(4, 4);
    for (Outcome o : {Outcome::k00, Outcome::k11}) {
        if (const auto& state = m.control_state(o)) {
            sum += m.probabilities[o] * state->matrix();
        }
    }
    return DensityMatrix(sum / kept);
}

}  // namespace wernerest
