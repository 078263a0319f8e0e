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

#ifndef WERNEREST_QCORE_HPP
#define WERNEREST_QCORE_HPP

// Dense density-matrix engine for two pairs of qubits shared between Alice
// and Bob. It is deliberately unoptimized: every analytic formula elsewhere
// in the library is checked against it.
//
// Basis convention (big-endian, |0> is the Z = +1 eigenstate):
//   two qubits:  index = 2*A + B
//   four qubits: index = 8*A_control + 4*B_control + 2*A_target + B_target
// With this ordering tensor(control_pair, target_pair) is a plain Kronecker
// product.

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "wernerest/outcome.hpp"

namespace wernerest {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;
/// Outcome branches with smaller probability have no post-measurement state.
inline constexpr double kBranchProbabilityFloor = 1e-15;

/// Werner mixing weight w in [0, 1]; w = 0 is a perfect Bell pair.
class WernerParam {
   public:
    explicit WernerParam(double w);
    static WernerParam from_fidelity(double fidelity);

    double value() const { return w_; }
    /// Overlap with |Φ+>, 1 - 3w/4.
    double fidelity() const { return 1.0 - 0.75 * w_; }

   private:
    double w_;
};

/// Depolarizing strength x in [0, 1].
class DepolarizingParam {
   public:
    explicit DepolarizingParam(double x = 0.0);
    /// x = 1 - exp(-t / T) for a qubit idling for time t with memory time T.
    static DepolarizingParam from_idle_time(double t, double T);

    double value() const { return x_; }
    double survival() const { return 1.0 - x_; }

   private:
    double x_;
};

/// A 4x4 (one pair) or 16x16 (two pairs) density matrix.
class DensityMatrix {
   public:
    /// Throws ShapeError unless the matrix is square with dimension 4 or 16.
    explicit DensityMatrix(ComplexMatrix entries);

    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    const ComplexMatrix& matrix() const { return entries_; }
    Complex operator()(std::size_t row, std::size_t col) const {
        return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

    Complex trace() const { return entries_.trace(); }
    /// max |rho_ij - conj(rho_ji)|
    double hermiticity_error() const;
    double trace_error() const;
    /// Ascending eigenvalues of the Hermitian part.
    std::vector<double> eigenvalues() const;
    double min_eigenvalue() const;
    /// Number of eigenvalues above tol.
    std::size_t rank(double tol = 1e-10) const;
    /// Hermitian, unit trace and positive semidefinite within the library tolerances.
    bool is_valid() const;

    /// Largest entrywise modulus of the difference.
    double max_abs_diff(const DensityMatrix& other) const;

   private:
    ComplexMatrix entries_;
};

DensityMatrix bell_phi_plus();
DensityMatrix maximally_mixed(std::size_t dim);
DensityMatrix werner_state(WernerParam w);

/// (1 - x) rho + (x / 4) I on a single pair.
DensityMatrix depolarize(const DensityMatrix& rho, DepolarizingParam x);

/// Joint state of a control pair and a target pair, ordered as documented above.
DensityMatrix tensor(const DensityMatrix& control_pair, const DensityMatrix& target_pair);

/// Conjugates by CNOT(A_control -> A_target) x CNOT(B_control -> B_target).
DensityMatrix bilateral_cnot(const DensityMatrix& rho4q);

/// <Φ+| rho |Φ+> for a single pair.
double phi_plus_fidelity(const DensityMatrix& rho);

struct TargetMeasurement {
    OutcomeDistribution probabilities;
    /// Normalized control-pair state per outcome; empty when the branch
    /// probability is below kBranchProbabilityFloor.
    std::array<std::optional<DensityMatrix>, 4> control_states;

    const std::optional<DensityMatrix>& control_state(Outcome o) const {
        return control_states[index_of(o)];
    }
};

/// Z-basis measurement of both target qubits.
TargetMeasurement measure_target_zz(const DensityMatrix& rho4q);

/// Full distillation round: tensor, bilateral CNOT, then target measurement.
TargetMeasurement distill_round(const DensityMatrix& control_pair, const DensityMatrix& target_pair);

/// Control-pair state conditioned on a correlated (00 or 11) outcome.
std::optional<DensityMatrix> post_selected_state(const TargetMeasurement& m);

}  // namespace wernerest

#endif
