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

#ifndef WERNEREST_VALIDATION_HPP
#define WERNEREST_VALIDATION_HPP

// Cross-module consistency checks run on demand: closed forms against the
// dense oracle, inversions, monotonicity and the bound inversions.

#include <optional>
#include <string>
#include <vector>

namespace wernerest {

struct ValidationOptions {
    /// Grid refinement factor; 1 gives the base grids.
    unsigned grid_density = 1;
    /// Name of a check whose analytic side is offset by perturbation_size,
    /// to demonstrate that the harness catches a wrong constant.
    std::optional<std::string> perturb;
    double perturbation_size = 1e-9;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    /// Largest deviation seen, in the check's own units.
    double worst_deviation = 0.0;
    /// Where the worst deviation (or first violation) occurred.
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
};

/// Names accepted by ValidationOptions::perturb, in execution order.
std::vector<std::string> validation_check_names();

ValidationReport run_validation(const ValidationOptions& options = {});

}  // namespace wernerest

#endif
