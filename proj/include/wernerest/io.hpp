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

#ifndef WERNEREST_IO_HPP
#define WERNEREST_IO_HPP

// Serialization of results. All numbers are written with std::to_chars, so
// output never depends on the process locale.
//
// JSON numbers are rounded to 12 significant digits and then printed in
// their shortest round-trip form; parsing a file and dumping it again gives
// identical bytes. Density matrices are the exception and keep full double
// precision: {"dim": d, "entries": [[[re, im], ...], ...]} with rows in order.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wernerest/bounds.hpp"
#include "wernerest/experiment.hpp"
#include "wernerest/qcore.hpp"

namespace wernerest {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonDigits = 12;
inline constexpr int kTableDigits = 6;

/// General-format number with the given significant digits.
std::string format_number(double value, int significant_digits = kJsonDigits);
/// Rounds to the given significant digits through its decimal form.
double round_significant(double value, int significant_digits = kJsonDigits);
/// Locale-independent strict parse; throws DomainError on malformed input.
double parse_number(std::string_view text);

Json to_json(const DensityMatrix& rho);
DensityMatrix density_matrix_from_json(const Json& j);

Json to_json(const ExperimentResult& r);
ExperimentResult experiment_result_from_json(const Json& j);

inline constexpr std::string_view kExperimentCsvHeader =
    "N,n_count,eps_w,p00_hat,w_hat,eps,delta,realized_S,seed,clamped,c00,c01,c10,c11";
/// Header line plus one record.
std::string experiment_csv(const ExperimentResult& r);

inline constexpr std::string_view kRepetitionCsvHeader = "rep,seed,w_hat,fail";
std::string repetition_csv(const RepetitionSummary& summary);

Json to_json(const SampleComplexityCurve& curve);
Json to_json(const Figure1Curves& curves);

/// One line of the three-curve table.
struct Figure1Row {
    double w = 0.0;
    SampleCount n_distill;
    SampleCount n_tomo;
    SampleCount n_noisy;

    friend bool operator==(const Figure1Row&, const Figure1Row&) = default;
};

inline constexpr std::string_view kFigure1CsvHeader = "w,n_distill,n_tomo,n_noisy,flags";
inline constexpr std::string_view kUnreachable = "unreachable";

std::vector<Figure1Row> figure1_rows(const Figure1Curves& curves);
/// Unreachable counts are written as "unreachable" and listed in the flags
/// column, separated by '|'.
std::string figure1_csv(const std::vector<Figure1Row>& rows);
std::vector<Figure1Row> parse_figure1_csv(std::string_view csv);

/// Writes text to path, or to stdout when path is empty or "-". Throws IoError.
void write_output(const std::string& path, std::string_view text);

}  // namespace wernerest

#endif
