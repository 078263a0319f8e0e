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

#include "wernerest/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <system_error>

#include "wernerest/errors.hpp"

namespace wernerest {

namespace {

Json count_or_marker(const SampleCount& n) {
    if (n) {
        return *n;
    }
    return std::string(kUnreachable);
}

std::string count_cell(const SampleCount& n) { return n ? std::to_string(*n) : std::string(kUnreachable); }

SampleCount parse_count_cell(std::string_view cell) {
    if (cell == kUnreachable) {
        return std::nullopt;
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw DomainError("malformed sample count '" + std::string(cell) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        cells.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return cells;
        }
        start = pos + 1;
    }
}

double num(double v) { return round_significant(v); }

}  // namespace

std::string format_number(double value, int significant_digits) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    std::array<char, 64> buf{};
    const auto [ptr, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, significant_digits);
    if (ec != std::errc()) {
        throw DomainError("cannot format number");
    }
    return {buf.data(), ptr};
}

double round_significant(double value, int significant_digits) {
    if (!std::isfinite(value)) {
        return value;
    }
    return parse_number(format_number(value, significant_digits));
}

double parse_number(std::string_view text) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw DomainError("malformed number '" + std::string(text) + "'");
    }
    return value;
}

Json to_json(const DensityMatrix& rho) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < rho.dim(); ++j) {
            const Complex z = rho(i, j);
            row.push_back(Json::array({z.real(), z.imag()}));
        }
        rows.push_back(std::move(row));
    }
    return Json{{"dim", rho.dim()}, {"entries", std::move(rows)}};
}

DensityMatrix density_matrix_from_json(const Json& j) {
    const auto dim = j.at("dim").get<std::size_t>();
    const Json& rows = j.at("entries");
    if (rows.size() != dim) {
        throw ShapeError("matrix JSON row count does not match dim");
    }
    const auto n = static_cast<Eigen::Index>(dim);
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < dim; ++i) {
        if (rows[i].size() != dim) {
            throw ShapeError("matrix JSON column count does not match dim");
        }
        for (std::size_t j2 = 0; j2 < dim; ++j2) {
            const Json& z = rows[i][j2];
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j2)) =
                Complex(z.at(0).get<double>(), z.at(1).get<double>());
        }
    }
    return DensityMatrix(std::move(m));
}

Json to_json(const ExperimentResult& r) {
    return Json{
        {"N", r.N},
        {"n_count", r.n_count},
        {"eps_w", num(r.eps_w)},
        {"p00_hat", num(r.p00_hat)},
        {"w_hat", num(r.w_hat)},
        {"eps", num(r.eps)},
        {"delta", num(r.delta)},
        {"realized_S", num(r.realized_S)},
        {"seed", r.seed},
        {"clamped", r.clamped},
        {"counts", Json{{"00", r.counts.c00}, {"01", r.counts.c01}, {"10", r.counts.c10}, {"11", r.counts.c11}}},
    };
}

ExperimentResult experiment_result_from_json(const Json& j) {
    ExperimentResult r;
    r.N = j.at("N").get<std::uint64_t>();
    r.n_count = j.at("n_count").get<std::uint64_t>();
    r.eps_w = j.at("eps_w").get<double>();
    r.p00_hat = j.at("p00_hat").get<double>();
    r.w_hat = j.at("w_hat").get<double>();
    r.eps = j.at("eps").get<double>();
    r.delta = j.at("delta").get<double>();
    r.realized_S = j.at("realized_S").get<double>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.clamped = j.at("clamped").get<bool>();
    const Json& c = j.at("counts");
    r.counts = {c.at("00").get<std::uint64_t>(), c.at("01").get<std::uint64_t>(), c.at("10").get<std::uint64_t>(),
                c.at("11").get<std::uint64_t>()};
    return r;
}

std::string experiment_csv(const ExperimentResult& r) {
    std::ostringstream out;
    out << kExperimentCsvHeader << '\n'
        << r.N << ',' << r.n_count << ',' << format_number(r.eps_w) << ',' << format_number(r.p00_hat) << ','
        << format_number(r.w_hat) << ',' << format_number(r.eps) << ',' << format_number(r.delta) << ','
        << format_number(r.realized_S) << ',' << r.seed << ',' << (r.clamped ? 1 : 0) << ',' << r.counts.c00 << ','
        << r.counts.c01 << ',' << r.counts.c10 << ',' << r.counts.c11 << '\n';
    return out.str();
}

std::string repetition_csv(const RepetitionSummary& summary) {
    std::ostringstream out;
    out << kRepetitionCsvHeader << '\n';
    for (const RepetitionRecord& rec : summary.records) {
        out << rec.rep << ',' << rec.seed << ',' << format_number(rec.w_hat) << ',' << (rec.fail ? 1 : 0) << '\n';
    }
    return out.str();
}

Json to_json(const SampleComplexityCurve& curve) {
    Json grid = Json::array();
    Json counts = Json::array();
    for (std::size_t i = 0; i < curve.w_grid.size(); ++i) {
        grid.push_back(num(curve.w_grid[i]));
        counts.push_back(count_or_marker(curve.n_min[i]));
    }
    return Json{
        {"method", std::string(method_name(curve.method))},
        {"eps_prime", num(curve.eps_prime)},
        {"delta", num(curve.delta)},
        {"S", num(curve.S)},
        {"w_grid", std::move(grid)},
        {"n_min", std::move(counts)},
    };
}

Json to_json(const Figure1Curves& curves) {
    return Json{{"curves", Json::array({to_json(curves.distillation), to_json(curves.tomography),
                                        to_json(curves.noisy_distillation)})}};
}

std::vector<Figure1Row> figure1_rows(const Figure1Curves& curves) {
    std::vector<Figure1Row> rows;
    const auto& grid = curves.distillation.w_grid;
    rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        rows.push_back({round_significant(grid[i]), curves.distillation.n_min[i], curves.tomography.n_min[i],
                        curves.noisy_distillation.n_min[i]});
    }
    return rows;
}

std::string figure1_csv(const std::vector<Figure1Row>& rows) {
    std::ostringstream out;
    out << kFigure1CsvHeader << '\n';
    for (const Figure1Row& row : rows) {
        std::string flags;
        const auto flag = [&flags](const SampleCount& n, const char* name) {
            if (!n) {
                if (!flags.empty()) {
                    flags += '|';
                }
                flags += name;
            }
        };
        flag(row.n_distill, "distill_unreachable");
        flag(row.n_tomo, "tomo_unreachable");
        flag(row.n_noisy, "noisy_unreachable");
        out << format_number(row.w) << ',' << count_cell(row.n_distill) << ',' << count_cell(row.n_tomo) << ','
            << count_cell(row.n_noisy) << ',' << flags << '\n';
    }
    return out.str();
}

std::vector<Figure1Row> parse_figure1_csv(std::string_view csv) {
    std::vector<Figure1Row> rows;
    bool header_seen = false;
    for (std::string_view line : split(csv, '\n')) {
        if (line.empty()) {
            continue;
        }
        if (!header_seen) {
            if (line != kFigure1CsvHeader) {
                throw DomainError("unexpected figure1 CSV header '" + std::string(line) + "'");
            }
            header_seen = true;
            continue;
        }
        const auto cells = split(line, ',');
        if (cells.size() != 5) {
            throw DomainError("figure1 CSV row must have 5 cells: '" + std::string(line) + "'");
        }
        rows.push_back(
            {parse_number(cells[0]), parse_count_cell(cells[1]), parse_count_cell(cells[2]), parse_count_cell(cells[3])});
    }
    if (!header_seen) {
        throw DomainError("figure1 CSV is empty");
    }
    return rows;
}

void write_output(const std::string& path, std::string_view text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

}  // namespace wernerest
