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
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "wernerest/io.hpp"

using namespace wernerest;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "wernerest");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

// "key   value" lines of the text report.
std::map<std::string, std::string> report_fields(const std::string& text) {
    std::map<std::string, std::string> fields;
    std::istringstream in(text);
    std::string key;
    std::string value;
    while (in >> key >> value) {
        fields[key] = value;
    }
    return fields;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "wernerest_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("exact") {
    SUBCASE("perfect pairs") {
        const auto r = invoke({"exact", "--w", "0"});
        REQUIRE(r.code == cli::kOk);
        const auto f = report_fields(r.out);
        CHECK(f.at("p00") == "0.5");
        CHECK(f.at("success") == "1");
        CHECK(f.at("F") == "1");
        CHECK(f.at("F_after") == "1");
    }
    SUBCASE("fully mixed pairs") {
        const auto f = report_fields(invoke({"exact", "--w", "1"}).out);
        CHECK(f.at("p00") == "0.25");
        CHECK(f.at("success") == "0.5");
    }
    SUBCASE("w = 0.4 without noise") {
        const auto f = report_fields(invoke({"exact", "--w", "0.4", "--x", "0"}).out);
        CHECK(f.at("p00") == "0.34");
        CHECK(f.at("p01") == "0.16");
    }
    SUBCASE("json output") {
        const auto r = invoke({"exact", "--w", "0.3", "--x", "0.25", "--format", "json"});
        REQUIRE(r.code == cli::kOk);
        const Json j = Json::parse(r.out);
        CHECK(j["p00"].get<double>() == 0.341875);
        CHECK(std::abs(j["p00"].get<double>() + j["p01"].get<double>() + j["p10"].get<double>() +
                       j["p11"].get<double>() - 1.0) <= 1e-12);
    }
    SUBCASE("bad values name the flag") {
        const auto r = invoke({"exact", "--w", "1.5"});
        CHECK(r.code == cli::kParseError);
        CHECK(r.err.find("--w") != std::string::npos);
        CHECK(invoke({"exact", "--w", "abc"}).code == cli::kParseError);
        CHECK(invoke({"exact"}).code == cli::kParseError);
    }
}

TEST_CASE("bounds") {
    SUBCASE("sample counts at w = 0") {
        const auto r = invoke({"bounds", "--eps", "0.1", "--delta", "0.01", "--w", "0", "--format", "json"});
        REQUIRE(r.code == cli::kOk);
        const Json j = Json::parse(r.out);
        CHECK(j["curves"][0]["n_min"][0] == 1175);
        CHECK(j["curves"][1]["n_min"][0] == 4239);
    }
    SUBCASE("near w = 1 the distillation count is unreachable") {
        const auto r = invoke({"bounds", "--eps", "0.1", "--delta", "0.01", "--w", "0.99", "--format", "csv"});
        REQUIRE(r.code == cli::kOk);
        const auto rows = parse_figure1_csv(r.out);
        REQUIRE(rows.size() == 1);
        CHECK_FALSE(rows[0].n_distill.has_value());
        CHECK(rows[0].n_tomo == 4239u);
        CHECK(r.out.find("distill_unreachable") != std::string::npos);
    }
    SUBCASE("noisy column scales as 1 / S^2") {
        const auto r = invoke({"bounds", "--w-start", "0", "--w-stop", "0.5", "--w-step", "0.05", "--S", "0.8187",
                               "--format", "csv"});
        REQUIRE(r.code == cli::kOk);
        for (const auto& row : parse_figure1_csv(r.out)) {
            REQUIRE(row.n_distill);
            REQUIRE(row.n_noisy);
            const double scaled = static_cast<double>(*row.n_distill) / (0.8187 * 0.8187);
            CHECK(std::abs(static_cast<double>(*row.n_noisy) - scaled) <= 1.0 / (0.8187 * 0.8187) + 1.0);
        }
    }
    SUBCASE("text table") {
        const auto r = invoke({"bounds", "--w", "0"});
        REQUIRE(r.code == cli::kOk);
        CHECK(r.out.find("1175") != std::string::npos);
        CHECK(r.out.find("4239") != std::string::npos);
    }
    SUBCASE("domain errors") {
        CHECK(invoke({"bounds", "--w", "0", "--delta", "0"}).code == cli::kDomainError);
        CHECK(invoke({"bounds", "--w-start", "0.5", "--w-stop", "0.1"}).code == cli::kDomainError);
    }
}

TEST_CASE("figure1") {
    const auto r = invoke({"figure1"});
    REQUIRE(r.code == cli::kOk);
    const auto rows = parse_figure1_csv(r.out);
    REQUIRE(rows.size() == 96);
    CHECK(figure1_csv(rows) == r.out);

    const double crossover = 0.45;
    for (const auto& row : rows) {
        CAPTURE(row.w);
        CHECK(row.n_tomo == rows.front().n_tomo);
        if (row.n_distill && row.n_tomo) {
            CHECK((*row.n_distill < *row.n_tomo) == (row.w < crossover - 1e-9));
        }
        if (row.n_distill && row.n_noisy) {
            const double ratio = static_cast<double>(*row.n_noisy) / static_cast<double>(*row.n_distill);
            CHECK(std::abs(ratio - std::exp(0.4)) <= std::exp(0.4) / static_cast<double>(*row.n_distill) + 1e-12);
        }
    }

    const auto json = invoke({"figure1", "--format", "json"});
    REQUIRE(json.code == cli::kOk);
    CHECK(Json::parse(json.out).dump(2) + "\n" == json.out);

    const auto dir = scratch_dir();
    const auto path = dir / "fig.csv";
    const auto to_file = invoke({"figure1", "--out", path.string()});
    CHECK(to_file.code == cli::kOk);
    CHECK(to_file.out.empty());
    CHECK(read_file(path) == r.out);
    std::filesystem::remove_all(dir);

    CHECK(invoke({"figure1", "--out", "/nonexistent-dir/fig.csv"}).code == cli::kIoError);
}

TEST_CASE("run") {
    SUBCASE("single runs are deterministic and round-trip") {
        const std::vector<std::string> args = {"run", "--w", "0.4", "--N", "100000", "--eps-w", "0.05", "--seed", "7"};
        const auto a = invoke(args);
        REQUIRE(a.code == cli::kOk);
        CHECK(invoke(args).out == a.out);
        auto threaded = args;
        threaded.insert(threaded.end(), {"--threads", "4"});
        CHECK(invoke(threaded).out == a.out);

        const ExperimentResult r = experiment_result_from_json(Json::parse(a.out));
        CHECK(r.seed == 7);
        CHECK(r.N == 100000);
        CHECK(to_json(r).dump(2) + "\n" == a.out);

        auto csv = args;
        csv.insert(csv.end(), {"--format", "csv"});
        const auto c = invoke(csv);
        REQUIRE(c.code == cli::kOk);
        CHECK(c.out == experiment_csv(r));
    }

    SUBCASE("repetitions stay within the analytic bound") {
        const auto r = invoke({"run", "--w", "0.4", "--N", "100000", "--eps-w", "0.05", "--reps", "1000",
                               "--threads", "0", "--format", "json"});
        REQUIRE(r.code == cli::kOk);
        const Json j = Json::parse(r.out);
        CHECK(j["summary"]["within_bound"] == true);
        CHECK(j["reps"].size() == 1000);
        CHECK(j["summary"]["failure_rate"].get<double>() <=
              j["summary"]["analytic_bound"].get<double>() + j["summary"]["three_sigma_margin"].get<double>());
    }

    SUBCASE("repetition CSV plus summary") {
        const auto r = invoke({"run", "--w", "0.4", "--N", "2000", "--eps-w", "0.05", "--reps", "20", "--format", "csv"});
        REQUIRE(r.code == cli::kOk);
        CHECK(r.out.rfind(std::string(kRepetitionCsvHeader) + "\n", 0) == 0);
        CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 21);
        CHECK(Json::parse(r.err).contains("failure_rate"));
    }

    SUBCASE("constant idle reports realized S") {
        const auto r = invoke({"run", "--w", "0.3", "--t", "0.2", "--T", "1.0", "--N", "1000", "--eps-w", "0.1"});
        REQUIRE(r.code == cli::kOk);
        CHECK(std::abs(Json::parse(r.out)["realized_S"].get<double>() - std::exp(-0.2)) <= 1e-12);
    }

    SUBCASE("exponential idle is seeded") {
        const std::vector<std::string> args = {"run", "--w",   "0.3",  "--t",         "0.2", "--idle",
                                               "exponential", "--N", "5000", "--eps-w", "0.1", "--seed", "3"};
        const auto a = invoke(args);
        REQUIRE(a.code == cli::kOk);
        CHECK(invoke(args).out == a.out);
        CHECK(Json::parse(a.out)["realized_S"].get<double>() < 1.0);
    }

    SUBCASE("flag errors") {
        CHECK(invoke({"run", "--w", "0.4", "--N", "10"}).code == cli::kParseError);
        CHECK(invoke({"run", "--w", "0.4", "--N", "10", "--eps-w", "0.1", "--x", "0.1", "--t", "0.2"}).code ==
              cli::kParseError);
        CHECK(invoke({"run", "--w", "0.4", "--N", "10", "--eps-w", "0.1", "--x", "1"}).code == cli::kDomainError);
        CHECK(invoke({"run", "--w", "0.4", "--N", "10", "--eps-w", "0.1", "--out", "/nonexistent-dir/r.json"}).code ==
              cli::kIoError);
    }
}

TEST_CASE("validate") {
    const auto ok = invoke({"validate"});
    CHECK(ok.code == cli::kOk);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    const auto bad = invoke({"validate", "--perturb", "crossover"});
    CHECK(bad.code == cli::kValidationFailed);
    CHECK(bad.out.find("FAIL crossover") != std::string::npos);

    CHECK(invoke({"validate", "--perturb", "bogus"}).code == cli::kDomainError);
}

TEST_CASE("unknown commands and flags") {
    CHECK(invoke({"frobnicate"}).code == cli::kParseError);
    CHECK(invoke({"exact", "--w", "0.1", "--bogus"}).code == cli::kParseError);
    CHECK(invoke({}).code == cli::kParseError);
}
