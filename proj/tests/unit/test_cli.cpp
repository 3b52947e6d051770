// Copyright 2026 The qsc Authors
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qsc/cli.hpp"
#include "qsc/table.hpp"
#include "test_util.hpp"

namespace qsc {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "qsc");
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("qsc_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }
    std::string cat4() {
        std::string p = path("cat4.json");
        auto r = run({"build", "--name", "cat", "--S", "2", "--K", "2", "--energy", "4", "--out", p});
        EXPECT_EQ(r.code, 0) << r.err;
        return p;
    }
    fs::path dir_;
};

TEST_F(Cli, ExitCodes) {
    EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
    EXPECT_EQ(run({"kl", "--help"}).code, cli::kExitOk);
    EXPECT_EQ(run({}).code, cli::kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"design"}).code, cli::kExitUsage);  // --in is required
    EXPECT_EQ(run({"design", "--in", path("nope.json")}).code, cli::kExitFailure);
    EXPECT_EQ(run({"kl", "--in", cat4(), "--max-degree", "x"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"perf", "--in", cat4(), "--channel", "thermal"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"perf", "--in", cat4(), "--gammas", "0.1:0.2"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"build", "--name", "nothing"}).code, cli::kExitFailure);
    std::ofstream(path("bad.json")) << "{ \"modes\": 1,";
    auto r = run({"design", "--in", path("bad.json")});
    EXPECT_EQ(r.code, cli::kExitFailure);
    EXPECT_NE(r.err.find("line"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST_F(Cli, BuildWritesALoadableCode) {
    auto r = run({"build", "--name", "cell24", "--energy", "2"});
    ASSERT_EQ(r.code, 0);
    QSCode code = code_from_json(r.out);
    EXPECT_EQ(code.total_points(), 24u);
    EXPECT_EQ(code.num_codewords(), 3u);
    EXPECT_EQ(code.radius_sq(), 2.0);
}

TEST_F(Cli, CatalogJson) {
    auto r = run({"catalog", "--json", "--properties", "--tmax", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    ASSERT_TRUE(j.is_array());
    for (const auto &e : j) {
        for (const char *k : {"name", "label", "modes", "num_points", "num_codewords", "options", "partitions",
                              "expected_properties"}) {
            EXPECT_TRUE(e.contains(k)) << k;
        }
        EXPECT_TRUE(e["expected_properties"].contains("t_sphere"));
    }
    EXPECT_EQ(run({"catalog"}).code, 0);
}

TEST_F(Cli, DesignJsonAndCsv) {
    std::string code = cat4();
    auto r = run({"design", "--in", code, "--tmax", "4", "--json", "--csv", path("d.csv"), "--mc-samples", "2000",
                  "--seed", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["t_sphere"], 1);
    EXPECT_EQ(j["t_match"], 1);
    EXPECT_EQ(j["degrees"].size(), 5u);
    EXPECT_TRUE(j["degrees"][2].contains("worst_index"));
    EXPECT_FALSE(j["monte_carlo"].empty());
    std::ifstream csv(path("d.csv"));
    std::string header;
    std::getline(csv, header);
    EXPECT_EQ(header, "degree,sphere_residual,match_residual");
    // Progress goes to stderr only.
    EXPECT_NE(r.err.find("Monte Carlo"), std::string::npos);
    auto text = run({"design", "--in", code, "--tmax", "2"});
    EXPECT_NE(text.out.find("t_sphere = 1"), std::string::npos);
}

TEST_F(Cli, KlJsonAndCsv) {
    auto r = run({"kl", "--in", cat4(), "--max-degree", "2", "--dephasing", "2", "--json", "--csv", path("k.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["K"], 2);
    EXPECT_EQ(j["detection_degree"], 1);
    ASSERT_EQ(j["errors"].size(), 6u + 2u);  // 6 monomials of degree <= 2 in one mode, then n, n^2
    EXPECT_EQ(j["errors"][1]["error"], "ad");  // graded, exponents of a-dagger first
    const auto &a = j["errors"][2];
    EXPECT_EQ(a["error"], "a");
    EXPECT_TRUE(a["pass"].get<bool>());
    EXPECT_EQ(a["kl_matrix"].size(), 2u);
    std::ifstream csv(path("k.csv"));
    std::string line;
    int lines = 0;
    while (std::getline(csv, line)) ++lines;
    EXPECT_EQ(lines, 9);
    auto text = run({"kl", "--in", cat4(), "--max-degree", "1"});
    EXPECT_NE(text.out.find("detection_degree = 1"), std::string::npos);
}

TEST_F(Cli, SymmetriesAndIdealJson) {
    std::string code = cat4();
    auto s = run({"symmetries", "--in", code, "--max-order", "4", "--json"});
    ASSERT_EQ(s.code, 0) << s.err;
    auto js = json::parse(s.out);
    EXPECT_EQ(js["symmetries"].size(), 4u);
    for (const auto &a : js["symmetries"]) {
        EXPECT_TRUE(a["classification"] == "Z-type" || a["classification"] == "X-type");
    }
    auto i = run({"ideal", "--in", code, "--max-degree", "4", "--json"});
    ASSERT_EQ(i.code, 0) << i.err;
    auto ji = json::parse(i.out);
    EXPECT_EQ(ji["dimension"], 1);
    EXPECT_EQ(ji["polynomials"][0]["degree"], 4);
    EXPECT_LE(ji["polynomials"][0]["residual"].get<double>(), 1e-9);
}

TEST_F(Cli, CssAndPerf) {
    std::ofstream(path("gx.txt")) << "# repetition\n1 1\n";
    auto r = run({"css", "--q", "2", "--gx", path("gx.txt"), "--alpha", "1.5", "--properties", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["K"], 2);
    EXPECT_EQ(j["points_per_codeword"], 2);
    EXPECT_EQ(j["properties"]["distance_z"], 2);
    EXPECT_TRUE(j.contains("code"));
    EXPECT_EQ(code_from_json(j["code"].dump()).num_codewords(), 2u);
    EXPECT_EQ(run({"css", "--q", "2", "--alpha", "1"}).code, cli::kExitUsage);  // nothing fixes the length
    EXPECT_EQ(run({"css", "--q", "4", "--length", "1"}).code, cli::kExitFailure);
    EXPECT_EQ(run({"css", "--q", "3", "--length", "1", "--out", path("c3.json")}).code, 0);

    auto p = run({"perf", "--in", cat4(), "--gammas", "0:0.01:3", "--json", "--csv", path("p.csv")});
    ASSERT_EQ(p.code, 0) << p.err;
    auto jp = json::parse(p.out);
    ASSERT_EQ(jp["points"].size(), 3u);
    EXPECT_NEAR(jp["points"][0]["fidelity"].get<double>(), 1.0, 1e-10);
    EXPECT_EQ(run({"perf", "--in", cat4(), "--channel", "dephasing", "--sigmas", "0.05", "--nodes", "32"}).code, 0);
}

TEST_F(Cli, TableMatchesLibraryAndIsStable) {
    auto a = run({"table"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, table_csv(catalog_table(TableOptions{})));
    EXPECT_EQ(run({"table"}).out, a.out);
    auto md = run({"table", "--markdown"});
    EXPECT_EQ(md.out.substr(0, 2), "| ");
    auto js = run({"table", "--json", "--csv", path("t.csv")});
    auto j = json::parse(js.out);
    EXPECT_EQ(j["rows"].size(), list_catalog().size());
    std::ifstream f(path("t.csv"));
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_EQ(ss.str(), a.out);
}

}  // namespace
}  // namespace qsc
