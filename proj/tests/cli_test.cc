// Copyright 2026 The wgsqueeze Authors
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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "gtest/gtest.h"
#include "wgsqueeze/cli/commands.h"

using namespace wgs;
using namespace wgs::cli;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "wgsqueeze");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path fresh_dir(const std::string &name) {
    fs::path d = fs::temp_directory_path() / ("wgsqueeze_cli_test_" + name);
    fs::remove_all(d);
    return d;
}

}  // namespace

TEST(parse_n_grid, forms) {
    ASSERT_EQ(parse_n_grid("lin:2:6"), (std::vector<int>{2, 3, 4, 5, 6}));
    ASSERT_EQ(parse_n_grid("lin:2:10:4"), (std::vector<int>{2, 6, 10}));
    ASSERT_EQ(parse_n_grid("log:10:1000:30").size(), 30u);
    ASSERT_EQ(parse_n_grid("4,8,16"), (std::vector<int>{4, 8, 16}));
    for (const char *bad : {"", "lin:2", "lin:1:5", "4,4,8", "8,4", "log:10:1000", "abc", "lin:2:x"}) {
        ASSERT_THROW(parse_n_grid(bad), ConfigError) << bad;
    }
}

TEST(config, defaults_and_family_consistency) {
    RunConfig c;
    c.command = Command::Tables;
    RunConfig d = with_defaults(c);
    ASSERT_EQ(d.family, Family::Complete);
    ASSERT_EQ(d.n_grid.size(), 999u);
    ASSERT_EQ(d.channels.size(), 3u);
    c.family = Family::Cluster;
    ASSERT_THROW(with_defaults(c), ConfigError);

    RunConfig s;
    s.command = Command::ClusterScan;
    s.channels = {ChannelKind::None, ChannelKind::Dephasing};
    s.two_gamma_ts = {0.5, 1};
    auto settings = with_defaults(s).channel_settings();
    ASSERT_EQ(settings.size(), 3u);
    ASSERT_EQ(settings[0].kind(), ChannelKind::None);
    ASSERT_NEAR(settings[2].gamma_t(), 0.5, 1e-15);
}

TEST(config, hash_is_stable_and_ignores_output_dir) {
    RunConfig c;
    c.command = Command::Metrology;
    RunConfig a = with_defaults(c);
    RunConfig b = a;
    b.output_dir = "/elsewhere";
    ASSERT_EQ(config_hash(a), config_hash(b));
    ASSERT_EQ(canonical_string(a), canonical_string(b));
    b.two_gamma_ts = {0.25};
    ASSERT_NE(config_hash(a), config_hash(b));
}

TEST(emit, number_format) {
    ASSERT_EQ(format_number(0.1), "0.1");
    ASSERT_EQ(format_number(1e-20), "1e-20");
    ASSERT_EQ(format_number(NAN), "nan");
    ASSERT_EQ(format_number(INFINITY), "inf");
    ASSERT_EQ(format_number(-INFINITY), "-inf");
    double x = 0.7312081234567891;
    ASSERT_EQ(std::stod(format_number(x)), x);
}

TEST(emit, csv_and_json) {
    Table t{"demo", {"n", "value", "ok", "note"}, {}};
    t.add_row({4LL, 0.5, true, std::string("a")});
    t.add_row({5LL, NAN, false, std::string("b")});
    ASSERT_THROW(t.add_row({1LL}), std::logic_error);
    ASSERT_EQ(t.column_index("ok"), 2u);
    Provenance p{"tables", 0x1234, "printed"};
    std::string csv = render_csv(t, p);
    ASSERT_EQ(csv.rfind("# tool: wgsqueeze 1.0.0\n", 0), 0u);
    ASSERT_NE(csv.find("# config_hash: 0000000000001234\n"), std::string::npos);
    ASSERT_NE(csv.find("n,value,ok,note\n4,0.5,true,a\n5,nan,false,b\n"), std::string::npos);
    std::string json = render_json(t, p);
    ASSERT_NE(json.find("null"), std::string::npos);
    ASSERT_EQ(json.find(" nan"), std::string::npos);
}

TEST(run_cli, exit_codes) {
    ASSERT_EQ(run({"--help"}).code, kExitOk);
    ASSERT_EQ(run({"--version"}).code, kExitOk);
    ASSERT_EQ(run({}).code, kExitConfig);
    ASSERT_EQ(run({"tables", "--channel", "bogus"}).code, kExitConfig);
    ASSERT_EQ(run({"tables", "--family", "cluster"}).code, kExitConfig);
    ASSERT_EQ(run({"tables", "--printed-formulas", "--corrected-formulas"}).code, kExitConfig);
    ASSERT_EQ(run({"tables", "--format", "xml"}).code, kExitConfig);
    // A grid of one N cannot be fit.
    CliRun single = run({"tables", "--n-grid", "50", "--out", fresh_dir("single").string()});
    ASSERT_EQ(single.code, kExitConfig);
    ASSERT_NE(single.err.find("degenerate"), std::string::npos);
}

TEST(run_cli, byte_identical_reruns) {
    auto once = [](const std::string &tag) {
        fs::path d = fresh_dir(tag);
        CliRun r = run({"tables", "--n-grid", "log:10:200:8", "--two-gamma-t", "0.5,1", "--out", d.string()});
        EXPECT_EQ(r.code, kExitOk) << r.err;
        std::map<std::string, std::string> files;
        for (const auto &entry : fs::directory_iterator(d)) {
            files[entry.path().filename().string()] = slurp(entry.path());
        }
        return files;
    };
    auto a = once("rerun_a");
    auto b = once("rerun_b");
    ASSERT_FALSE(a.empty());
    ASSERT_EQ(a, b);
    ASSERT_TRUE(a.count("table_dephasing.csv"));
    ASSERT_TRUE(a.count("tables_cross.csv"));
}

TEST(run_cli, config_file) {
    fs::path d = fresh_dir("config_file");
    fs::create_directories(d);
    fs::path cfg = d / "run.ini";
    std::ofstream(cfg) << "family=cluster\nchannel=dephasing\ntwo-gamma-t=0.5\nalpha-samples=11\nnoise-points=5\n";
    CliRun r = run({"cluster-scan", "--config", cfg.string(), "--out", (d / "out").string(), "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::string alpha = slurp(d / "out" / "cluster_alpha.json");
    ASSERT_NE(alpha.find("\"command\": \"cluster-scan\""), std::string::npos);
    ASSERT_NE(alpha.find("dephasing"), std::string::npos);
}

TEST(run_cli, oracle_check_small) {
    fs::path d = fresh_dir("oracle");
    CliRun r = run({"oracle-check", "--n-grid", "2,3,5", "--out", d.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    ASSERT_TRUE(fs::exists(d / "oracle_check.csv"));
    ASSERT_TRUE(fs::exists(d / "oracle_errata.csv"));
}
