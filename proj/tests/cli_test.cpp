#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "qcurv/cli.hpp"

namespace qcurv {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "qcurv");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

TEST(Cli, QTable) {
    const auto r = run({"qtable", "--n", "8", "--J", "4"});
    EXPECT_EQ(r.code, 0);
    for (const char* row : {"Q2 = 4\n", "Q4 = 60\n", "Q6 = 720\n", "Q8 = 5040\n", "v8 = 35/128\n", "w8 = 1/256\n"}) {
        EXPECT_NE(r.out.find(row), std::string::npos) << row;
    }
}

TEST(Cli, Multiplicities) {
    const auto r = run({"multiplicities", "--N", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("(1,1,1,1) → -18\n"), std::string::npos);
    EXPECT_NE(r.out.find("sum = 0\n"), std::string::npos);
    const auto j = run({"multiplicities", "--N", "3", "--format", "json"});
    EXPECT_EQ(j.code, 0);
    const auto doc = nlohmann::json::parse(j.out);
    EXPECT_EQ(doc["rows"].size(), 4u);
    EXPECT_EQ(doc["sum"], "0");
}

TEST(Cli, Series) {
    const auto r = run({"series", "--n", "8", "--J", "4", "--order", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("v = [1, -2, 7/4, -7/8, 35/128]"), std::string::npos);
    EXPECT_NE(r.out.find("w = sqrt(v) = [1, -1, 3/8, -1/16, 1/256]"), std::string::npos);
}

TEST(Cli, UsageErrorsNameTheFlag) {
    const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
        {{"verify", "--n", "7", "--J", "1"}, "--n"},
        {{"verify", "--n", "8", "--J", "1.5"}, "--J"},
        {{"verify", "--n", "8", "--J", "4", "--mu", "-1"}, "--mu"},
        {{"verify", "--n", "8", "--J", "4", "--mu", "x"}, "--mu"},
        {{"verify", "--n", "8", "--J", "4", "--checks", "C01,C77"}, "--checks"},
        {{"verify", "--n", "8", "--J", "4", "--max-order", "9"}, "--max-order"},
        {{"verify", "--n", "8", "--J", "4", "--format", "xml"}, "--format"},
        {{"verify", "--n", "8", "--n", "10", "--J", "1", "--J", "2", "--J", "3"}, "--J"},
        {{"verify", "--J", "4"}, "--n"},
        {{"series", "--n", "8"}, "--J"},
        {{"multiplicities", "--N", "zero"}, "--N"},
        {{"qtable", "--n", "4", "--J", "1"}, "--n"},
        {{"verify", "--bogus"}, "--bogus"},
    };
    for (const auto& [args, flag] : cases) {
        const auto r = run(args);
        EXPECT_EQ(r.code, 2) << args[1];
        EXPECT_NE(r.err.find(flag), std::string::npos) << r.err;
    }
    EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, ParsesRepeatedMuAndPairsModels) {
    cli::VerifyArgs a;
    a.n = {"8"};
    a.J = {"4"};
    a.mu = {"0", "7/3"};
    a.format = "json";
    const auto cfg = cli::make_suite_config(a);
    EXPECT_EQ(cfg.mus.size(), 2u);
    ASSERT_EQ(cfg.models.size(), 1u);
    a.n = {"8", "10"};
    a.J = {"4", "5"};
    const auto zipped = cli::make_suite_config(a);
    ASSERT_EQ(zipped.models.size(), 2u);
    EXPECT_EQ(zipped.models[1].n, 10);
    EXPECT_EQ(zipped.models[1].J, Rational(5));
    a.n = {"8"};
    a.J = {"4", "-2", "1/3"};
    EXPECT_EQ(cli::make_suite_config(a).models.size(), 3u);
}

TEST(Cli, VerifySelectionExitCodes) {
    const auto r = run({"verify", "--n", "8", "--J", "4", "--mu", "1", "--checks", "C19,C26"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("C19\tn=8\tJ=4\tmu=1\tstatus=pass"), std::string::npos);
    EXPECT_NE(r.out.find("status=conjecture-pass"), std::string::npos);
}

TEST(Cli, GoldenJsonForSphereEight) {
    const auto r = run({"verify", "--n", "8", "--J", "4", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const std::string golden = read_file(std::string(QCURV_GOLDEN_DIR) + "/verify_8_4.json");
    ASSERT_FALSE(golden.empty());
    EXPECT_EQ(r.out, golden);
    // Byte-stable across runs and evaluation modes.
    EXPECT_EQ(run({"verify", "--n", "8", "--J", "4", "--format", "json", "--parallel"}).out, golden);
}

TEST(Cli, TextAndJsonCarryTheSameInformation) {
    for (const auto& extra : std::vector<std::vector<std::string>>{{"--n", "8", "--J", "4"},
                                                                   {"--n", "12", "--J", "3/2", "--mu", "101/7"},
                                                                   {}}) {
        std::vector<std::string> text_args{"verify"}, json_args{"verify", "--format", "json"};
        text_args.insert(text_args.end(), extra.begin(), extra.end());
        json_args.insert(json_args.end(), extra.begin(), extra.end());
        const auto text = run(text_args);
        const auto json = run(json_args);
        EXPECT_EQ(text.code, json.code);
        EXPECT_EQ(text_to_json(text.out), ordered_json::parse(json.out));
    }
}

TEST(Cli, DefaultGridJsonSummary) {
    const auto r = run({"verify", "--format", "json", "--parallel"});
    EXPECT_EQ(r.code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["summary"]["result"], "pass");
    EXPECT_EQ(doc["summary"]["fail"], 0);
    EXPECT_EQ(doc["params"]["mu_sampling"]["certified"], true);
    for (const auto& c : doc["checks"]) {
        EXPECT_TRUE(c["status"] == "pass" || c["status"] == "conjecture-pass");
        EXPECT_EQ(c["residual"], "0");
        for (const char* key : {"id", "paper_ref", "params", "status", "residual"}) EXPECT_TRUE(c.contains(key));
    }
}

} // namespace
} // namespace qcurv
