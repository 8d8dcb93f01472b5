#include "extremal/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace {

using namespace extremal;

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "extremal_cech");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::stringstream out, err;
    Outcome o;
    auto cfg = parse_args(static_cast<int>(argv.size()), argv.data(), out, err, o.code);
    if (cfg) o.code = run(*cfg, out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("extremal_cli_test_" + name);
}

TEST(Cli, GenerateThreeDimensionalSet) {
    const auto path = temp_path("pts.csv");
    auto o = invoke({"generate", "--kind", "3d", "--n", "2", "--delta", "auto", "-o", path.string()});
    EXPECT_EQ(o.code, kExitOk) << o.err;
    const auto text = slurp(path);
    int rows = 0;
    std::stringstream s(text);
    for (std::string line; std::getline(s, line);)
        if (!line.empty() && line[0] != '#') ++rows;
    EXPECT_EQ(rows, 6);
    auto again = invoke({"generate", "--kind", "3d", "--n", "2", "--delta", "auto", "-o", path.string()});
    EXPECT_EQ(slurp(path), text);
    std::filesystem::remove(path);
}

TEST(Cli, VerifyByTheoremNumber) {
    auto o = invoke({"verify", "--theorem", "3.1", "--n", "5"});
    EXPECT_EQ(o.code, kExitOk) << o.err;
    EXPECT_NE(o.out.find("PASS 3d.beta1"), std::string::npos);
    EXPECT_NE(o.out.find("expected=35 observed=35"), std::string::npos);
    EXPECT_NE(o.out.find("expected=25 observed=25"), std::string::npos);
    EXPECT_EQ(o.out.find("FAIL"), std::string::npos);
}

TEST(Cli, EvenBettiAtHalf) {
    auto o = invoke({"betti", "--kind", "even", "--k", "2", "--n", "5", "--radius", "0.5", "--p", "1"});
    EXPECT_EQ(o.code, kExitOk) << o.err;
    EXPECT_EQ(o.out, "26\n");
}

TEST(Cli, UnreducedFlag) {
    auto o = invoke({"betti", "--kind", "even", "--k", "2", "--n", "5", "--radius", "0.01", "--p",
                     "0", "--unreduced"});
    EXPECT_EQ(o.code, kExitOk) << o.err;
    EXPECT_EQ(o.out, "10\n");
}

TEST(Cli, PipelineThroughFiles) {
    const auto pts = temp_path("chain_pts.csv");
    const auto filt = temp_path("chain_filt.txt");
    const auto diag = temp_path("chain_diag.csv");
    const auto svg = temp_path("chain_diag.svg");
    ASSERT_EQ(invoke({"generate", "--kind", "odd", "--k", "1", "--n", "3", "-o", pts.string()}).code,
              kExitOk);
    EXPECT_EQ(invoke({"filtration", "--input", pts.string(), "-o", filt.string()}).code, kExitOk);
    EXPECT_EQ(invoke({"persistence", "--input", pts.string(), "-o", diag.string(), "--svg",
                      svg.string()})
                  .code,
              kExitOk);
    EXPECT_EQ(slurp(diag).substr(0, 16), "dim,birth,death\n");
    EXPECT_NE(slurp(svg).find("<svg"), std::string::npos);
    for (const auto& p : {pts, filt, diag, svg}) std::filesystem::remove(p);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, kExitUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(invoke({"betti", "--kind", "cube"}).code, kExitUsage);
    EXPECT_EQ(invoke({"verify", "--theorem", "9.9"}).code, kExitUsage);
    EXPECT_EQ(invoke({"generate", "--kind", "even", "--k", "2", "--n", "2"}).code, kExitUsage);
}

TEST(Cli, NumericFailureExitCode) {
    auto o = invoke({"verify", "--kind", "3d", "--n", "3", "--delta", "0.5"});
    EXPECT_EQ(o.code, kExitNumeric);
    EXPECT_FALSE(o.err.empty());
}

TEST(Cli, HelpExitsCleanly) {
    auto o = invoke({"--help"});
    EXPECT_EQ(o.code, kExitOk);
    EXPECT_NE(o.out.find("generate"), std::string::npos);
}

} // namespace
