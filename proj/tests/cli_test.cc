#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli/commands.h"

namespace qcap::cli {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch_dir(const std::string &name) {
    const fs::path dir = fs::temp_directory_path() / ("qcap_cli_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
        out.push_back(l);
    }
    return out;
}

TEST(CapacityCommand, IdentityChannelJson) {
    std::ostringstream out, err;
    ASSERT_EQ(cmd_capacity({{0, 0, 0}, {}}, out, err), kExitOk) << err.str();
    const auto j = nlohmann::json::parse(out.str());
    EXPECT_NEAR(j.at("capacity").get<double>(), 2.0, 1e-9);
    ASSERT_EQ(j.at("argmax").size(), 4u);
    EXPECT_TRUE(j.at("converged").get<bool>());
    EXPECT_EQ(out.str().find("capacity"), 2u);
    EXPECT_TRUE(err.str().empty());
}

TEST(CapacityCommand, AmplitudeDampingProduct) {
    std::ostringstream out, err;
    ASSERT_EQ(cmd_capacity({{0.2, 0.16, 0.04}, {}}, out, err), kExitOk);
    EXPECT_NEAR(nlohmann::json::parse(out.str()).at("capacity").get<double>(), 1.01243046882, 1e-9);
}

TEST(CapacityCommand, OutsideRegimeIsBadInput) {
    std::ostringstream out, err;
    EXPECT_EQ(cmd_capacity({{0.6, 0, 0}, {}}, out, err), kExitBadInput);
    EXPECT_TRUE(out.str().empty());
    EXPECT_EQ(lines(err.str()).size(), 1u);
    EXPECT_EQ(err.str().rfind("error: ", 0), 0u);
}

TEST(CapacityCommand, InvalidParametersAndOptimizer) {
    std::ostringstream out, err;
    EXPECT_EQ(cmd_capacity({{-0.1, 0, 0}, {}}, out, err), kExitBadInput);
    OptimizerConfig bad;
    bad.starts = 0;
    EXPECT_EQ(cmd_capacity({{0.1, 0, 0}, bad}, out, err), kExitBadInput);
}

TEST(CurveCommand, Dep4ToStandardOutput) {
    CurveOptions opts;
    opts.kind = "dep4";
    opts.steps = 5;
    std::ostringstream out, err;
    ASSERT_EQ(cmd_curve(opts, out, err), kExitOk) << err.str();
    const auto ls = lines(out.str());
    ASSERT_EQ(ls.size(), 6u);
    EXPECT_EQ(ls[0], "p,bound");
    EXPECT_EQ(ls[1], "0,2");
    EXPECT_EQ(ls[5], "0.375,0");
    EXPECT_EQ(out.str().find('\r'), std::string::npos);
}

TEST(CurveCommand, DefaultGridHas2001Rows) {
    CurveOptions opts;
    opts.kind = "symmetric";
    std::ostringstream out, err;
    ASSERT_EQ(cmd_curve(opts, out, err), kExitOk);
    EXPECT_EQ(lines(out.str()).size(), 2002u);
}

TEST(CurveCommand, WritesFileByteIdenticallyAcrossRuns) {
    const fs::path dir = scratch_dir("determinism");
    CurveOptions opts;
    opts.kind = "ad";
    opts.steps = 21;
    std::ostringstream out, err;
    opts.out_path = (dir / "a.csv").string();
    ASSERT_EQ(cmd_curve(opts, out, err), kExitOk) << err.str();
    opts.out_path = (dir / "b.csv").string();
    ASSERT_EQ(cmd_curve(opts, out, err), kExitOk);
    EXPECT_TRUE(out.str().empty());
    const std::string a = slurp(dir / "a.csv");
    EXPECT_EQ(a, slurp(dir / "b.csv"));
    EXPECT_EQ(a.rfind("gamma,capacity\n", 0), 0u);
    EXPECT_EQ(lines(a).size(), 22u);
    std::size_t files = 0;
    for ([[maybe_unused]] const auto &e : fs::directory_iterator(dir)) {
        ++files;
    }
    EXPECT_EQ(files, 2u);
    fs::remove_all(dir);
}

TEST(CurveCommand, BadRangesAreBadInput) {
    std::ostringstream out, err;
    CurveOptions opts;
    opts.kind = "dep4";
    opts.pmin = 0.5;
    EXPECT_EQ(cmd_curve(opts, out, err), kExitBadInput);
    EXPECT_NE(err.str().find("3/8"), std::string::npos);
    opts = {};
    opts.kind = "symmetric";
    opts.pmax = 0.6;
    EXPECT_EQ(cmd_curve(opts, out, err), kExitBadInput);
    opts = {};
    opts.kind = "rains";
    EXPECT_EQ(cmd_curve(opts, out, err), kExitBadInput);
    opts = {};
    opts.kind = "ad";
    opts.steps = 1;
    EXPECT_EQ(cmd_curve(opts, out, err), kExitBadInput);
    EXPECT_TRUE(out.str().empty());
}

TEST(CurveCommand, FailureLeavesNoFile) {
    const fs::path dir = scratch_dir("partial");
    CurveOptions opts;
    opts.kind = "ad";
    opts.pmax = 0.7;
    opts.out_path = (dir / "c.csv").string();
    std::ostringstream out, err;
    EXPECT_EQ(cmd_curve(opts, out, err), kExitBadInput);
    EXPECT_TRUE(fs::is_empty(dir));
    fs::remove_all(dir);
}

TEST(CurveCommand, UnwritableDestination) {
    CurveOptions opts;
    opts.kind = "dep4";
    opts.steps = 3;
    opts.out_path = "/nonexistent-dir/qcap/out.csv";
    std::ostringstream out, err;
    EXPECT_NE(cmd_curve(opts, out, err), kExitOk);
    EXPECT_FALSE(err.str().empty());
}

TEST(TwirlCommand, IdentityChannelTable) {
    TwirlOptions opts;
    std::ostringstream out, err;
    ASSERT_EQ(cmd_twirl(opts, out, err), kExitOk);
    const auto ls = lines(out.str());
    ASSERT_EQ(ls.size(), 2u);
    EXPECT_EQ(ls[0], "pauli  probability  weight");
    EXPECT_EQ(ls[1], "II  1  0");
}

TEST(TwirlCommand, CsvListsAllStrings) {
    TwirlOptions opts;
    opts.params = {0.2, 0.05, 0.1};
    opts.format = OutputFormat::Csv;
    std::ostringstream out, err;
    ASSERT_EQ(cmd_twirl(opts, out, err), kExitOk);
    const auto ls = lines(out.str());
    ASSERT_EQ(ls.size(), 17u);
    EXPECT_EQ(ls[0], "pauli,probability,weight");
    EXPECT_EQ(ls[1].rfind("II,", 0), 0u);
    EXPECT_EQ(ls[16].rfind("ZZ,", 0), 0u);
}

TEST(TwirlCommand, JsonIncludesMassesAndPrintedCoefficients) {
    TwirlOptions opts;
    opts.params = {0.2, 0.05, 0.1};
    opts.format = OutputFormat::Json;
    std::ostringstream out, err;
    ASSERT_EQ(cmd_twirl(opts, out, err), kExitOk);
    const auto j = nlohmann::json::parse(out.str());
    EXPECT_EQ(j.at("probabilities").size(), 16u);
    const auto &m = j.at("weight_class_masses");
    ASSERT_EQ(m.size(), 3u);
    EXPECT_NEAR(m[0].get<double>() + m[1].get<double>() + m[2].get<double>(), 1.0, 1e-10);
    const auto &q = j.at("printed_coefficients");
    for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(q[i].get<double>() * q[i].get<double>(), m[i].get<double>(), 1e-10);
    }
}

TEST(TwirlCommand, LocalTwirlUniformizesDepolarizing) {
    TwirlOptions opts;
    opts.channel_json = R"({"type": "depolarizing", "params": {"p": 0.16, "num_qubits": 2}})";
    opts.local = true;
    opts.format = OutputFormat::Json;
    std::ostringstream out, err;
    ASSERT_EQ(cmd_twirl(opts, out, err), kExitOk) << err.str();
    const auto j = nlohmann::json::parse(out.str());
    EXPECT_NEAR(j.at("probabilities").at("II").get<double>(), 0.85, 1e-12);
    EXPECT_NEAR(j.at("probabilities").at("XZ").get<double>(), 0.01, 1e-12);
    EXPECT_FALSE(j.contains("printed_coefficients"));
}

TEST(TwirlCommand, PauliChannelJson) {
    TwirlOptions opts;
    opts.channel_json = R"({"type": "pauli", "params": {"probs": {"II": 0.5, "XZ": 0.25, "YI": 0.25}}})";
    std::ostringstream out, err;
    ASSERT_EQ(cmd_twirl(opts, out, err), kExitOk) << err.str();
    const auto ls = lines(out.str());
    ASSERT_EQ(ls.size(), 4u);
    EXPECT_EQ(ls[1], "II  0.5  0");
    EXPECT_EQ(ls[2], "XZ  0.25  2");
    EXPECT_EQ(ls[3], "YI  0.25  1");
}

TEST(TwirlCommand, InputErrors) {
    std::ostringstream out, err;
    TwirlOptions opts;
    opts.channel_json = "{not json";
    EXPECT_EQ(cmd_twirl(opts, out, err), kExitBadInput);
    opts.channel_json = R"({"type": "erasure", "params": {}})";
    EXPECT_EQ(cmd_twirl(opts, out, err), kExitBadInput);
    opts.channel_json = R"({"type": "pauli", "params": {"probs": {"II": 0.5, "X": 0.5}}})";
    EXPECT_EQ(cmd_twirl(opts, out, err), kExitBadInput);
    opts.channel_json = R"({"type": "depolarizing", "params": {"p": 0.1, "num_qubits": 1}})";
    opts.local = true;
    EXPECT_EQ(cmd_twirl(opts, out, err), kExitBadInput);
    opts = {};
    opts.params = {0.6, 0.6, 0.0};
    EXPECT_EQ(cmd_twirl(opts, out, err), kExitBadInput);
    EXPECT_TRUE(out.str().empty());
}

TEST(ParseFormat, Names) {
    EXPECT_EQ(parse_format("csv"), OutputFormat::Csv);
    EXPECT_EQ(parse_format("json"), OutputFormat::Json);
    EXPECT_EQ(parse_format("table"), OutputFormat::Table);
    EXPECT_ANY_THROW(parse_format("xml"));
}

TEST(VerifyCommand, PassesForSeveralSeeds) {
    for (std::uint64_t seed : {1u, 7u, 8u}) {
        std::ostringstream out, err;
        EXPECT_EQ(cmd_verify({seed, 1.0}, out, err), kExitOk) << out.str() << err.str();
        for (const auto &l : lines(out.str())) {
            EXPECT_EQ(l.rfind("PASS ", 0), 0u) << l;
        }
    }
}

TEST(VerifyCommand, ZeroToleranceReportsFirstFailure) {
    std::ostringstream out, err;
    EXPECT_EQ(cmd_verify({1, -1.0}, out, err), kExitVerifyFailed);
    EXPECT_EQ(err.str(), "verification failed: first failing check: trace_preservation\n");
}

TEST(FormatNumber, TwelveSignificantDigits) {
    EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(2.0), "2");
    EXPECT_EQ(format_number(1e-20), "1e-20");
}

}  // namespace
}  // namespace qcap::cli
