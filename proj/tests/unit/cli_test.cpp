#include "geoint/config.hpp"
#include "geoint/errors.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace geoint {
namespace {

using nlohmann::json;

struct RunResult {
    int status = -1;
    std::string out;
    std::string err;
};

std::string scratch(const std::string& name) { return std::string(GEOINT_SCRATCH_DIR) + "/cli_test_" + name; }

RunResult run(const std::string& args, const std::string& env = {}) {
    static int counter = 0;
    std::string tag = std::to_string(::getpid()) + "_" + std::to_string(++counter);
    std::string out = scratch("out_" + tag), err = scratch("err_" + tag);
    std::string cmd = env + " '" GEOINT_CLI_PATH "' " + args + " >'" + out + "' 2>'" + err + "'";
    int raw = std::system(cmd.c_str());
    RunResult r;
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = read_file(out);
    r.err = read_file(err);
    return r;
}

std::string write_config(const std::string& name, const json& doc) {
    std::string path = scratch(name + ".json");
    std::ofstream(path) << doc.dump(2);
    return path;
}

json bundled_json(const std::string& name) { return json::parse(read_file(testing::config_path(name))); }

std::vector<std::vector<std::string>> tsv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, '\t')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

TEST(Cli, VerifyBundledConfigs) {
    for (const auto& name : testing::bundled_configs()) {
        auto r = run("verify '" + testing::config_path(name) + "'");
        EXPECT_EQ(r.status, 0) << name << ": " << r.err;
        EXPECT_NE(r.out.find("ok"), std::string::npos);
    }
}

TEST(Cli, EmbeddingSquareMismatchExitsOne) {
    json doc = bundled_json("disc15_maximal");
    doc["D1"] = 3;
    auto r = run("verify '" + write_config("square_mismatch", doc) + "'");
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.err.find("embedding square mismatch"), std::string::npos) << r.err;
}

TEST(Cli, NonCoprimeDiscriminantsExitOne) {
    json doc = bundled_json("disc6_maximal");
    doc["D2"] = doc["D1"];
    doc["w2"] = doc["w1"];
    auto r = run("verify '" + write_config("not_coprime", doc) + "'");
    EXPECT_EQ(r.status, 1) << r.err;
}

TEST(Cli, MalformedInputExitsOne) {
    std::string path = scratch("broken.json");
    std::ofstream(path) << "{\"a\": ";
    EXPECT_EQ(run("verify '" + path + "'").status, 1);
    EXPECT_EQ(run("verify '" + scratch("does_not_exist.json") + "'").status, 1);
    EXPECT_EQ(run("coeffs '" + testing::config_path("disc15_maximal") + "' --method bogus").status, 1);
    EXPECT_EQ(run("").status, 1);
}

TEST(Cli, EmptyTableForZeroNMax) {
    auto r = run("coeffs '" + testing::config_path("disc15_maximal") + "' --n-max 0");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "n\ta_theta\ta_oracle\tmatch\tcoprime\n");
}

TEST(Cli, CoefficientsMatchAndAreDeterministic) {
    std::string args = "coeffs '" + testing::config_path("disc15_maximal") + "' --n-max 15";
    auto a = run(args);
    auto b = run(args + " --threads 1");
    auto c = run(args, "PRECISION_BITS=64");
    ASSERT_EQ(a.status, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    auto rows = tsv(a.out);
    ASSERT_EQ(rows.size(), 16u);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        ASSERT_EQ(rows[i].size(), 5u);
        EXPECT_EQ(rows[i][0], std::to_string(i));
        EXPECT_EQ(rows[i][3], "true");
    }
}

TEST(Cli, SingleMethodUsesPlaceholders) {
    auto r = run("coeffs '" + testing::config_path("disc15_maximal") + "' --n-max 3 --method theta");
    ASSERT_EQ(r.status, 0);
    auto rows = tsv(r.out);
    ASSERT_EQ(rows.size(), 4u);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i][2], "-");
        EXPECT_EQ(rows[i][3], "-");
    }
}

TEST(Cli, JsonOutput) {
    auto r = run("coeffs '" + testing::config_path("disc6_level5") + "' --n-max 10 --format json");
    ASSERT_EQ(r.status, 0) << r.err;
    json doc = json::parse(r.out);
    EXPECT_EQ(doc["config_hash"].get<std::string>().size(), 64u);
    EXPECT_TRUE(doc["calibration_sign"] == 1 || doc["calibration_sign"] == -1);
    ASSERT_EQ(doc["rows"].size(), 10u);
    for (const auto& row : doc["rows"]) {
        EXPECT_TRUE(row["a_theta"].is_number_integer());
        EXPECT_TRUE(row["a_oracle"].is_number_integer());
        EXPECT_TRUE(row["match"].get<bool>());
    }
    auto o = run("coeffs '" + testing::config_path("disc6_level5") + "' --n-max 2 --format json --method oracle");
    json single = json::parse(o.out);
    EXPECT_TRUE(single["rows"][0]["a_theta"].is_null());
    EXPECT_TRUE(single["rows"][0]["match"].is_null());
}

TEST(Cli, HilbertTotalsRegroupThetaColumn) {
    const std::string cfg = testing::config_path("disc15_maximal");
    auto h = run("hilbert '" + cfg + "' --trace-max 12 --format json");
    auto c = run("coeffs '" + cfg + "' --n-max 12 --method theta --format json");
    ASSERT_EQ(h.status, 0) << h.err;
    ASSERT_EQ(c.status, 0) << c.err;
    std::map<std::int64_t, std::int64_t> totals;
    for (const auto& row : json::parse(h.out)["rows"])
        totals[std::stoll(row["trace"].get<std::string>())] += row["c"].get<std::int64_t>();
    for (const auto& row : json::parse(c.out)["rows"])
        EXPECT_EQ(totals[row["n"].get<std::int64_t>()], row["a_theta"].get<std::int64_t>());
}

TEST(Cli, TermwiseRuns) {
    auto r = run("termwise '" + testing::config_path("disc6_maximal") + "' --n-max 4 --scan-radius 2");
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("# termwise agreement"), std::string::npos);
}

TEST(Cli, SelftestExitCodes) {
    auto ok = run("selftest");
    EXPECT_EQ(ok.status, 0) << ok.out << ok.err;
    auto tight = run("selftest --tolerance 1e-30");
    EXPECT_EQ(tight.status, 3);
}

TEST(Config, ParseErrors) {
    EXPECT_THROW(parse_config("not json"), ConfigError);
    EXPECT_THROW(parse_config("{}"), ConfigError);
    json doc = bundled_json("disc15_maximal");
    doc["a"] = "1.5";
    EXPECT_THROW(parse_config(doc.dump()), ConfigError);
    doc = bundled_json("disc15_maximal");
    doc["order_basis"].erase(0);
    EXPECT_THROW(parse_config(doc.dump()), ConfigError);
    doc = bundled_json("disc15_maximal");
    doc["options"]["sign_convention"] = 2;
    EXPECT_THROW(parse_config(doc.dump()), ConfigError);
}

TEST(Config, RoundTripOfBundledConfig) {
    Config cfg = load_config(testing::config_path("disc15_maximal"));
    EXPECT_EQ(cfg.a, -3);
    EXPECT_EQ(cfg.b, 5);
    EXPECT_EQ(cfg.emb1.D, 2);
    EXPECT_EQ(cfg.emb2.D, 35);
    EXPECT_EQ(cfg.order_basis[1], (Quaternion{Rational(1, 2), Rational(1, 2), 0, 0}));
    EXPECT_EQ(cfg.options.n_max, 50);
    EXPECT_EQ(build_context(cfg).ramification().discriminant, 15);
}

}  // namespace
}  // namespace geoint
