#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "app.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = schemekit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / ("schemekit_cli_" + name);
  std::ofstream(p) << content;
  return p.string();
}

}  // namespace

TEST(Cli, AnalyzeIcosahedron) {
  const auto r = run({"analyze", "--family", "icosahedron", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  for (const auto& o : j["orderings"]) {
    EXPECT_EQ(o["strength"]["moment"]["t"], 5);
    EXPECT_EQ(o["strength"]["krein"]["t"], 5);
    EXPECT_TRUE(o["strength"]["agreement"].get<bool>());
  }
}

TEST(Cli, AnalyzePetersenJson) {
  const auto r = run({"analyze", "--family", "petersen", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["scheme"]["multiplicities"], nlohmann::json::array({1, 5, 4}));
  EXPECT_EQ(j["orderings"][0]["strength"]["moment"]["t"], 2);
}

TEST(Cli, AnalyzeTextMentionsStrength) {
  const auto r = run({"analyze", "--family", "hamming", "--params", "d=3,q=2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("moments t=3, krein t=3"), std::string::npos) << r.out;
}

TEST(Cli, BadFileIsParseError) {
  const auto path = temp_file("bad.json", "{ not json");
  const auto r = run({"analyze", "--file", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ParseError"), std::string::npos) << r.err;
  std::filesystem::remove(path);
}

TEST(Cli, FileInput) {
  const auto path = temp_file("family.json", R"({"family": "cycle", "params": {"n": 6}})");
  const auto r = run({"strength", "--file", path, "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  std::filesystem::remove(path);
}

TEST(Cli, SourceIsRequiredAndExclusive) {
  EXPECT_EQ(run({"analyze"}).code, 2);
  EXPECT_EQ(run({"analyze", "--family", "petersen", "--file", "x.json"}).code, 2);
  EXPECT_EQ(run({"analyze", "--family", "hamming", "--params", "d=20,q=2"}).code, 2);
}

TEST(Cli, StrengthProbeForCycle) {
  const auto r = run({"strength", "--family", "cycle", "--params", "n=9", "--probe", "12", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const auto& s = j["orderings"][0]["strength"]["moment"];
  EXPECT_EQ(s["t"], 8);
  EXPECT_EQ(s["probe_t"], 8);
}

TEST(Cli, Derived) {
  const auto r = run({"derived", "--family", "hamming", "--params", "d=6,q=2", "--class", "1", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"derived", "--family", "petersen", "--class", "7"}).code, 2);
}

TEST(Cli, CatalanFromScheme) {
  const auto r = run({"catalan", "--family", "hamming", "--params", "d=3,q=2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["d"], 3);
  EXPECT_EQ(j["f"][2][0], "3");
  EXPECT_EQ(run({"catalan", "--family", "petersen", "--ordering", "5"}).code, 2);
}

TEST(Cli, CatalanFromWeights) {
  const auto r = run({"catalan", "--a", "0,0", "--c", "0,1", "--m", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("f_2: 1"), std::string::npos) << r.out;
  EXPECT_EQ(run({"catalan", "--a", "0,0", "--c", "0,2", "--m", "2"}).code, 2);
}

TEST(Cli, RecoverSphere) {
  const auto path = temp_file("moments.json", R"(["0", "3", "0", "81/5", "0"])");
  const auto r = run({"recover", path, "--m", "3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["a_star"], nlohmann::json::array({"0", "0", "0"}));
  EXPECT_EQ(j["c_star"][2], "6/5");
  std::filesystem::remove(path);
}

TEST(Cli, RecoverInconsistent) {
  const auto path = temp_file("moments_bad.json", R"(["0", "4"])");
  const auto r = run({"recover", path, "--m", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("InconsistentMoments"), std::string::npos) << r.err;
  std::filesystem::remove(path);
}

TEST(Cli, RecoverSingleMoment) {
  const auto path = temp_file("moments_one.json", R"(["0"])");
  const auto r = run({"recover", path, "--m", "3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["a_star"], nlohmann::json::array({"0"}));
  std::filesystem::remove(path);
}

TEST(Cli, VerifySubset) {
  const auto r = run({"verify", "--only", "catalan-oracle,recover-roundtrip", "--seed", "42", "--random-triples", "100"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("seed 42"), std::string::npos);
  EXPECT_NE(r.out.find("PASS catalan-oracle"), std::string::npos);
  EXPECT_NE(r.out.find("PASS recover-roundtrip"), std::string::npos);
  EXPECT_EQ(r.out.find("sidelnikov"), std::string::npos);
  EXPECT_EQ(run({"verify", "--only", "catalan-oracle", "--seed", "42", "--random-triples", "100"}).out,
            run({"verify", "--only", "catalan-oracle", "--seed", "42", "--random-triples", "100"}).out);
  EXPECT_EQ(run({"verify", "--only", "nope"}).code, 2);
}

TEST(Cli, HelpAndUsage) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"analyze", "--family", "petersen", "--t-max", "x"}).code, 2);
}
