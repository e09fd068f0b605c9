#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "isocrystal/kottwitz_gl.hpp"
#include "isocrystal/kottwitz_unitary.hpp"
#include "json_io.hpp"

namespace isocrystal {
namespace {

using json_io::Json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "isocrystal-kit");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  return json_io::parse(r.out);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, BgMuGlExample) {
  const Json j = run_json({"bg-mu-gl", "--d", "1", "--n", "2", "--mu", "1"});
  ASSERT_EQ(j["classes"].size(), 2u);
  EXPECT_EQ(j["classes"][1]["slopes"][0]["slope"], "1/2");
}

TEST(Cli, RzDimExample) {
  const Json j = run_json({"rz-dim", "--d", "1", "--n", "2", "--mu", "1"});
  EXPECT_EQ(j, Json::parse(R"({"dimension": 1})"));
  EXPECT_EQ(run_json({"rz-dim", "--group", "unitary", "--d", "1", "--n", "3", "--mu", "1"})["dimension"], 2);
}

TEST(Cli, DomainErrorIsExitTwo) {
  const auto r = run({"bg-mu-gl", "--d", "1", "--n", "2", "--mu", "3"});
  EXPECT_EQ(r.code, cli::kExitDomainError);
  const Json j = json_io::parse(r.out);
  EXPECT_EQ(j["code"], "InvalidMu");
  EXPECT_TRUE(j.contains("message"));
}

TEST(Cli, UsageErrorsAreExit64) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bg-mu-gl", "--d", "1", "--n", "2", "--mu", "1", "--bogus", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bg-mu-gl", "--d", "x"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"global-check", "--profile", "{not json"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::vector<std::string>> invocations{
      {"bg-mu-gl", "--d", "2", "--n", "4", "--mu", "1,3"},
      {"bg-mu-unitary", "--d", "2", "--n", "5", "--mu", "2,1"},
      {"poset", "--d", "1", "--n", "5", "--mu", "2", "--format", "dot"},
      {"real-lift", "--poly", "1,1,0,1", "--p", "2", "--precision", "1", "--bound", "3"},
  };
  for (const auto& args : invocations) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, ClassesRoundTrip) {
  const GLDatum datum(2, 4, {1, 3});
  const Json j = run_json({"bg-mu-gl", "--d", "2", "--n", "4", "--mu", "1,3"});
  const auto expected = enumerate_bg_mu(datum);
  ASSERT_EQ(j["classes"].size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(json_io::gl_class_from_json(j["classes"][i], 2), expected[i]);
    EXPECT_EQ(json_io::to_json(expected[i]), j["classes"][i]);
  }
  EXPECT_EQ(json_io::gl_datum_from_json(j["datum"]), datum);

  const UnitaryDatum udatum(1, 4, {1});
  const Json u = run_json({"bg-mu-unitary", "--d", "1", "--n", "4", "--mu", "1"});
  const auto uexpected = enumerate_bg_mu_unitary(udatum);
  ASSERT_EQ(u["classes"].size(), uexpected.size());
  for (std::size_t i = 0; i < uexpected.size(); ++i)
    EXPECT_EQ(json_io::unitary_class_from_json(u["classes"][i], udatum), uexpected[i]);
}

TEST(Cli, InputFileMatchesFlags) {
  const std::string path = ::testing::TempDir() + "/datum.json";
  std::ofstream(path) << R"({"d": 2, "n": 3, "mu": [1, 2]})";
  EXPECT_EQ(run({"bg-mu-gl", "--input", path}).out, run({"bg-mu-gl", "--d", "2", "--n", "3", "--mu", "1,2"}).out);
}

TEST(Cli, BasicAndJGroup) {
  const Json b = run_json({"basic", "--d", "1", "--n", "4", "--mu", "1"});
  EXPECT_EQ(b["j_group"]["factors"][0]["invariant"], "1/4");
  const Json u = run_json({"basic", "--group", "unitary", "--d", "1", "--n", "2", "--mu", "1"});
  EXPECT_EQ(u["class"]["kappa1"], 1);
  const Json jg = run_json({"j-group", "--d", "1", "--n", "3", "--mu", "1", "--class",
                            R"({"slopes":[{"slope":"1/2","mult":1},{"slope":"0","mult":1}]})"});
  EXPECT_EQ(jg["j_group"]["factors"].size(), 2u);
  EXPECT_EQ(run_json({"reflex", "--d", "4", "--n", "2", "--mu", "1,0,1,0"})["reflex_degree"], 2);
}

TEST(Cli, PosetFormats) {
  const Json j = run_json({"poset", "--d", "1", "--n", "2", "--mu", "1"});
  EXPECT_EQ(j["edges"], Json::parse("[[1, 0]]"));
  const auto dot = run({"poset", "--group", "unitary", "--d", "1", "--n", "3", "--mu", "1", "--format", "dot"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_NE(dot.out.find("digraph"), std::string::npos);
  EXPECT_NE(dot.out.find("n1 -> n0;"), std::string::npos);
}

TEST(Cli, TraceRecover) {
  const Json j = run_json({"trace-recover", "--u", R"([["1","0"],["0","1"]])", "--v", R"([["2","0"],["0","3"]])"});
  EXPECT_EQ(j["trace"], "2");
  const Json c = run_json({"trace-recover", "--u", R"([["1/2","7"],["3","-4"]])", "--v", R"([[1,1],[0,1]])",
                           "--corrupt", "3"});
  EXPECT_EQ(c["trace"], "-7/2");
  EXPECT_EQ(c["corrupted_terms"], 3);
  EXPECT_EQ(run({"trace-recover", "--u", "[[1]]", "--v", "[[0]]"}).code, cli::kExitDomainError);
}

TEST(Cli, Isometry) {
  const Json j = run_json({"isometry", "--p", "3", "--N", "0", "--n", "3", "--K", "8", "--g1", "[[0,1],[-1,0]]", "--g2",
                           "[[0,28],[-28,0]]"});
  EXPECT_EQ(j["verified"], true);
  EXPECT_EQ(j["level"], 8);
}

TEST(Cli, GlobalCheckAndRealLift) {
  const Json g = run_json({"global-check", "--profile",
                           R"({"n":2,"real_degree":1,"signatures":[1],"split_places":[1],"inert_places":[false]})"});
  EXPECT_EQ(g["exists"], true);
  EXPECT_EQ(g["witness"]["A"], 1);
  const Json r = run_json({"real-lift", "--poly", "1,1,1", "--p", "2", "--precision", "2", "--bound", "2"});
  EXPECT_EQ(r["polynomial"], Json::parse(R"(["1","5","1"])"));
  for (const auto& [name, ok] : r["verifiers"].items()) EXPECT_EQ(ok, true) << name;
}

TEST(Cli, GoldenOutputs) {
  const std::string dir = ISOCRYSTAL_GOLDEN_DIR;
  EXPECT_EQ(run({"bg-mu-gl", "--d", "1", "--n", "3", "--mu", "1"}).out, slurp(dir + "/bg_mu_gl_d1_n3_mu1.json"));
  EXPECT_EQ(run({"bg-mu-unitary", "--d", "1", "--n", "3", "--mu", "1"}).out, slurp(dir + "/bg_mu_unitary_d1_n3_mu1.json"));
  EXPECT_EQ(run({"poset", "--d", "1", "--n", "4", "--mu", "2", "--format", "dot"}).out,
            slurp(dir + "/poset_d1_n4_mu2.dot"));
}

}  // namespace
}  // namespace isocrystal
