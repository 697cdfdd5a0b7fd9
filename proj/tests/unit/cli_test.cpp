#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "implicit/text_io.hpp"
#include "implicit_cli/cli.hpp"

namespace implicit::cli {
namespace {

const char* kHx = "(1+t)/(2+t)";
const char* kHy = "(3+t)/(4+t)";
const char* kCx = "(2*t^2+2*t+1)/(t^3+5)";
const char* kCy = "(t^3-3*t^2+t-1)/(t^2-3)";

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CmdImplicitize, HumanOutput) {
  const auto r = invoke({"implicitize", "--x", kHx, "--y", kHy});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "2 - 3*y - x + 2*x*y\n");
  EXPECT_EQ(invoke({"implicitize", "--x", "t", "--y", "t^2"}).out, "y - x^2\n");
}

TEST(CmdImplicitize, EveryMethod) {
  for (const char* m : {"unstructured", "dualvand", "kron"}) {
    EXPECT_EQ(invoke({"implicitize", "--x", kHx, "--y", kHy, "--method", m}).out, "2 - 3*y - x + 2*x*y\n") << m;
  }
  EXPECT_EQ(invoke({"implicitize", "--x", kHx, "--y", kHy, "--method", "dualvand", "--primes", "5,7"}).code, kOk);
}

TEST(CmdImplicitize, JsonDocumentFollowsTheSchema) {
  const auto r = invoke({"implicitize", "--x", kHx, "--y", kHy, "--json"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "{\"m\":1,\"n\":1,\"basis\":\"x^i*y^j (i-major)\",\"coeffs\":[[\"2\",\"-3\"],[\"-1\",\"2\"]],"
            "\"verified\":true,\"degree_tight\":true,\"method\":\"kron\"}\n");
  EXPECT_EQ(bipoly_from_json(nlohmann::json::parse(r.out)), testing::hyperbola_F());
}

TEST(CmdImplicitize, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "implicit_cli_test_out.txt";
  ASSERT_EQ(invoke({"implicitize", "--x", kHx, "--y", kHy, "--out", path.string()}).code, kOk);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "2 - 3*y - x + 2*x*y");
  std::filesystem::remove(path);
}

TEST(CmdImplicitize, ExitCodes) {
  EXPECT_EQ(invoke({"implicitize", "--x", "(1+t", "--y", kHy}).code, kParseError);
  EXPECT_EQ(invoke({"implicitize", "--x", kHx}).code, kParseError);
  EXPECT_EQ(invoke({"implicitize", "--x", kHx, "--y", kHy, "--method", "qr"}).code, kParseError);
  EXPECT_EQ(invoke({"implicitize", "--x", kHx, "--y", kHy, "--primes", "2,4"}).code, kParseError);
  EXPECT_EQ(invoke({"implicitize", "--x", "3", "--y", "t"}).code, kDegenerate);
  EXPECT_EQ(invoke({"frobnicate"}).code, kParseError);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(CmdBench, CubicExampleReportsNumberSizes) {
  const auto r = invoke({"bench", "--x", kCx, "--y", kCy, "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["methods"].size(), 3U);
  EXPECT_TRUE(doc["all_agree"].get<bool>());
  for (const auto& m : doc["methods"]) {
    if (m["method"] == "dualvand") EXPECT_GE(m["max_bits"].get<int>(), 100);
    if (m["method"] == "kron") EXPECT_LE(m["max_bits"].get<int>(), 20);
    EXPECT_TRUE(m["verified"].get<bool>());
  }
}

TEST(CmdBench, TableAndRepeat) {
  const auto r = invoke({"bench", "--x", kHx, "--y", kHy, "--repeat", "3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("unstructured"), std::string::npos);
  EXPECT_NE(r.out.find("kron"), std::string::npos);
  const auto sub = invoke({"bench", "--x", kHx, "--y", kHy, "--methods", "kron,dualvand"});
  EXPECT_EQ(sub.code, kOk);
  EXPECT_EQ(sub.out.find("unstructured"), std::string::npos);
  EXPECT_EQ(invoke({"bench", "--x", kHx, "--y", kHy, "--methods", "nope"}).code, kParseError);
}

TEST(RunBench, MedianAndAgreement) {
  const RatParam p = testing::hyperbola();
  const BenchReport report = run_bench(p, {Method::kronecker, Method::dual_vandermonde}, 3);
  ASSERT_EQ(report.records.size(), 2U);
  EXPECT_TRUE(report.all_agree());
  EXPECT_TRUE(report.all_verified());
  EXPECT_EQ(report.records[0].poly, "2 - 3*y - x + 2*x*y");
  EXPECT_GE(report.records[0].wall_ms, 0.0);
}

TEST(CmdVerify, InlineTextJsonAndFile) {
  EXPECT_EQ(invoke({"verify", "--x", kHx, "--y", kHy, "--poly", "2 - 3*y - x + 2*x*y"}).code, kOk);
  EXPECT_EQ(invoke({"verify", "--x", kHx, "--y", kHy, "--poly", "x"}).code, kNotOnCurve);
  const std::string cubic =
      "-53+42*y-74*y^2+172*x+707*x*y+121*x*y^2+37*x*y^3-652*x^2-1156*x^2*y-490*x^2*y^2-34*x^2*y^3"
      "+626*x^3+396*x^3*y+432*x^3*y^2-2*x^3*y^3";
  EXPECT_EQ(invoke({"verify", "--x", kCx, "--y", kCy, "--poly", cubic}).code, kOk);

  const std::string doc = R"({"m":1,"n":1,"coeffs":[["4","-6"],["-2","4"]]})";
  EXPECT_EQ(invoke({"verify", "--x", kHx, "--y", kHy, "--poly", doc}).code, kOk);

  const auto path = std::filesystem::temp_directory_path() / "implicit_cli_test_poly.json";
  ASSERT_EQ(invoke({"implicitize", "--x", kCx, "--y", kCy, "--json", "--out", path.string()}).code, kOk);
  EXPECT_EQ(invoke({"verify", "--x", kCx, "--y", kCy, "--poly", path.string()}).code, kOk);
  EXPECT_EQ(invoke({"verify", "--x", kHx, "--y", kHy, "--poly", path.string()}).code, kNotOnCurve);
  std::filesystem::remove(path);

  EXPECT_EQ(invoke({"verify", "--x", kHx, "--y", kHy, "--poly", "{\"m\":1}"}).code, kParseError);
  EXPECT_EQ(invoke({"verify", "--x", kHx, "--y", kHy, "--poly", "0"}).code, kParseError);
}

TEST(PolyDigest, DependsOnlyOnTheGrid) {
  EXPECT_EQ(poly_digest(testing::hyperbola_F()), poly_digest(parse_bipoly("2*x*y - x - 3*y + 2")));
  EXPECT_NE(poly_digest(testing::hyperbola_F()), poly_digest(parse_bipoly("2 - 3*y - x + 3*x*y")));
  EXPECT_EQ(poly_digest(testing::hyperbola_F()).size(), 16U);
}

}  // namespace
}  // namespace implicit::cli
