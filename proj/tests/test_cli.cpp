#include <gtest/gtest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "oracle.hpp"
#include "special_locus/cli.hpp"
#include "special_locus/polynomials.hpp"

using namespace special_locus;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Interval {lo, hi} parsed back exactly.
std::pair<BigRat, BigRat> bounds_of(const json& j) {
  return {oracle::decimal(j.at("lo").get<std::string>()), oracle::decimal(j.at("hi").get<std::string>())};
}

class EnvGuard {
 public:
  explicit EnvGuard(const char* value) {
    if (value) setenv("SPECIAL_LOCUS_PRECISION", value, 1);
    else unsetenv("SPECIAL_LOCUS_PRECISION");
  }
  ~EnvGuard() { unsetenv("SPECIAL_LOCUS_PRECISION"); }
};

}  // namespace

TEST(Cli, ClassPolynomialText) {
  const CliRun r = cli({"classpoly", "--disc", "-15"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "X^2 + 191025*X - 121287375\n");
  const CliRun k = cli({"classpoly", "--disc", "-163"});
  EXPECT_EQ(k.out, "X + 262537412640768000\n");
}

TEST(Cli, ClassPolynomialJson) {
  const CliRun r = cli({"--format", "json", "classpoly", "--disc", "-23"});
  ASSERT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["class_number"], 3);
  EXPECT_EQ(j["coefficients"], json({"12771880859375", "-5151296875", "3491750", "1"}));
  EXPECT_EQ(j["forms"].size(), 3u);
}

TEST(Cli, BoundsJsonMatchesOracle) {
  const CliRun r = cli({"--format", "json", "bounds", "--poly", "X + 1728*Y"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["delta1"], 1);
  EXPECT_EQ(j["delta2"], 1);
  const auto [lo, hi] = bounds_of(j["C"]);
  const BigRat oracle_c = oracle::decimal("984514439887.93512332589132235709481196114616898873");
  EXPECT_LE(lo, hi);
  EXPECT_LE(lo, oracle_c + BigRat(1, 1000000));
  EXPECT_GE(hi, oracle_c - BigRat(1, 1000000));
  EXPECT_LT(hi - lo, BigRat(1, 1000000000));
  const auto [hlo, hhi] = bounds_of(j["hF"]);
  EXPECT_LT(hlo, oracle::decimal("7.4547199493640009306891284395166365223954724796299"));
  EXPECT_GT(hhi, oracle::decimal("7.4547199493640009306891284395166365223954724796297"));
}

TEST(Cli, JsonDecimalsRoundTripExactly) {
  const CliRun r = cli({"--format", "json", "--precision", "128", "bounds", "--poly", "3*X^2 + Y - 7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  for (const char* key : {"hF", "C", "disc_bound", "order_bound"}) {
    EXPECT_EQ(j[key]["precision"], 128);
    const std::string lo = j[key]["lo"];
    Mpfr parsed = parse_decimal(lo, 128);
    EXPECT_EQ(to_decimal(parsed), lo) << key;
  }
}

TEST(Cli, SearchJsonHits) {
  const CliRun r = cli({"--format", "json", "search", "--poly", "2*X + 5103*Y + 1647", "--max-disc", "30",
                     "--max-order", "10", "--workers", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j["hits"].size(), 2u);
  EXPECT_EQ(j["hits"][0]["D"], -4);
  EXPECT_EQ(j["hits"][0]["N"], 2);
  EXPECT_EQ(j["hits"][0]["certificate"], "X - 1728");
  EXPECT_EQ(j["hits"][1]["D"], -7);
  EXPECT_EQ(j["hits"][1]["witnesses"][0]["status"], "certified_pair_set");
  EXPECT_TRUE(j["flagged"].empty());
}

TEST(Cli, SearchTextIsIndependentOfWorkers) {
  const std::vector<std::string> base = {"search", "--poly", "X*Y^2 - 3375*Y + X", "--max-disc", "50",
                                         "--max-order", "12"};
  auto with = [&](const char* w) {
    auto a = base;
    a.insert(a.end(), {"--workers", w});
    return cli(a).out;
  };
  EXPECT_EQ(with("1"), with("3"));
}

TEST(Cli, TraceText) {
  const CliRun r = cli({"trace", "--poly", "X - 262537412640768000*Y + 525074825281536000", "--disc", "-163",
                     "--order", "1"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("alpha_growth"), std::string::npos);
  EXPECT_EQ(r.out.find("violated"), std::string::npos);
}

TEST(Cli, ValidationErrorsExitTwo) {
  const std::vector<std::vector<std::string>> bad = {
      {"search", "--poly", "(X - 1)*(Y + 2)"},
      {"search", "--poly", "X + Z"},
      {"search", "--poly", "X + 2Y"},
      {"bounds", "--poly", "5"},
      {"classpoly", "--disc", "-5"},
      {"verify", "--suite", "nope"},
      {"trace", "--poly", "X + 1728*Y", "--disc", "-3", "--order", "2"},
      {"--format", "xml", "classpoly", "--disc", "-4"},
      {"--precision", "8", "classpoly", "--disc", "-4"},
      {"frobnicate"},
  };
  for (const auto& args : bad) {
    const CliRun r = cli(args);
    EXPECT_EQ(r.code, kExitValidation) << args[0] << " " << (args.size() > 2 ? args[2] : "");
    EXPECT_FALSE(r.err.empty());
  }
  const CliRun axis = cli({"search", "--poly", "(X - 1)*(Y + 2)"});
  EXPECT_NE(axis.err.find("AxisLineFactor"), std::string::npos);
}

TEST(Cli, JsonErrorObject) {
  const CliRun r = cli({"--format", "json", "classpoly", "--disc", "-5"});
  EXPECT_EQ(r.code, kExitValidation);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["error"]["reason"], "InvalidDiscriminant");
}

TEST(Cli, PrecisionFromEnvironment) {
  {
    EnvGuard env("128");
    const json j = json::parse(cli({"--format", "json", "bounds", "--poly", "X + Y + 1"}).out);
    EXPECT_EQ(j["precision"], 128);
  }
  {
    EnvGuard env("128");
    const json j = json::parse(cli({"--format", "json", "--precision", "512", "bounds", "--poly", "X + Y + 1"}).out);
    EXPECT_EQ(j["precision"], 512);
  }
  {
    EnvGuard env("abc");
    EXPECT_EQ(cli({"classpoly", "--disc", "-4"}).code, kExitValidation);
  }
  {
    EnvGuard env("1000000");
    EXPECT_EQ(cli({"classpoly", "--disc", "-4"}).code, kExitValidation);
  }
  {
    EnvGuard env(nullptr);
    const json j = json::parse(cli({"--format", "json", "bounds", "--poly", "X + Y + 1"}).out);
    EXPECT_EQ(j["precision"], 256);
  }
}

TEST(Cli, PolynomialRoundTripsThroughOutput) {
  for (const char* text : {"2*X + 5103*Y + 1647", "(1/2)*X^2*Y - 3/4*Y + X", "-(X - Y)^3 + 7"}) {
    const CliRun r = cli({"--format", "json", "bounds", "--poly", text});
    ASSERT_EQ(r.code, kExitOk) << text;
    const std::string printed = json::parse(r.out)["poly"];
    EXPECT_EQ(parse_polynomial(printed), parse_polynomial(text)) << text;
  }
}

TEST(Cli, VerifyIsDeterministic) {
  const CliRun a = cli({"verify", "--suite", "lemma23", "--samples", "40", "--seed", "11"});
  const CliRun b = cli({"verify", "--suite", "lemma23", "--samples", "40", "--seed", "11"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("result: pass"), std::string::npos);
  const CliRun j = cli({"--format", "json", "verify", "--suite", "classnum", "--samples", "300"});
  EXPECT_EQ(json::parse(j.out)["violations"], 0);
}
