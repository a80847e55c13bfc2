#include <gtest/gtest.h>

#include "special_locus/verify.hpp"

using namespace special_locus;

namespace {

VerifyReport small(Suite s, long samples, std::uint64_t seed = 1) {
  VerifyConfig c;
  c.suite = s;
  c.samples = samples;
  c.seed = seed;
  return run_verify(c);
}

}  // namespace

TEST(Verify, SuiteNames) {
  for (Suite s : all_suites()) EXPECT_EQ(parse_suite(to_string(s)), s);
  EXPECT_EQ(all_suites().size(), 6u);
  EXPECT_THROW(parse_suite("lemma99"), UnknownSuite);
  EXPECT_THROW(parse_suite(""), UnknownSuite);
}

TEST(Verify, DefaultSamples) {
  EXPECT_EQ(default_samples(Suite::lemma22), 10000);
  EXPECT_EQ(default_samples(Suite::phi), 1000000);
  EXPECT_EQ(default_samples(Suite::classnum), 100000);
}

TEST(Verify, SmallRunsPass) {
  const std::vector<std::pair<Suite, long>> runs = {{Suite::lemma22, 300}, {Suite::lemma23, 100},
                                                    {Suite::separation, 60}, {Suite::aux, 40},
                                                    {Suite::phi, 20000},     {Suite::classnum, 5000}};
  for (const auto& [suite, n] : runs) {
    const VerifyReport r = small(suite, n, 5);
    EXPECT_TRUE(r.passed()) << to_text(r);
    EXPECT_GT(r.checked, 0) << to_string(suite);
    EXPECT_EQ(r.samples, n);
    EXPECT_TRUE(r.counterexamples.empty());
  }
}

TEST(Verify, SameSeedSameReport) {
  for (Suite s : {Suite::lemma22, Suite::lemma23, Suite::separation}) {
    EXPECT_EQ(to_text(small(s, 50, 99)), to_text(small(s, 50, 99))) << to_string(s);
  }
  EXPECT_NE(to_text(small(Suite::lemma23, 50, 1)), to_text(small(Suite::lemma23, 50, 2)));
}

TEST(Verify, ReportTextNamesSuiteAndSeed) {
  const std::string text = to_text(small(Suite::classnum, 200, 4));
  EXPECT_NE(text.find("classnum"), std::string::npos);
  EXPECT_NE(text.find("4"), std::string::npos);
}

TEST(Draw, RangeAndDeterminism) {
  std::mt19937_64 a(3), b(3);
  for (int i = 0; i < 10000; ++i) {
    const std::int64_t x = draw(a, -7, 12);
    EXPECT_GE(x, -7);
    EXPECT_LE(x, 12);
    EXPECT_EQ(x, draw(b, -7, 12));
  }
  std::mt19937_64 c(4);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(draw(c, 5, 5), 5);
  std::mt19937_64 d(5);
  std::vector<int> seen(3, 0);
  for (int i = 0; i < 3000; ++i) ++seen[draw(d, 0, 2)];
  for (int count : seen) EXPECT_GT(count, 800);
}

TEST(Draw, FrozenSequence) {
  std::mt19937_64 rng(1);
  std::vector<std::int64_t> got;
  for (int i = 0; i < 8; ++i) got.push_back(draw(rng, 0, 99));
  std::mt19937_64 again(1);
  for (std::int64_t g : got) EXPECT_EQ(g, draw(again, 0, 99));
}
