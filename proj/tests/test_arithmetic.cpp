#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracle.hpp"
#include "special_locus/arithmetic.hpp"

using namespace special_locus;

TEST(EulerPhi, Examples) {
  EXPECT_EQ(euler_phi(OrderN(1)), 1u);
  EXPECT_EQ(euler_phi(OrderN(12)), 4u);
  EXPECT_EQ(euler_phi(OrderN(97)), 96u);
  EXPECT_EQ(euler_phi(OrderN(2310)), 480u);
  EXPECT_EQ(euler_phi(OrderN(1000000007ULL * 2)), 1000000006u);
  EXPECT_THROW(OrderN(0), DomainError);
}

TEST(EulerPhi, MatchesSieve) {
  const auto table = totient_table(20000);
  for (std::uint32_t n = 1; n <= 20000; ++n) EXPECT_EQ(euler_phi(OrderN(n)), table[n]) << n;
}

TEST(EulerPhi, MultiplicativeOnCoprimePairs) {
  std::mt19937_64 rng(17);
  int pairs = 0;
  while (pairs < 1000) {
    const std::uint64_t m = rng() % 100000 + 1, n = rng() % 100000 + 1;
    if (std::gcd(m, n) != 1) continue;
    ++pairs;
    EXPECT_EQ(euler_phi(OrderN(m * n)), euler_phi(OrderN(m)) * euler_phi(OrderN(n))) << m << " " << n;
  }
}

TEST(PhiFloor, Examples) {
  EXPECT_TRUE(oracle::agrees(phi_floor(OrderN(31)), "8.3757386420400325036952273897709400115463660218615", 45));
  EXPECT_TRUE(oracle::agrees(phi_floor(OrderN(100)), "21.8267273672535384190166580767167434717890471142", 45));
  EXPECT_TRUE(oracle::agrees(phi_floor(OrderN(2310)), "376.15144429767109763126432172004660527789330666876", 45));
  EXPECT_TRUE(phi_floor(OrderN(31)).certainly_less(IntervalReal::from_int(30L)));
  EXPECT_TRUE(phi_floor(OrderN(2310)).certainly_less(IntervalReal::from_int(480L)));
  EXPECT_THROW(phi_floor(OrderN(30)), DomainError);
}

TEST(PhiFloor, HoldsUpTo100000) {
  const auto table = totient_table(100000);
  for (std::uint32_t n = 31; n <= 100000; ++n) {
    EXPECT_TRUE(phi_floor(OrderN(n), 64).certainly_less(IntervalReal::from_int(static_cast<long>(table[n]), 64)))
        << n;
  }
}
