#pragma once

#include <cstdint>
#include <vector>

#include "special_locus/numerics.hpp"

namespace special_locus {

// Order of a root of unity; N >= 1.
class OrderN {
 public:
  explicit OrderN(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }

 private:
  std::uint64_t value_;
};

std::uint64_t euler_phi(OrderN n);
inline std::uint64_t euler_phi(std::uint64_t n) { return euler_phi(OrderN(n)); }

// phi(k) for every 0 <= k <= limit (phi(0) reported as 0).
std::vector<std::uint32_t> totient_table(std::uint32_t limit);

// Enclosure of N / (3 log log N); requires N > 30.
IntervalReal phi_floor(OrderN n, Precision precision = kDefaultPrecision);

}  // namespace special_locus
