#include "special_locus/arithmetic.hpp"

#include <string>

namespace special_locus {

OrderN::OrderN(std::uint64_t value) : value_(value) {
  if (value == 0) throw DomainError("order of a root of unity must be positive");
}

std::uint64_t euler_phi(OrderN order) {
  std::uint64_t n = order.value();
  std::uint64_t result = n;
  auto strip = [&](std::uint64_t p) {
    if (n % p != 0) return;
    while (n % p == 0) n /= p;
    result -= result / p;
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel
  for (std::uint64_t p = 5; p * p <= n; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint32_t> totient_table(std::uint32_t limit) {
  std::vector<std::uint32_t> phi(static_cast<std::size_t>(limit) + 1);
  for (std::uint32_t k = 0; k <= limit; ++k) phi[k] = k;
  for (std::uint32_t p = 2; p <= limit; ++p) {
    if (phi[p] != p) continue;  // composite
    for (std::uint32_t k = p; k <= limit; k += p) phi[k] -= phi[k] / p;
  }
  return phi;
}

IntervalReal phi_floor(OrderN n, Precision precision) {
  if (n.value() <= 30) {
    throw DomainError("phi_floor requires N > 30, got " + std::to_string(n.value()));
  }
  const IntervalReal big_n = IntervalReal::from_int(BigInt(static_cast<unsigned long>(n.value())), precision);
  return big_n / (IntervalReal::from_int(3L, precision) * log_log(big_n));
}

}  // namespace special_locus
