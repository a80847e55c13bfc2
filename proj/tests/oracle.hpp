#pragma once

// Helpers for comparing certified enclosures against frozen decimal oracles.

#include <string>

#include "special_locus/numerics.hpp"

namespace oracle {

using special_locus::BigInt;
using special_locus::BigRat;
using special_locus::IntervalReal;

// Exact rational value of a decimal literal such as "-1.25e3".
inline BigRat decimal(const std::string& text) {
  std::string s = text;
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    exp10 = std::stol(s.substr(e + 1));
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    exp10 -= static_cast<long>(s.size() - dot - 1);
    s.erase(dot, 1);
  }
  BigRat value{BigInt(s, 10)};
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 < 0) value /= scale;
  else value *= scale;
  if (negative) value = -value;
  value.canonicalize();
  return value;
}

// True when x is consistent with the oracle to `digits` significant digits:
// x meets [v - t, v + t] and hi - lo <= t, where t = |v| 10^-digits.
inline bool agrees(const IntervalReal& x, const std::string& oracle_text, int digits) {
  const BigRat v = decimal(oracle_text);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const BigRat t = abs(v) / BigRat(scale);
  const BigRat lo = v - t;
  const BigRat hi = v + t;
  if (mpfr_cmp_q(x.hi().get(), lo.get_mpq_t()) < 0) return false;
  if (mpfr_cmp_q(x.lo().get(), hi.get_mpq_t()) > 0) return false;
  BigRat width;
  mpfr_get_q(width.get_mpq_t(), x.width().get());
  return width <= t;
}

}  // namespace oracle
