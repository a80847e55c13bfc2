#pragma once

// Exact integers/rationals (GMP) and certified interval arithmetic on MPFR
// endpoints. Every operation rounds the lower endpoint toward -inf and the
// upper endpoint toward +inf, so the true value always stays enclosed.

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>

#include "special_locus/error.hpp"

namespace special_locus {

using BigInt = mpz_class;
using BigRat = mpq_class;
using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 256;
inline constexpr Precision kDefaultPrecisionCap = Precision{1} << 16;

// Owning MPFR scalar. Values are immutable once handed out by IntervalReal.
class Mpfr {
 public:
  explicit Mpfr(Precision precision = kDefaultPrecision);
  Mpfr(const Mpfr& other);
  Mpfr(Mpfr&& other) noexcept;
  Mpfr& operator=(const Mpfr& other);
  Mpfr& operator=(Mpfr&& other) noexcept;
  ~Mpfr();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  Precision precision() const noexcept { return mpfr_get_prec(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

 private:
  mpfr_t value_;
};

// Shortest decimal string that reads back (round-to-nearest, same precision)
// to exactly this binary value.
std::string to_decimal(const Mpfr& value);
// Short human-readable rendering with the given number of significant digits.
std::string to_decimal(const Mpfr& value, int digits);
Mpfr parse_decimal(const std::string& text, Precision precision);

class IntervalReal {
 public:
  explicit IntervalReal(Precision precision = kDefaultPrecision);
  IntervalReal(Mpfr lo, Mpfr hi);

  static IntervalReal from_int(long value, Precision precision = kDefaultPrecision);
  static IntervalReal from_int(const BigInt& value, Precision precision = kDefaultPrecision);
  static IntervalReal from_rat(const BigRat& value, Precision precision = kDefaultPrecision);
  static IntervalReal from_double(double value, Precision precision = kDefaultPrecision);
  static IntervalReal hull(const BigRat& a, const BigRat& b,
                           Precision precision = kDefaultPrecision);

  const Mpfr& lo() const noexcept { return lo_; }
  const Mpfr& hi() const noexcept { return hi_; }
  Precision precision() const noexcept { return precision_; }

  double lo_double() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }
  double mid_double() const;

  // Upper bound on hi - lo.
  Mpfr width() const;
  // Midpoint (round to nearest) and a radius r with [lo, hi] inside [m - r, m + r].
  std::pair<Mpfr, Mpfr> mid_rad() const;

  bool contains(const BigRat& value) const;
  bool contains(const IntervalReal& other) const;
  bool contains_zero() const;
  bool is_point() const;
  bool certainly_positive() const;  // lo > 0
  bool certainly_negative() const;  // hi < 0
  bool certainly_less(const IntervalReal& other) const;     // hi < other.lo
  bool certainly_less_eq(const IntervalReal& other) const;  // hi <= other.lo
  bool overlaps(const IntervalReal& other) const;

  // Nearest integer n with [lo, hi] strictly inside (n - 1/4, n + 1/4), if any.
  std::optional<BigInt> certified_integer() const;

  IntervalReal operator-() const;
  IntervalReal& operator+=(const IntervalReal& rhs);
  IntervalReal& operator-=(const IntervalReal& rhs);
  IntervalReal& operator*=(const IntervalReal& rhs);
  IntervalReal& operator/=(const IntervalReal& rhs);

  std::string to_string(int digits = 20) const;

 private:
  Mpfr lo_;
  Mpfr hi_;
  Precision precision_;
};

IntervalReal operator+(IntervalReal a, const IntervalReal& b);
IntervalReal operator-(IntervalReal a, const IntervalReal& b);
IntervalReal operator*(IntervalReal a, const IntervalReal& b);
IntervalReal operator/(IntervalReal a, const IntervalReal& b);

// Outward rounding to a new precision (exact when widening the precision).
IntervalReal with_precision(const IntervalReal& x, Precision precision);

IntervalReal sqr(const IntervalReal& x);
IntervalReal pow(const IntervalReal& x, unsigned long n);
IntervalReal abs(const IntervalReal& x);
IntervalReal max(const IntervalReal& a, const IntervalReal& b);
IntervalReal min(const IntervalReal& a, const IntervalReal& b);
IntervalReal hull(const IntervalReal& a, const IntervalReal& b);
// Empty intersection raises DomainError.
IntervalReal intersect(const IntervalReal& a, const IntervalReal& b);

IntervalReal sqrt(const IntervalReal& x);
IntervalReal log(const IntervalReal& x);
IntervalReal log_log(const IntervalReal& x);
IntervalReal exp(const IntervalReal& x);
IntervalReal cos(const IntervalReal& x);
IntervalReal sin(const IntervalReal& x);
IntervalReal pi(Precision precision = kDefaultPrecision);
// cos(pi * r), sin(pi * r) for exact rational r, reduced exactly before rounding.
IntervalReal cos_pi(const BigRat& r, Precision precision);
IntervalReal sin_pi(const BigRat& r, Precision precision);

enum class ElementaryKind { log, exp, sqrt, loglog, pi_const };

IntervalReal interval_elementary(ElementaryKind kind, const IntervalReal& x,
                                 Precision precision);

class IntervalComplex {
 public:
  explicit IntervalComplex(Precision precision = kDefaultPrecision);
  IntervalComplex(IntervalReal re, IntervalReal im);

  static IntervalComplex from_int(const BigInt& re, Precision precision = kDefaultPrecision);
  static IntervalComplex from_rat(const BigRat& re, const BigRat& im,
                                  Precision precision = kDefaultPrecision);
  // exp(2*pi*i*k/n), with the angle reduced exactly.
  static IntervalComplex root_of_unity(long k, long n, Precision precision);
  // exp(pi*i*r) for rational r.
  static IntervalComplex cis_pi(const BigRat& r, Precision precision);

  const IntervalReal& re() const noexcept { return re_; }
  const IntervalReal& im() const noexcept { return im_; }
  Precision precision() const noexcept;

  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  bool overlaps(const IntervalComplex& other) const;
  // Upper bound on the half-diagonal of the rectangle.
  Mpfr radius() const;

  IntervalComplex operator-() const;
  IntervalComplex& operator+=(const IntervalComplex& rhs);
  IntervalComplex& operator-=(const IntervalComplex& rhs);
  IntervalComplex& operator*=(const IntervalComplex& rhs);
  IntervalComplex& operator/=(const IntervalComplex& rhs);

  // Widen both components by +-r (r >= 0).
  IntervalComplex inflate(const Mpfr& r) const;

  std::string to_string(int digits = 20) const;

 private:
  IntervalReal re_;
  IntervalReal im_;
};

IntervalComplex operator+(IntervalComplex a, const IntervalComplex& b);
IntervalComplex operator-(IntervalComplex a, const IntervalComplex& b);
IntervalComplex operator*(IntervalComplex a, const IntervalComplex& b);
IntervalComplex operator*(const IntervalReal& a, const IntervalComplex& b);
IntervalComplex operator/(IntervalComplex a, const IntervalComplex& b);

IntervalComplex conj(const IntervalComplex& z);
IntervalReal abs_sq(const IntervalComplex& z);
IntervalReal abs(const IntervalComplex& z);
IntervalComplex exp(const IntervalComplex& z);
IntervalComplex pow(const IntervalComplex& z, unsigned long n);

enum class ComplexOp { add, mul, div, exp };

IntervalComplex interval_complex_arith(ComplexOp op, const IntervalComplex& a,
                                       const IntervalComplex* b = nullptr);

// Three-valued outcome of a certified comparison.
enum class Certainty { holds, violated, indeterminate };

const char* to_string(Certainty c);

// Runs attempt(precision) at start, 2*start, ... up to cap; attempt returns an
// empty optional when the enclosure is too wide to decide.
template <class Attempt>
auto with_precision_retry(Precision start, Precision cap, Attempt&& attempt,
                          const std::string& what = "computation")
    -> typename decltype(attempt(Precision{}))::value_type {
  for (Precision p = start; p <= cap; p *= 2) {
    if (auto result = attempt(p)) return std::move(*result);
  }
  throw PrecisionExhausted(what + ": undecided at precision cap " + std::to_string(cap) +
                           " bits");
}

}  // namespace special_locus
