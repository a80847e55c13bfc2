#pragma once

#include <cstdint>
#include <vector>

#include "special_locus/numerics.hpp"
#include "special_locus/polynomials.hpp"

namespace special_locus {

// Discriminant of an imaginary quadratic order: D < 0, D = 0 or 1 mod 4.
class Discriminant {
 public:
  // Throws InvalidDiscriminant.
  explicit Discriminant(std::int64_t value);

  static bool is_valid(std::int64_t value) noexcept;

  std::int64_t value() const noexcept { return value_; }
  std::int64_t magnitude() const noexcept { return -value_; }

  friend bool operator==(Discriminant a, Discriminant b) { return a.value_ == b.value_; }

 private:
  std::int64_t value_;
};

// Reduced primitive positive definite form a x^2 + b xy + c y^2:
// |b| <= a <= c, b >= 0 when |b| = a or a = c, gcd(a, b, c) = 1.
struct ReducedForm {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 1;

  std::int64_t discriminant() const noexcept { return b * b - 4 * a * c; }
  // Im(tau) = sqrt(|D|) / (2a), tau = (-b + sqrt(D)) / (2a).
  IntervalReal imag_tau(Precision precision) const;

  friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
};

// Sorted by (a, b).
std::vector<ReducedForm> reduced_forms(Discriminant d);
long class_number(Discriminant d);

// j(tau) for the root tau of the form, from the q-expansion
//   j = E4(q)^3 / (q prod (1 - q^n)^24)
// with E4 = 1 + 240 sum sigma_3(n) q^n and prod (1 - q^n) by Euler's
// pentagonal series. Both truncation tails are bounded by geometric majorants
// and folded into the enclosure.
IntervalComplex eval_j(const ReducedForm& form, Precision precision);

struct ClassPolynomial {
  Discriminant d{-3};
  UniPoly poly;                         // monic, degree = class number
  Precision precision_used = 0;
  std::vector<ReducedForm> forms;       // one per root, same order as roots
  std::vector<IntervalComplex> roots;   // enclosures of j(tau_form)
  Mpfr rounding_margin{64};             // max distance of a coefficient endpoint to its integer
};

// Product of (X - j(tau_form)) over reduced forms, each coefficient enclosure
// certified to lie within 1/4 of the returned integer. Precision doubles from
// a coefficient-size estimate until certified; PrecisionExhausted past cap.
ClassPolynomial class_polynomial(Discriminant d, Precision cap = kDefaultPrecisionCap);
// Single attempt at a fixed precision; empty when the rounding is not certified.
std::optional<ClassPolynomial> class_polynomial_at(Discriminant d, Precision precision);
// Starting precision used by class_polynomial.
Precision class_polynomial_start_precision(Discriminant d);
// Process-wide memoized class_polynomial.
const ClassPolynomial& class_polynomial_cached(Discriminant d);

}  // namespace special_locus
