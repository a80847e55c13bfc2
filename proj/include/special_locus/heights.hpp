#pragma once

#include "special_locus/numerics.hpp"
#include "special_locus/polynomials.hpp"

namespace special_locus {

// Absolute logarithmic Weil height, natural-log scale.
struct HeightValue {
  IntervalReal value;

  static HeightValue exact_zero(Precision precision = kDefaultPrecision) {
    return {IntervalReal(precision)};
  }
  static HeightValue log_of(const BigInt& n, Precision precision = kDefaultPrecision);
};

// log max |c_i| of the primitive part (projective height of the coefficients).
HeightValue poly_height(const UniPoly& f, Precision precision = kDefaultPrecision);
HeightValue poly_height(const BiPoly& f, Precision precision = kDefaultPrecision);

// Height of a rational number a/b in lowest terms: log max(|a|, |b|).
HeightValue rational_height(const BigRat& q, Precision precision = kDefaultPrecision);

// Enclosure of |a_d| prod max(1, |root|) over all complex roots with multiplicity.
IntervalReal mahler_measure(const UniPoly& f, Precision precision = kDefaultPrecision);

// log M(f) / deg f for a minimal polynomial f.
HeightValue algebraic_height(const UniPoly& minpoly, Precision precision = kDefaultPrecision);

struct MahlerGap {
  IntervalReal mahler;  // M(f)
  IntervalReal bound;   // sqrt(deg f + 1) * H(f)
};

// Both sides of M(f) <= sqrt(deg f + 1) H(f), after normalizing f to its primitive part.
MahlerGap mahler_height_gap(const UniPoly& f, Precision precision = kDefaultPrecision);

}  // namespace special_locus
