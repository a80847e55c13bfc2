#include "special_locus/heights.hpp"

#include "special_locus/roots.hpp"

namespace special_locus {

HeightValue HeightValue::log_of(const BigInt& n, Precision precision) {
  if (n == 0) throw DomainError("height of log 0");
  const BigInt mag = abs(n);
  if (mag == 1) return exact_zero(precision);
  return {log(IntervalReal::from_int(mag, precision))};
}

namespace {

BigInt max_abs(const std::vector<BigInt>& coeffs) {
  BigInt best = 0;
  for (const auto& c : coeffs) {
    if (mpz_cmpabs(c.get_mpz_t(), best.get_mpz_t()) > 0) best = abs(c);
  }
  return best;
}

}  // namespace

HeightValue poly_height(const UniPoly& f, Precision precision) {
  const auto [c, prim] = content_primitive(f);
  return HeightValue::log_of(max_abs(prim.coeffs()), precision);
}

HeightValue poly_height(const BiPoly& f, Precision precision) {
  const auto [c, prim] = content_primitive(f);
  BigInt best = 0;
  for (int i = 0; i <= prim.deg_x(); ++i)
    for (int j = 0; j <= prim.deg_y(); ++j)
      if (mpz_cmpabs(prim.coeff(i, j).get_mpz_t(), best.get_mpz_t()) > 0) best = abs(prim.coeff(i, j));
  return HeightValue::log_of(best, precision);
}

HeightValue rational_height(const BigRat& q, Precision precision) {
  BigRat r = q;
  r.canonicalize();
  if (r == 0) return HeightValue::exact_zero(precision);
  const BigInt num = abs(r.get_num());
  const BigInt& den = r.get_den();
  return HeightValue::log_of(num > den ? num : den, precision);
}

IntervalReal mahler_measure(const UniPoly& f, Precision precision) {
  if (f.is_zero()) throw ZeroPolynomial("mahler_measure");
  const Precision work = precision + 16;
  IntervalReal m = IntervalReal::from_int(abs(content(f)), work);
  const IntervalReal one = IntervalReal::from_int(1L, work);
  for (const auto& [factor, multiplicity] : squarefree_decomposition(f)) {
    IntervalReal factor_measure = IntervalReal::from_int(abs(factor.leading()), work);
    for (const auto& root : isolate_roots(factor, work)) {
      factor_measure *= max(one, root.modulus());
    }
    m *= pow(factor_measure, static_cast<unsigned long>(multiplicity));
  }
  return with_precision(m, precision);
}

HeightValue algebraic_height(const UniPoly& minpoly, Precision precision) {
  if (minpoly.is_zero()) throw ZeroPolynomial("algebraic_height");
  if (minpoly.degree() < 1) throw ConstantPolynomial("algebraic_height");
  if (content(minpoly) != 1) throw DomainError("algebraic_height: minimal polynomial must be primitive");
  if (gcd(minpoly, minpoly.derivative()).degree() > 0) {
    throw DomainError("algebraic_height: polynomial has a repeated factor, so it is not irreducible");
  }
  const IntervalReal logm = log(mahler_measure(minpoly, precision + 8));
  IntervalReal h = logm / IntervalReal::from_int(static_cast<long>(minpoly.degree()), precision + 8);
  h = with_precision(h, precision);
  // M(f) >= 1 for integer f, so h >= 0.
  if (mpfr_sgn(h.lo().get()) < 0) {
    Mpfr lo(precision);
    h = IntervalReal(lo, mpfr_sgn(h.hi().get()) < 0 ? lo : h.hi());
  }
  return {std::move(h)};
}

MahlerGap mahler_height_gap(const UniPoly& f, Precision precision) {
  const auto [c, prim] = content_primitive(f);
  IntervalReal mahler = mahler_measure(prim, precision);
  const IntervalReal h = IntervalReal::from_int(max_abs(prim.coeffs()), precision);
  IntervalReal bound = sqrt(IntervalReal::from_int(static_cast<long>(prim.degree() + 1), precision)) * h;
  return {std::move(mahler), std::move(bound)};
}

}  // namespace special_locus
