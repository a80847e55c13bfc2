#include "special_locus/bounds.hpp"

#include <string>

namespace special_locus {

namespace {

constexpr Precision kGuard = 16;

IntervalReal num(long v, Precision p) { return IntervalReal::from_int(v, p); }

IntervalReal pow2(unsigned long e, Precision p) {
  return IntervalReal::from_int(BigInt(1) << e, p);
}

// log max(N, 2), with the max taken exactly.
IntervalReal log_max_n2(OrderN n, Precision p) {
  const std::uint64_t m = n.value() < 2 ? 2 : n.value();
  return log(IntervalReal::from_int(BigInt(static_cast<unsigned long>(m)), p));
}

IntervalReal rounded(const IntervalReal& x, Precision p) { return with_precision(x, p); }

}  // namespace

void CurveParams::validate() const {
  if (d < 1 || delta1 < 1 || delta2 < 1) {
    throw DomainError("curve parameters need d, delta1, delta2 >= 1");
  }
  if (height.value.certainly_negative()) throw DomainError("height must be nonnegative");
}

BoundReport theorem_bounds(const CurveParams& params, Precision precision) {
  params.validate();
  const Precision p = precision + kGuard;
  const IntervalReal d = num(params.d, p);
  const IntervalReal d2 = num(params.delta2, p);
  const IntervalReal h = with_precision(params.height.value, p);

  IntervalReal inner = d * h;
  if (params.d > 1) {
    inner += num((params.d - 1) * (params.delta1 + params.delta2), p) * log(num(2, p));
  }
  const IntervalReal height_term = max(inner, num(1, p));
  const IntervalReal c = pow2(36, p) * pow(d, 3) * pow(d2, 3) *
                         sqr(log(num(4 * params.d * params.delta2, p))) * height_term;
  const IntervalReal log_c = log(c);
  const IntervalReal disc = sqr(c * log_c / (d * d2));
  const IntervalReal order = c * sqr(log_c) * log(log_c);
  return {rounded(c, precision), rounded(disc, precision), rounded(order, precision)};
}

IntervalReal baker_wustholz_constant(long n, long d, Precision precision) {
  if (n < 1 || d < 1) throw DomainError("baker_wustholz_constant needs n, d >= 1");
  const Precision p = precision + kGuard;
  BigInt factorial = 1;
  for (long k = 2; k <= n + 1; ++k) factorial *= k;
  BigInt exact = 18 * factorial;
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n + 1));
  exact *= power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(32 * d), static_cast<unsigned long>(n + 2));
  exact *= power;
  return rounded(IntervalReal::from_int(exact, p) * log(num(2 * n * d, p)), precision);
}

IntervalReal distance_constant(Precision precision) {
  const Precision p = precision + kGuard;
  return rounded(pow2(25, p) * num(27, p) * pi(p) + num(1, p), precision);
}

IntervalReal mahler_constant_c1(Precision precision) {
  const Precision p = precision + kGuard;
  return rounded(num(4, p) / log(num(2, p)) * distance_constant(p), precision);
}

IntervalReal mahler_constant_c2(Precision precision) {
  const Precision p = precision + kGuard;
  return rounded(mahler_constant_c1(p) + num(6, p), precision);
}

IntervalReal distance_root_of_unity_bound(long d, const HeightValue& h_gamma, OrderN n,
                                          Precision precision) {
  if (d < 1) throw DomainError("distance bound needs d >= 1");
  const Precision p = precision + kGuard;
  const IntervalReal height = max(with_precision(h_gamma.value, p),
                                  IntervalReal::from_rat(BigRat(4, d), p));
  const IntervalReal value = distance_constant(p) * pow(num(d, p), 3) * log(num(4 * d, p)) *
                             height * log_max_n2(n, p);
  return rounded(-value, precision);
}

IntervalReal poly_root_of_unity_bound(long delta, const HeightValue& h_g, OrderN n,
                                      const PolyBoundForm& form, Precision precision) {
  if (delta < 0) throw DomainError("polynomial degree bound must be nonnegative");
  if (const auto* mf = std::get_if<MahlerForm>(&form)) {
    if (mpfr_cmp_ui(mf->mahler.hi().get(), 1) < 0) {
      throw DomainError("Mahler measure of a nonzero integer polynomial is at least 1");
    }
  }
  if (delta == 0) return IntervalReal(precision);
  const Precision p = precision + kGuard;
  const IntervalReal dd = sqr(num(delta, p));
  const IntervalReal log4d = log(num(4 * delta, p));
  IntervalReal value(p);
  if (const auto* mf = std::get_if<MahlerForm>(&form)) {
    value = mahler_constant_c2(p) * dd * log4d *
            log(num(2, p) * with_precision(mf->mahler, p)) * log_max_n2(n, p);
  } else {
    value = pow2(35, p) * dd * sqr(log4d) * max(with_precision(h_g.value, p), num(1, p)) *
            log_max_n2(n, p);
  }
  return rounded(-value, precision);
}

IntervalReal root_separation_bound(long n, const IntervalReal& mahler, Precision precision) {
  if (n < 2) throw DomainError("root separation needs degree >= 2");
  if (mpfr_cmp_ui(mahler.hi().get(), 1) < 0) throw DomainError("Mahler measure below 1");
  const Precision p = precision + kGuard;
  // n^(-(n+2)/2) = 1 / sqrt(n^(n+2))
  const IntervalReal scale = sqrt(pow(num(n, p), static_cast<unsigned long>(n + 2)));
  const IntervalReal m = with_precision(mahler, p);
  return rounded(sqrt(num(3, p)) / (scale * pow(m, static_cast<unsigned long>(n - 1))), precision);
}

IntervalReal class_number_upper_bound(Discriminant d, Precision precision) {
  const Precision p = precision + kGuard;
  const IntervalReal m = IntervalReal::from_int(BigInt(static_cast<long>(d.magnitude())), p);
  return rounded(sqrt(m) * (num(2, p) + log(m)) / pi(p), precision);
}

AuxSolution auxiliary_solve(const IntervalReal& a) {
  if (mpfr_cmp_ui(a.lo().get(), 10000) <= 0) {
    throw DomainError("auxiliary_solve requires A > 10^4");
  }
  const Precision precision = a.precision();
  const Precision p = precision + kGuard;
  const IntervalReal aa = with_precision(a, p);
  const IntervalReal log_a = log(aa);
  IntervalReal p_bound = num(2, p) * aa * log_a;
  IntervalReal q_bound = num(3, p) * aa * sqr(log_a) * log(log_a);
  return {a, rounded(p_bound, precision), rounded(q_bound, precision)};
}

IntervalReal ProofConstants::p_of(Discriminant d) const {
  const Precision p = a.precision();
  return num(12, p) / pi(p) * num(delta2, p) *
         sqrt(IntervalReal::from_int(BigInt(static_cast<long>(d.magnitude())), p));
}

IntervalReal ProofConstants::q_of(OrderN n) const {
  return IntervalReal::from_int(BigInt(static_cast<unsigned long>(n.value())) * 2, a.precision());
}

ProofConstants assemble_proof_constants(long delta2, const HeightValue& h_f, Precision precision) {
  if (delta2 < 1) throw DomainError("assemble_proof_constants needs delta2 >= 1");
  const Precision p = precision + kGuard;
  const IntervalReal value = num(4, p) / pi(p) * (pow2(35, p) + num(2, p)) *
                             pow(num(delta2, p), 3) * sqr(log(num(4 * delta2, p))) *
                             max(with_precision(h_f.value, p), num(1, p));
  return {delta2, rounded(value, precision)};
}

}  // namespace special_locus
