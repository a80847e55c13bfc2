#pragma once

// Certified evaluators for the explicit constants and inequalities that bound
// |D| and N for special points on a curve. Every function returns an
// enclosure; callers compare against the conservative endpoint (hi for upper
// bounds, lo for lower bounds).

#include <cstdint>
#include <variant>

#include "special_locus/arithmetic.hpp"
#include "special_locus/heights.hpp"
#include "special_locus/numerics.hpp"
#include "special_locus/quadratics.hpp"

namespace special_locus {

struct CurveParams {
  long d = 1;       // degree of the coefficient field
  long delta1 = 1;  // deg_X F
  long delta2 = 1;  // deg_Y F
  HeightValue height = HeightValue::exact_zero();

  // Throws DomainError unless d, delta1, delta2 >= 1 and height >= 0.
  void validate() const;
};

struct BoundReport {
  IntervalReal c;            // C = 2^36 d^3 d2^3 log(4 d d2)^2 max(d h + (d-1)(d1+d2) log 2, 1)
  IntervalReal disc_bound;   // (C log C / (d d2))^2 bounds |Delta|
  IntervalReal order_bound;  // C (log C)^2 log log C bounds N
};

BoundReport theorem_bounds(const CurveParams& params, Precision precision = kDefaultPrecision);

// 18 (n+1)! n^(n+1) (32 d)^(n+2) log(2 n d)
IntervalReal baker_wustholz_constant(long n, long d, Precision precision = kDefaultPrecision);

// c = c0 = 2^25 3^3 pi + 1
IntervalReal distance_constant(Precision precision = kDefaultPrecision);
// c1 = (4 / log 2) c0
IntervalReal mahler_constant_c1(Precision precision = kDefaultPrecision);
// c2 = c1 + 6
IntervalReal mahler_constant_c2(Precision precision = kDefaultPrecision);

// -c d^3 log(4d) max(h, 4/d) log max(N, 2): lower bound for log|lambda - gamma|
// with gamma algebraic of degree d, lambda an N-th root of unity, lambda != gamma.
IntervalReal distance_root_of_unity_bound(long d, const HeightValue& h_gamma, OrderN n,
                                          Precision precision = kDefaultPrecision);

struct FinalForm {};
struct MahlerForm {
  IntervalReal mahler;  // M(g) >= 1
};
using PolyBoundForm = std::variant<FinalForm, MahlerForm>;

// Lower bound for log|g(lambda)|, g in Z[X] of degree <= delta, g(lambda) != 0:
//   final:  -2^35 delta^2 log(4 delta)^2 max(h(g), 1) log max(N, 2)
//   mahler: -c2 delta^2 log(4 delta) log(2 M(g)) log max(N, 2)
// delta = 0 gives 0.
IntervalReal poly_root_of_unity_bound(long delta, const HeightValue& h_g, OrderN n,
                                      const PolyBoundForm& form,
                                      Precision precision = kDefaultPrecision);

// sqrt(3) n^(-(n+2)/2) M^(-(n-1)): lower bound on the distance between two
// distinct roots of a separable integer polynomial of degree n with Mahler measure M.
IntervalReal root_separation_bound(long n, const IntervalReal& mahler,
                                   Precision precision = kDefaultPrecision);

// (1/pi) sqrt|D| (2 + log|D|)
IntervalReal class_number_upper_bound(Discriminant d, Precision precision = kDefaultPrecision);

struct AuxSolution {
  IntervalReal a;
  IntervalReal p_bound;  // 2 A log A
  IntervalReal q_bound;  // 3 A (log A)^2 log log A
};

// For A > 10^4: p <= A log q and q / log log q <= p log p (p > 0, q > e)
// imply p < 2 A log A and q < 3 A (log A)^2 log log A.
AuxSolution auxiliary_solve(const IntervalReal& a);

struct ProofConstants {
  long delta2 = 1;
  IntervalReal a;  // (4/pi)(2^35 + 2) d2^3 log(4 d2)^2 max(h(F), 1)

  // p = (12/pi) d2 sqrt|D|
  IntervalReal p_of(Discriminant d) const;
  // q = 2N
  IntervalReal q_of(OrderN n) const;
};

ProofConstants assemble_proof_constants(long delta2, const HeightValue& h_f,
                                        Precision precision = kDefaultPrecision);

}  // namespace special_locus
