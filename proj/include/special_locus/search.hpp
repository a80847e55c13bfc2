#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "special_locus/arithmetic.hpp"
#include "special_locus/numerics.hpp"
#include "special_locus/polynomials.hpp"
#include "special_locus/quadratics.hpp"

namespace special_locus {

struct ValidatedCurve {
  BiPoly poly;  // primitive
  int delta1 = 0;
  int delta2 = 0;
};

// Primitive normalization plus rejection of constants (ConstantPolynomial)
// and of vertical/horizontal line components (AxisLineFactor).
ValidatedCurve validate_curve(const BiPoly& f);

// gcd(Res_Y(F, Phi_N), H_D) when nonconstant. Because Phi_N is monic,
// Res_Y(F, Phi_N)(x0) = +-prod_{Phi_N(l) = 0} F(x0, l) holds even where the
// Y-leading coefficient of F vanishes, so a nonconstant gcd is equivalent to
// F(alpha, lambda) = 0 for some root alpha of H_D and primitive N-th root lambda.
std::optional<UniPoly> membership_certificate(const BiPoly& f, const UniPoly& class_poly,
                                              OrderN n);
std::optional<UniPoly> membership_certificate(const BiPoly& f, Discriminant d, OrderN n);

enum class WitnessStatus { certified_pair_set, numeric_only };

const char* to_string(WitnessStatus s);

struct Witness {
  ReducedForm form;         // alpha = j(tau_form)
  std::uint64_t lambda_k;   // lambda = exp(2 pi i k / N)
  IntervalComplex alpha;
  IntervalComplex lambda;
  WitnessStatus status = WitnessStatus::numeric_only;
};

struct SpecialPointHit {
  Discriminant d{-3};
  std::uint64_t n = 1;
  UniPoly certificate;
  std::vector<Witness> witnesses;
};

// Interval boxes (alpha, lambda) with 0 in F(alpha, lambda). A witness is
// certified_pair_set when the flagged alpha boxes are disjoint and exactly
// deg(certificate) in number, and its alpha box pairs with a single lambda box.
std::vector<Witness> locate_witnesses(const BiPoly& f, const ClassPolynomial& class_poly, OrderN n,
                                      const UniPoly& certificate, Precision precision);

struct SearchConfig {
  BiPoly curve;
  std::int64_t max_disc = 30;   // cap on |D|
  std::uint64_t max_order = 10; // cap on N
  Precision precision = kDefaultPrecision;
  unsigned workers = 1;
  bool prune = true;            // skip N with phi(N) > delta2 * h(D)
};

struct FlaggedDiscriminant {
  std::int64_t d;
  std::string reason;
};

struct SearchResult {
  std::vector<SpecialPointHit> hits;  // sorted by (|D|, N)
  std::vector<FlaggedDiscriminant> flagged;
};

SearchResult search_special_points(const SearchConfig& config);

// All valid discriminants with |D| <= max_disc, in order of |D|.
std::vector<Discriminant> discriminants_up_to(std::int64_t max_disc);

struct LeadingCoefficient {
  int m = 0;
  UniPoly g_m;  // in Y
};

// Largest i with Phi_N not dividing g_i, for F = sum_i g_i(Y) X^i.
LeadingCoefficient leading_nonvanishing_coefficient(const BiPoly& f, OrderN n);

struct TraceCheck {
  std::string name;
  Certainty status = Certainty::indeterminate;
  std::string detail;
};

struct TraceReport {
  std::int64_t d = 0;
  std::uint64_t n = 1;
  bool large_branch = false;  // |D| >= 25
  std::optional<int> m;       // index of g_m, large branch only
  std::vector<TraceCheck> checks;

  bool all_hold() const;
  const TraceCheck* find(const std::string& name) const;
};

// Re-verifies the inequality chain behind the bound for one hit, using the
// conjugate pair whose alpha is j of the principal form.
TraceReport proof_trace(const SpecialPointHit& hit, const BiPoly& f,
                        Precision precision = kDefaultPrecision);

}  // namespace special_locus
