#include "special_locus/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "special_locus/bounds.hpp"
#include "special_locus/heights.hpp"

namespace special_locus {

ValidatedCurve validate_curve(const BiPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("curve");
  if (f.is_constant()) throw ConstantPolynomial("curve");
  BiPoly prim = content_primitive(f).second;
  const AxisLines lines = axis_line_factors(prim);
  if (lines.has_vertical) throw AxisLineFactor(AxisLineFactor::Kind::vertical);
  if (lines.has_horizontal) throw AxisLineFactor(AxisLineFactor::Kind::horizontal);
  ValidatedCurve out;
  out.delta1 = prim.deg_x();
  out.delta2 = prim.deg_y();
  out.poly = std::move(prim);
  return out;
}

namespace {

std::optional<UniPoly> certificate_from_resultant(const UniPoly& res, const UniPoly& class_poly) {
  // Res = 0 means Phi_N | F over Q(X)[Y], i.e. a horizontal line component.
  if (res.is_zero()) throw InternalError("resultant vanished identically on a validated curve");
  UniPoly g = gcd(res, class_poly);
  if (g.degree() < 1) return std::nullopt;
  return g;
}

}  // namespace

std::optional<UniPoly> membership_certificate(const BiPoly& f, const UniPoly& class_poly,
                                              OrderN n) {
  return certificate_from_resultant(resultant_y(f, cyclotomic(n.value())), class_poly);
}

std::optional<UniPoly> membership_certificate(const BiPoly& f, Discriminant d, OrderN n) {
  return membership_certificate(f, class_polynomial_cached(d).poly, n);
}

const char* to_string(WitnessStatus s) {
  return s == WitnessStatus::certified_pair_set ? "certified_pair_set" : "numeric_only";
}

namespace {

std::vector<std::uint64_t> primitive_residues(std::uint64_t n) {
  std::vector<std::uint64_t> ks;
  for (std::uint64_t k = 0; k < n; ++k) {
    if (std::gcd(k, n) == 1) ks.push_back(k);
  }
  return ks;
}

struct WitnessAttempt {
  std::vector<Witness> witnesses;
  bool all_certified = false;
};

WitnessAttempt witnesses_at(const BiPoly& f, const std::vector<ReducedForm>& forms, OrderN n,
                            int certificate_degree, Precision wp) {
  const auto ks = primitive_residues(n.value());
  std::vector<IntervalComplex> lambdas;
  lambdas.reserve(ks.size());
  for (auto k : ks) {
    lambdas.push_back(IntervalComplex::root_of_unity(static_cast<long>(k), static_cast<long>(n.value()), wp));
  }
  std::vector<IntervalComplex> alphas;
  alphas.reserve(forms.size());
  for (const auto& form : forms) alphas.push_back(eval_j(form, wp));

  bool disjoint = true;
  for (std::size_t i = 0; i < alphas.size() && disjoint; ++i)
    for (std::size_t k = i + 1; k < alphas.size(); ++k)
      if (alphas[i].overlaps(alphas[k])) {
        disjoint = false;
        break;
      }

  std::vector<std::vector<std::size_t>> candidates(forms.size());
  int flagged_alphas = 0;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t k = 0; k < ks.size(); ++k) {
      if (f.eval(alphas[i], lambdas[k]).contains_zero()) candidates[i].push_back(k);
    }
    if (!candidates[i].empty()) ++flagged_alphas;
  }
  const bool alpha_set_certified = disjoint && flagged_alphas == certificate_degree;

  WitnessAttempt out;
  out.all_certified = alpha_set_certified;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const bool unique = candidates[i].size() == 1;
    if (!candidates[i].empty() && !unique) out.all_certified = false;
    for (auto k : candidates[i]) {
      Witness w{forms[i], ks[k], alphas[i], lambdas[k],
                alpha_set_certified && unique ? WitnessStatus::certified_pair_set
                                              : WitnessStatus::numeric_only};
      out.witnesses.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace

std::vector<Witness> locate_witnesses(const BiPoly& f, const ClassPolynomial& class_poly, OrderN n,
                                      const UniPoly& certificate, Precision precision) {
  // Enough bits beyond the magnitude of j for the requested relative accuracy.
  Precision wp = class_poly.precision_used + precision;
  WitnessAttempt best = witnesses_at(f, class_poly.forms, n, certificate.degree(), wp);
  for (int retry = 0; retry < 2 && !best.all_certified; ++retry) {
    wp *= 2;
    WitnessAttempt next = witnesses_at(f, class_poly.forms, n, certificate.degree(), wp);
    best = std::move(next);
  }
  return std::move(best.witnesses);
}

std::vector<Discriminant> discriminants_up_to(std::int64_t max_disc) {
  std::vector<Discriminant> out;
  for (std::int64_t m = 3; m <= max_disc; ++m) {
    if (Discriminant::is_valid(-m)) out.emplace_back(-m);
  }
  return out;
}

namespace {

class ResultantTable {
 public:
  ResultantTable(const BiPoly& f, std::uint64_t max_order)
      : f_(f), flags_(max_order + 1), values_(max_order + 1) {}

  const UniPoly& get(std::uint64_t n) {
    std::call_once(flags_[n], [&] { values_[n] = resultant_y(f_, cyclotomic(n)); });
    return values_[n];
  }

 private:
  const BiPoly& f_;
  std::vector<std::once_flag> flags_;
  std::vector<UniPoly> values_;
};

struct PerDiscriminant {
  std::vector<SpecialPointHit> hits;
  std::optional<FlaggedDiscriminant> flagged;
  std::exception_ptr error;
};

PerDiscriminant scan_discriminant(const ValidatedCurve& curve, Discriminant d,
                                  const SearchConfig& config, ResultantTable& table) {
  PerDiscriminant out;
  try {
    const ClassPolynomial& cp = class_polynomial_cached(d);
    const std::uint64_t budget =
        static_cast<std::uint64_t>(curve.delta2) * static_cast<std::uint64_t>(cp.poly.degree());
    for (std::uint64_t n = 1; n <= config.max_order; ++n) {
      if (config.prune && euler_phi(n) > budget) continue;
      auto cert = certificate_from_resultant(table.get(n), cp.poly);
      if (!cert) continue;
      SpecialPointHit hit;
      hit.d = d;
      hit.n = n;
      hit.witnesses = locate_witnesses(curve.poly, cp, OrderN(n), *cert, config.precision);
      hit.certificate = std::move(*cert);
      out.hits.push_back(std::move(hit));
    }
  } catch (const PrecisionExhausted& e) {
    out.hits.clear();
    out.flagged = FlaggedDiscriminant{d.value(), e.what()};
  } catch (...) {
    out.error = std::current_exception();
  }
  return out;
}

}  // namespace

SearchResult search_special_points(const SearchConfig& config) {
  if (config.max_disc < 0) throw DomainError("max_disc must be nonnegative");
  const ValidatedCurve curve = validate_curve(config.curve);
  const auto discs = discriminants_up_to(config.max_disc);
  ResultantTable table(curve.poly, config.max_order);

  std::vector<PerDiscriminant> slots(discs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < discs.size(); i = next++) {
      slots[i] = scan_discriminant(curve, discs[i], config, table);
    }
  };
  const unsigned workers = std::max(1u, config.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SearchResult result;
  for (auto& slot : slots) {
    if (slot.error) std::rethrow_exception(slot.error);
    for (auto& hit : slot.hits) result.hits.push_back(std::move(hit));
    if (slot.flagged) result.flagged.push_back(std::move(*slot.flagged));
  }
  return result;
}

LeadingCoefficient leading_nonvanishing_coefficient(const BiPoly& f, OrderN n) {
  const UniPoly& phi = cyclotomic(n.value());
  for (int i = f.deg_x(); i >= 0; --i) {
    UniPoly g = f.coeff_in_x(static_cast<std::size_t>(i));
    if (g.is_zero()) continue;
    if (!divide_exact(g, phi)) return {i, std::move(g)};
  }
  throw InternalError("every X-coefficient of the curve vanishes at the primitive " +
                      std::to_string(n.value()) + "-th roots of unity");
}

bool TraceReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const TraceCheck& c) { return c.status == Certainty::holds; });
}

const TraceCheck* TraceReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

// a < b
Certainty less(const IntervalReal& a, const IntervalReal& b) {
  if (a.certainly_less(b)) return Certainty::holds;
  if (b.certainly_less_eq(a)) return Certainty::violated;
  return Certainty::indeterminate;
}

// a <= b
Certainty less_eq(const IntervalReal& a, const IntervalReal& b) {
  if (a.certainly_less_eq(b)) return Certainty::holds;
  if (b.certainly_less(a)) return Certainty::violated;
  return Certainty::indeterminate;
}

Certainty all_of(const std::vector<Certainty>& cs) {
  if (cs.empty()) return Certainty::indeterminate;
  Certainty out = Certainty::holds;
  for (auto c : cs) {
    if (c == Certainty::violated) return Certainty::violated;
    if (c == Certainty::indeterminate) out = Certainty::indeterminate;
  }
  return out;
}

std::string show(const IntervalReal& x) { return x.to_string(12); }

IntervalReal ival(std::uint64_t v, Precision p) {
  return IntervalReal::from_int(BigInt(static_cast<unsigned long>(v)), p);
}

class TraceBuilder {
 public:
  explicit TraceBuilder(TraceReport& report) : report_(report) {}

  void add(std::string name, Certainty status, std::string detail) {
    report_.checks.push_back({std::move(name), status, std::move(detail)});
  }
  void add_less(std::string name, const std::string& lhs_label, const IntervalReal& lhs,
                const std::string& rhs_label, const IntervalReal& rhs) {
    add(std::move(name), less(lhs, rhs),
        lhs_label + " = " + show(lhs) + " < " + rhs_label + " = " + show(rhs));
  }
  void add_less_eq(std::string name, const std::string& lhs_label, const IntervalReal& lhs,
                   const std::string& rhs_label, const IntervalReal& rhs) {
    add(std::move(name), less_eq(lhs, rhs),
        lhs_label + " = " + show(lhs) + " <= " + rhs_label + " = " + show(rhs));
  }

 private:
  TraceReport& report_;
};

}  // namespace

TraceReport proof_trace(const SpecialPointHit& hit, const BiPoly& f, Precision precision) {
  const ValidatedCurve curve = validate_curve(f);
  const Precision p = precision;
  const long delta2 = curve.delta2;
  const Discriminant d = hit.d;
  const OrderN n(hit.n);
  const ClassPolynomial& cp = class_polynomial_cached(d);
  const long h = cp.poly.degree();
  const std::uint64_t phi_n = euler_phi(n);
  const HeightValue h_f = poly_height(curve.poly, p);
  const IntervalReal abs_disc = IntervalReal::from_int(BigInt(static_cast<long>(d.magnitude())), p);

  TraceReport report;
  report.d = d.value();
  report.n = n.value();
  report.large_branch = d.magnitude() >= 25;
  TraceBuilder tb(report);

  {
    std::ostringstream os;
    os << "phi(N) = " << phi_n << " <= delta2 * h(D) = " << delta2 * h;
    tb.add("phi_class_number", phi_n <= static_cast<std::uint64_t>(delta2 * h) ? Certainty::holds
                                                                               : Certainty::violated,
           os.str());
  }
  tb.add_less_eq("class_number_bound", "h(D)", IntervalReal::from_int(h, p), "sqrt|D|(2+log|D|)/pi",
                 class_number_upper_bound(d, p));

  CurveParams params;
  params.delta1 = curve.delta1;
  params.delta2 = delta2;
  params.height = h_f;
  const BoundReport bounds = theorem_bounds(params, p);
  tb.add_less("disc_within_bound", "|D|", abs_disc, "disc_bound", bounds.disc_bound);
  tb.add_less("order_within_bound", "N", ival(n.value(), p), "order_bound", bounds.order_bound);

  if (n.value() > 30) {
    const IntervalReal floor = phi_floor(n, p);
    tb.add_less("phi_floor", "N/(3 log log N)", floor, "phi(N)", ival(phi_n, p));
  }

  if (!report.large_branch) {
    if (n.value() > 30) {
      tb.add_less("sqrt_order_below_phi_floor", "sqrt N", sqrt(ival(n.value(), p)), "N/(3 log log N)",
                  phi_floor(n, p));
      tb.add_less("small_branch_order", "N", ival(n.value(), p), "81 delta2^2",
                  IntervalReal::from_int(81 * delta2 * delta2, p));
    }
    return report;
  }

  // Principal form: a = 1, Im tau = sqrt|D| / 2.
  const ReducedForm principal = cp.forms.front();
  const Precision wp = cp.precision_used + p;
  const IntervalComplex alpha = eval_j(principal, wp);
  const IntervalReal abs_alpha = with_precision(abs(alpha), p);
  const IntervalReal log_alpha = log(abs_alpha);
  const IntervalReal two_pi_im = IntervalReal::from_int(2L, p) * pi(p) * principal.imag_tau(p);
  const IntervalReal ratio = abs_alpha / exp(two_pi_im);
  {
    const IntervalReal half = IntervalReal::from_rat(BigRat(1, 2), p);
    const IntervalReal two = IntervalReal::from_int(2L, p);
    Certainty c = Certainty::indeterminate;
    if (half.certainly_less_eq(ratio) && ratio.certainly_less_eq(two)) c = Certainty::holds;
    if (ratio.certainly_less(half) || two.certainly_less(ratio)) c = Certainty::violated;
    tb.add("alpha_growth", c, "|alpha| / exp(2 pi Im tau) = " + show(ratio) + " in [1/2, 2]");
  }
  const IntervalReal three_sqrt = IntervalReal::from_int(3L, p) * sqrt(abs_disc);
  tb.add_less("disc_below_log_alpha", "3 sqrt|D|", three_sqrt, "log|alpha|", log_alpha);

  const LeadingCoefficient lead = leading_nonvanishing_coefficient(curve.poly, n);
  report.m = lead.m;
  {
    std::ostringstream os;
    os << "g_" << lead.m << " is not divisible by Phi_" << n.value();
    tb.add("g_m_nonvanishing", Certainty::holds, os.str());
  }

  std::vector<IntervalComplex> lambdas;
  for (auto k : primitive_residues(n.value())) {
    IntervalComplex lam = IntervalComplex::root_of_unity(static_cast<long>(k),
                                                         static_cast<long>(n.value()), wp);
    if (curve.poly.eval(alpha, lam).contains_zero()) lambdas.push_back(std::move(lam));
  }
  if (lambdas.empty()) {
    tb.add("lambda_located", Certainty::indeterminate,
           "no primitive root of unity box pairs with the principal alpha");
    return report;
  }
  tb.add("lambda_located", Certainty::holds,
         std::to_string(lambdas.size()) + " candidate root(s) of unity");

  BigInt height_int = 1;
  for (int i = 0; i <= curve.poly.deg_x(); ++i)
    for (int j = 0; j <= curve.poly.deg_y(); ++j)
      if (mpz_cmpabs(curve.poly.coeff(i, j).get_mpz_t(), height_int.get_mpz_t()) > 0)
        height_int = abs(curve.poly.coeff(i, j));

  const IntervalReal one = IntervalReal::from_int(1L, p);
  const IntervalReal alpha_minus_one = abs_alpha - one;
  const IntervalReal upper =
      IntervalReal::from_int((delta2 + 1) * height_int, p) /
      (alpha_minus_one.certainly_positive() ? alpha_minus_one : one);
  const IntervalReal log_upper = log(IntervalReal::from_int(4 * delta2, p)) + h_f.value - log_alpha;
  const IntervalReal lower = poly_root_of_unity_bound(delta2, h_f, n, FinalForm{}, p);

  std::vector<Certainty> c_upper, c_log_upper, c_lower;
  IntervalReal gm_abs_hull(p);
  bool first = true;
  for (const auto& lam : lambdas) {
    const IntervalReal gm_abs = with_precision(abs(lead.g_m.eval(lam)), p);
    gm_abs_hull = first ? gm_abs : hull(gm_abs_hull, gm_abs);
    first = false;
    c_upper.push_back(alpha_minus_one.certainly_positive() ? less(gm_abs, upper)
                                                           : Certainty::indeterminate);
    if (gm_abs.certainly_positive()) {
      const IntervalReal lg = log(gm_abs);
      c_log_upper.push_back(less(lg, log_upper));
      c_lower.push_back(less(lower, lg));
    } else {
      c_log_upper.push_back(Certainty::indeterminate);
      c_lower.push_back(Certainty::indeterminate);
    }
  }
  tb.add("g_m_upper_bound", all_of(c_upper),
         "|g_m(lambda)| = " + show(gm_abs_hull) + " < (delta2+1) H(F) / (|alpha|-1) = " + show(upper));
  tb.add("g_m_log_upper_bound", all_of(c_log_upper),
         "log|g_m(lambda)| < log(4 delta2) + h(F) - log|alpha| = " + show(log_upper));
  tb.add("g_m_log_lower_bound", all_of(c_lower),
         "log|g_m(lambda)| > " + show(lower));
  tb.add_less("disc_against_order", "3 sqrt|D|", three_sqrt, "log(4 delta2) + h(F) - lower",
              log(IntervalReal::from_int(4 * delta2, p)) + h_f.value - lower);

  if (n.value() > 30) {
    const ProofConstants pc = assemble_proof_constants(delta2, h_f, p);
    const IntervalReal pp = pc.p_of(d);
    const IntervalReal qq = pc.q_of(n);
    tb.add_less_eq("aux_hypothesis_p", "p", pp, "A log q", pc.a * log(qq));
    tb.add_less_eq("aux_hypothesis_q", "q / log log q", qq / log_log(qq), "p log p", pp * log(pp));
    if (mpfr_cmp_ui(pc.a.lo().get(), 10000) > 0) {
      const AuxSolution aux = auxiliary_solve(pc.a);
      tb.add_less("aux_conclusion_p", "p", pp, "2 A log A", aux.p_bound);
      tb.add_less("aux_conclusion_q", "q", qq, "3 A (log A)^2 log log A", aux.q_bound);
    }
  }
  return report;
}

}  // namespace special_locus
