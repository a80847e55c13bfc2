#include "special_locus/verify.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "special_locus/arithmetic.hpp"
#include "special_locus/bounds.hpp"
#include "special_locus/heights.hpp"
#include "special_locus/polynomials.hpp"
#include "special_locus/quadratics.hpp"
#include "special_locus/roots.hpp"

namespace special_locus {

namespace {

struct SuiteName {
  Suite suite;
  const char* name;
};

constexpr SuiteName kSuites[] = {
    {Suite::lemma22, "lemma22"},   {Suite::lemma23, "lemma23"}, {Suite::separation, "separation"},
    {Suite::aux, "aux"},           {Suite::phi, "phi"},         {Suite::classnum, "classnum"},
};

constexpr std::size_t kMaxCounterexamples = 5;

}  // namespace

Suite parse_suite(std::string_view name) {
  for (const auto& s : kSuites)
    if (name == s.name) return s.suite;
  throw UnknownSuite(std::string(name));
}

const char* to_string(Suite s) {
  for (const auto& entry : kSuites)
    if (entry.suite == s) return entry.name;
  return "?";
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites = [] {
    std::vector<Suite> out;
    for (const auto& s : kSuites) out.push_back(s.suite);
    return out;
  }();
  return suites;
}

long default_samples(Suite s) {
  switch (s) {
    case Suite::lemma22: return 10000;
    case Suite::lemma23: return 1000;
    case Suite::separation: return 500;
    case Suite::aux: return 200;
    case Suite::phi: return 1000000;
    case Suite::classnum: return 100000;
  }
  return 0;
}

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw DomainError("draw: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());  // full 64-bit range
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

namespace {

class Tally {
 public:
  explicit Tally(VerifyReport& report) : report_(report) {}

  void record(Certainty c, const std::string& what) {
    switch (c) {
      case Certainty::holds: ++report_.checked; return;
      case Certainty::violated: ++report_.violations; break;
      case Certainty::indeterminate: ++report_.undecided; break;
    }
    if (report_.counterexamples.size() < kMaxCounterexamples) {
      report_.counterexamples.push_back(std::string(to_string(c)) + ": " + what);
    }
  }
  void skip() { ++report_.skipped; }

 private:
  VerifyReport& report_;
};

// lower < value
Certainty below(const IntervalReal& lower, const IntervalReal& value) {
  if (lower.certainly_less(value)) return Certainty::holds;
  if (value.certainly_less_eq(lower)) return Certainty::violated;
  return Certainty::indeterminate;
}

// Re-runs the comparison at doubled precision while undecided.
template <class Compare>
Certainty decide(Precision p, Compare&& compare) {
  Certainty c = Certainty::indeterminate;
  for (int attempt = 0; attempt < 4 && c == Certainty::indeterminate; ++attempt, p *= 2) {
    c = compare(p);
  }
  return c;
}

IntervalReal log_abs(const IntervalComplex& z) {
  const IntervalReal sq = abs_sq(z);
  if (!sq.certainly_positive()) throw DomainError("log of a modulus that may vanish");
  return log(sq) / IntervalReal::from_int(2L, sq.precision());
}

struct RootOfUnity {
  std::int64_t n;
  std::int64_t k;
};

RootOfUnity draw_root_of_unity(std::mt19937_64& rng, std::int64_t max_order) {
  const std::int64_t n = draw(rng, 1, max_order);
  std::vector<std::int64_t> ks;
  for (std::int64_t k = 0; k < n; ++k)
    if (std::gcd(k, n) == 1) ks.push_back(k);
  return {n, ks[static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(ks.size()) - 1))]};
}

std::string describe(const RootOfUnity& r) {
  return "lambda = exp(2 pi i " + std::to_string(r.k) + "/" + std::to_string(r.n) + ")";
}

UniPoly draw_poly(std::mt19937_64& rng, int degree, std::int64_t bound) {
  std::vector<BigInt> coeffs;
  for (int i = 0; i < degree; ++i) coeffs.emplace_back(static_cast<long>(draw(rng, -bound, bound)));
  std::int64_t lead = 0;
  while (lead == 0) lead = draw(rng, -bound, bound);
  coeffs.emplace_back(static_cast<long>(lead));
  return UniPoly(std::move(coeffs));
}

void distance_rational(std::mt19937_64& rng, Precision p, Tally& tally) {
  const std::int64_t a = draw(rng, -1000, 1000);
  const std::int64_t b = draw(rng, 1, 1000);
  const RootOfUnity lam = draw_root_of_unity(rng, 50);
  BigRat gamma(static_cast<long>(a), static_cast<long>(b));
  gamma.canonicalize();
  if ((lam.n == 1 && gamma == 1) || (lam.n == 2 && gamma == -1)) {
    tally.skip();
    return;
  }
  const Certainty c = decide(p, [&](Precision wp) {
    const IntervalComplex l = IntervalComplex::root_of_unity(lam.k, lam.n, wp);
    const IntervalReal value = log_abs(l - IntervalComplex::from_rat(gamma, BigRat(0), wp));
    const IntervalReal bound =
        distance_root_of_unity_bound(1, rational_height(gamma, wp), OrderN(lam.n), wp);
    return below(bound, value);
  });
  tally.record(c, "gamma = " + gamma.get_str() + ", " + describe(lam));
}

void distance_quadratic(std::mt19937_64& rng, Precision p, Tally& tally) {
  std::int64_t a, b, c, disc;
  for (;;) {
    a = draw(rng, 1, 50);
    b = draw(rng, -50, 50);
    c = draw(rng, -50, 50);
    disc = b * b - 4 * a * c;
    if (disc == 0) continue;
    if (disc > 0) {
      const auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(disc)));
      bool square = false;
      for (std::int64_t s = r > 0 ? r - 1 : 0; s <= r + 1; ++s) square = square || s * s == disc;
      if (square) continue;
    }
    break;
  }
  const bool plus = draw(rng, 0, 1) == 1;
  const RootOfUnity lam = draw_root_of_unity(rng, 50);
  const UniPoly minpoly = primitive_part(UniPoly{static_cast<long>(c), static_cast<long>(b), static_cast<long>(a)});

  auto gamma_at = [&](Precision wp) {
    const IntervalReal two_a = IntervalReal::from_int(static_cast<long>(2 * a), wp);
    const IntervalReal root = sqrt(IntervalReal::from_int(static_cast<long>(disc < 0 ? -disc : disc), wp));
    const IntervalReal signed_root = plus ? root : -root;
    const IntervalReal re_b = IntervalReal::from_int(static_cast<long>(-b), wp) / two_a;
    if (disc > 0) return IntervalComplex(re_b + signed_root / two_a, IntervalReal(wp));
    return IntervalComplex(re_b, signed_root / two_a);
  };
  if (minpoly == cyclotomic(static_cast<std::uint64_t>(lam.n)) &&
      gamma_at(p).overlaps(IntervalComplex::root_of_unity(lam.k, lam.n, p))) {
    tally.skip();  // gamma = lambda
    return;
  }
  const Certainty result = decide(p, [&](Precision wp) {
    const IntervalReal value = log_abs(IntervalComplex::root_of_unity(lam.k, lam.n, wp) - gamma_at(wp));
    const IntervalReal bound =
        distance_root_of_unity_bound(2, algebraic_height(minpoly, wp), OrderN(lam.n), wp);
    return below(bound, value);
  });
  tally.record(result, "gamma root of " + minpoly.to_string() + (plus ? " (+)" : " (-)") + ", " +
                           describe(lam));
}

void run_distance(const VerifyConfig& config, long samples, VerifyReport& report) {
  std::mt19937_64 rng(config.seed);
  Tally tally(report);
  for (long i = 0; i < samples; ++i) distance_rational(rng, config.precision, tally);
  for (long i = 0; i < samples; ++i) distance_quadratic(rng, config.precision, tally);
}

void run_poly_bound(const VerifyConfig& config, long samples, VerifyReport& report) {
  std::mt19937_64 rng(config.seed);
  Tally tally(report);
  for (long i = 0; i < samples; ++i) {
    const int degree = static_cast<int>(draw(rng, 1, 5));
    const UniPoly g = draw_poly(rng, degree, 100);
    const RootOfUnity lam = draw_root_of_unity(rng, 50);
    if (divide_exact(g, cyclotomic(static_cast<std::uint64_t>(lam.n)))) {
      tally.skip();  // g(lambda) = 0
      continue;
    }
    const std::string what = "g = " + g.to_string() + ", " + describe(lam);
    const OrderN n(static_cast<std::uint64_t>(lam.n));
    const Certainty final_form = decide(config.precision, [&](Precision wp) {
      const IntervalReal value = log_abs(g.eval(IntervalComplex::root_of_unity(lam.k, lam.n, wp)));
      return below(poly_root_of_unity_bound(degree, poly_height(g, wp), n, FinalForm{}, wp), value);
    });
    tally.record(final_form, what + " (final form)");
    const Certainty mahler_form = decide(config.precision, [&](Precision wp) {
      const IntervalReal value = log_abs(g.eval(IntervalComplex::root_of_unity(lam.k, lam.n, wp)));
      const MahlerForm form{mahler_measure(g, wp)};
      return below(poly_root_of_unity_bound(degree, HeightValue::exact_zero(wp), n, form, wp), value);
    });
    tally.record(mahler_form, what + " (Mahler form)");
  }
}

void run_separation(const VerifyConfig& config, long samples, VerifyReport& report) {
  std::mt19937_64 rng(config.seed);
  Tally tally(report);
  for (long i = 0; i < samples; ++i) {
    UniPoly f;
    int degree;
    do {
      degree = static_cast<int>(draw(rng, 2, 6));
      f = draw_poly(rng, degree, 20);
    } while (gcd(f, f.derivative()).degree() > 0);
    const Certainty c = decide(config.precision, [&](Precision wp) {
      const IntervalReal dist = min_root_distance(isolate_roots(f, wp));
      return below(root_separation_bound(degree, mahler_measure(f, wp), wp), dist);
    });
    tally.record(c, "f = " + f.to_string());
  }
}

// Geometric grid of `count` doubles from lo to hi, rounded to nearest.
std::vector<double> geometric_grid(double lo, double hi, long count) {
  std::vector<double> out;
  Mpfr llo(64), lhi(64), t(64), x(53);
  mpfr_set_d(llo.get(), lo, MPFR_RNDN);
  mpfr_log(llo.get(), llo.get(), MPFR_RNDN);
  mpfr_set_d(lhi.get(), hi, MPFR_RNDN);
  mpfr_log(lhi.get(), lhi.get(), MPFR_RNDN);
  mpfr_sub(lhi.get(), lhi.get(), llo.get(), MPFR_RNDN);
  for (long i = 0; i < count; ++i) {
    mpfr_mul_si(t.get(), lhi.get(), i, MPFR_RNDN);
    if (count > 1) mpfr_div_si(t.get(), t.get(), count - 1, MPFR_RNDN);
    mpfr_add(t.get(), t.get(), llo.get(), MPFR_RNDN);
    mpfr_exp(x.get(), t.get(), MPFR_RNDN);
    out.push_back(mpfr_get_d(x.get(), MPFR_RNDN));
  }
  return out;
}

void run_aux(const VerifyConfig& config, long samples, VerifyReport& report) {
  Tally tally(report);
  const Precision p = config.precision;
  const IntervalReal as[] = {IntervalReal::from_int(10001L, p), IntervalReal::from_int(100000L, p),
                             IntervalReal::from_int(1000000L, p)};
  for (const auto& a : as) {
    const AuxSolution sol = auxiliary_solve(a);
    const auto ps = geometric_grid(1e-2, 10.0 * sol.p_bound.hi_double(), samples);
    const auto qs = geometric_grid(3.0, 10.0 * sol.q_bound.hi_double(), samples);

    struct PTerms {
      IntervalReal p, p_log_p;
    };
    struct QTerms {
      IntervalReal q, a_log_q, q_over_loglog;
    };
    std::vector<PTerms> pt;
    for (double v : ps) {
      const IntervalReal x = IntervalReal::from_double(v, p);
      pt.push_back({x, x * log(x)});
    }
    std::vector<QTerms> qt;
    for (double v : qs) {
      const IntervalReal y = IntervalReal::from_double(v, p);
      qt.push_back({y, a * log(y), y / log_log(y)});
    }
    for (std::size_t i = 0; i < pt.size(); ++i) {
      for (std::size_t j = 0; j < qt.size(); ++j) {
        // Hypotheses p <= A log q and q / log log q <= p log p, unless certainly false.
        const bool h1 = !qt[j].a_log_q.certainly_less(pt[i].p);
        const bool h2 = !pt[i].p_log_p.certainly_less(qt[j].q_over_loglog);
        if (!h1 || !h2) {
          tally.skip();
          continue;
        }
        Certainty c = Certainty::holds;
        for (const auto& [lhs, rhs] : {std::pair{&pt[i].p, &sol.p_bound}, std::pair{&qt[j].q, &sol.q_bound}}) {
          const Certainty one = lhs->certainly_less(*rhs)       ? Certainty::holds
                                : rhs->certainly_less_eq(*lhs) ? Certainty::violated
                                                               : Certainty::indeterminate;
          if (one == Certainty::violated || c == Certainty::holds) c = one;
        }
        std::ostringstream os;
        if (c != Certainty::holds) {
          os.precision(17);
          os << "A = " << a.mid_double() << ", p = " << ps[i] << ", q = " << qs[j];
        }
        tally.record(c, os.str());
      }
    }
  }
}

void run_phi(const VerifyConfig& config, long limit, VerifyReport& report) {
  Tally tally(report);
  if (limit < 31) return;
  const auto table = totient_table(static_cast<std::uint32_t>(limit));
  // 3 phi(N) log log N / N stays above 1.3 for N <= 10^7, so 64 bits decides.
  const Precision start = std::min<Precision>(config.precision, 64);
  for (long n = 31; n <= limit; ++n) {
    const long phi = static_cast<long>(table[static_cast<std::size_t>(n)]);
    const Certainty c = decide(start, [&](Precision wp) {
      return below(phi_floor(OrderN(static_cast<std::uint64_t>(n)), wp), IntervalReal::from_int(phi, wp));
    });
    tally.record(c, c == Certainty::holds ? std::string() : "N = " + std::to_string(n) + ", phi(N) = " + std::to_string(phi));
  }
}

void run_classnum(const VerifyConfig& config, long limit, VerifyReport& report) {
  Tally tally(report);
  for (long m = 3; m <= limit; ++m) {
    if (!Discriminant::is_valid(-m)) continue;
    const Discriminant d(-m);
    const long h = class_number(d);
    const Certainty c = decide(config.precision, [&](Precision wp) {
      return below(IntervalReal::from_int(h, wp), class_number_upper_bound(d, wp));
    });
    tally.record(c, "D = " + std::to_string(-m) + ", h(D) = " + std::to_string(h));
  }
}

}  // namespace

VerifyReport run_verify(const VerifyConfig& config) {
  VerifyReport report;
  report.suite = config.suite;
  report.seed = config.seed;
  report.samples = config.samples.value_or(default_samples(config.suite));
  if (report.samples < 1) throw DomainError("samples must be positive");
  switch (config.suite) {
    case Suite::lemma22: run_distance(config, report.samples, report); break;
    case Suite::lemma23: run_poly_bound(config, report.samples, report); break;
    case Suite::separation: run_separation(config, report.samples, report); break;
    case Suite::aux: run_aux(config, report.samples, report); break;
    case Suite::phi: run_phi(config, report.samples, report); break;
    case Suite::classnum: run_classnum(config, report.samples, report); break;
  }
  return report;
}

std::string to_text(const VerifyReport& report) {
  std::ostringstream os;
  os << "suite: " << to_string(report.suite) << "\n"
     << "seed: " << report.seed << "\n"
     << "samples: " << report.samples << "\n"
     << "checked: " << report.checked << "\n"
     << "skipped: " << report.skipped << "\n"
     << "violations: " << report.violations << "\n"
     << "undecided: " << report.undecided << "\n";
  for (const auto& c : report.counterexamples) os << "counterexample: " << c << "\n";
  os << "result: " << (report.passed() ? "pass" : "FAIL") << "\n";
  return os.str();
}

}  // namespace special_locus
