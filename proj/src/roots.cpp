#include "special_locus/roots.hpp"

#include <algorithm>
#include <cmath>

namespace special_locus {

IntervalReal RootDisk::modulus() const {
  const IntervalReal c = abs(center);
  Mpfr lo(c.precision()), hi(c.precision());
  mpfr_sub(lo.get(), c.lo().get(), radius.get(), MPFR_RNDD);
  if (mpfr_sgn(lo.get()) < 0) mpfr_set_zero(lo.get(), 1);
  mpfr_add(hi.get(), c.hi().get(), radius.get(), MPFR_RNDU);
  return IntervalReal(std::move(lo), std::move(hi));
}

namespace {

IntervalReal midpoint(const IntervalReal& x) {
  auto [m, r] = x.mid_rad();
  Mpfr lo(x.precision()), hi(x.precision());
  mpfr_set(lo.get(), m.get(), MPFR_RNDN);
  hi = lo;
  return IntervalReal(std::move(lo), std::move(hi));
}

IntervalComplex midpoint(const IntervalComplex& z) {
  return {midpoint(z.re()), midpoint(z.im())};
}

// log2 of a Fujiwara-style upper bound on the root moduli.
double root_radius_log2(const UniPoly& p) {
  const int n = p.degree();
  auto log2_abs = [](const BigInt& v) {
    long e = 0;
    const double m = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log2(std::fabs(m)) + static_cast<double>(e);
  };
  const double lead = log2_abs(p.leading());
  double best = -1e300;
  for (int k = 1; k <= n; ++k) {
    const BigInt& c = p[static_cast<std::size_t>(n - k)];
    if (c == 0) continue;
    best = std::max(best, (log2_abs(c) - lead) / k);
  }
  return best + 1.0;
}

// Approximate roots by Aberth iteration at working precision p.
std::vector<IntervalComplex> aberth(const UniPoly& poly, Precision p,
                                    std::vector<IntervalComplex> start) {
  const int n = poly.degree();
  const UniPoly deriv = poly.derivative();
  std::vector<IntervalComplex> z = std::move(start);
  const int max_iterations = 200 + 40 * n;
  Mpfr tol(p);
  mpfr_set_ui_2exp(tol.get(), 1, -(static_cast<long>(p) - 12), MPFR_RNDN);
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool converged = true;
    for (int k = 0; k < n; ++k) {
      try {
        const IntervalComplex pv = poly.eval(z[k]);
        if (pv.contains_zero() && pv.re().is_point() && pv.im().is_point()) continue;
        const IntervalComplex newton = midpoint(pv / deriv.eval(z[k]));
        IntervalComplex sum(p);
        for (int j = 0; j < n; ++j) {
          if (j != k) sum += IntervalComplex::from_int(1, p) / (z[k] - z[j]);
        }
        const IntervalComplex step =
            midpoint(newton / (IntervalComplex::from_int(1, p) - newton * midpoint(sum)));
        z[k] = midpoint(z[k] - step);
        // relative step size
        const IntervalReal scale = max(abs(z[k]), IntervalReal::from_int(1L, p));
        Mpfr rel(p);
        mpfr_div(rel.get(), abs(step).hi().get(), scale.lo().get(), MPFR_RNDU);
        if (mpfr_cmp(rel.get(), tol.get()) > 0) converged = false;
      } catch (const DomainError&) {
        // Coincident iterates or a vanishing derivative: nudge and continue.
        z[k] = midpoint(z[k] + IntervalComplex::from_rat(BigRat(1, 1000 + k), BigRat(1, 997 + 3 * k), p));
        converged = false;
      }
    }
    if (converged) break;
  }
  return z;
}

std::vector<IntervalComplex> initial_guesses(const UniPoly& poly, Precision p) {
  const int n = poly.degree();
  const double r = std::exp2(std::clamp(root_radius_log2(poly) - 1.0, -1000.0, 1000.0));
  std::vector<IntervalComplex> z;
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * M_PI * k / n + 0.4;
    z.emplace_back(IntervalReal::from_double(r * std::cos(angle), p),
                   IntervalReal::from_double(r * std::sin(angle), p));
  }
  return z;
}

std::optional<std::vector<RootDisk>> certify(const UniPoly& poly,
                                             const std::vector<IntervalComplex>& z,
                                             Precision p) {
  const int n = poly.degree();
  const IntervalComplex lead = IntervalComplex::from_int(poly.leading(), p);
  std::vector<RootDisk> disks;
  disks.reserve(static_cast<std::size_t>(n));
  try {
    for (int i = 0; i < n; ++i) {
      IntervalComplex denom = lead;
      for (int j = 0; j < n; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      const IntervalReal w = abs(poly.eval(z[i]) / denom);
      Mpfr radius(p);
      mpfr_mul_ui(radius.get(), w.hi().get(), static_cast<unsigned long>(n), MPFR_RNDU);
      disks.push_back({z[i], std::move(radius)});
    }
  } catch (const DomainError&) {
    return std::nullopt;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mpfr sum(p);
      mpfr_add(sum.get(), disks[i].radius.get(), disks[j].radius.get(), MPFR_RNDU);
      const IntervalReal dist = abs(z[i] - z[j]);
      if (mpfr_cmp(dist.lo().get(), sum.get()) <= 0) return std::nullopt;
    }
  return disks;
}

}  // namespace

std::vector<RootDisk> isolate_roots(const UniPoly& squarefree, Precision precision,
                                    Precision cap) {
  if (squarefree.is_zero()) throw ZeroPolynomial("isolate_roots");
  const int n = squarefree.degree();
  if (n <= 0) return {};
  if (n == 1) {
    const BigRat root(-squarefree[0], squarefree[1]);
    const auto re = IntervalReal::from_rat(root, precision);
    auto [m, r] = re.mid_rad();
    Mpfr zero(m.precision());
    IntervalComplex center(IntervalReal(m, m), IntervalReal(zero, zero));
    return {RootDisk{std::move(center), std::move(r)}};
  }
  std::vector<IntervalComplex> z;
  for (Precision p = std::max<Precision>(precision, 64); p <= cap; p *= 2) {
    if (z.empty()) {
      z = initial_guesses(squarefree, p);
    } else {
      for (auto& v : z) v = IntervalComplex(with_precision(v.re(), p), with_precision(v.im(), p));
    }
    z = aberth(squarefree, p, std::move(z));
    if (auto disks = certify(squarefree, z, p)) return std::move(*disks);
  }
  throw PrecisionExhausted("root isolation of " + squarefree.to_string() +
                           " did not separate (is it squarefree?)");
}

IntervalReal min_root_distance(const std::vector<RootDisk>& roots) {
  if (roots.size() < 2) throw DomainError("min_root_distance needs at least two roots");
  std::optional<IntervalReal> best;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const IntervalReal d = abs(roots[i].center - roots[j].center);
      Mpfr slack(d.precision());
      mpfr_add(slack.get(), roots[i].radius.get(), roots[j].radius.get(), MPFR_RNDU);
      Mpfr lo(d.precision()), hi(d.precision());
      mpfr_sub(lo.get(), d.lo().get(), slack.get(), MPFR_RNDD);
      if (mpfr_sgn(lo.get()) < 0) mpfr_set_zero(lo.get(), 1);
      mpfr_add(hi.get(), d.hi().get(), slack.get(), MPFR_RNDU);
      IntervalReal pair(std::move(lo), std::move(hi));
      best = best ? min(*best, pair) : pair;
    }
  return *best;
}

}  // namespace special_locus
