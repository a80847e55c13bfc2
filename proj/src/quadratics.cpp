#include "special_locus/quadratics.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace special_locus {

Discriminant::Discriminant(std::int64_t value) : value_(value) {
  if (!is_valid(value)) throw InvalidDiscriminant(value);
}

bool Discriminant::is_valid(std::int64_t value) noexcept {
  if (value >= 0) return false;
  const std::int64_t r = ((value % 4) + 4) % 4;
  return r == 0 || r == 1;
}

IntervalReal ReducedForm::imag_tau(Precision precision) const {
  return sqrt(IntervalReal::from_int(static_cast<long>(-discriminant()), precision)) /
         IntervalReal::from_int(static_cast<long>(2 * a), precision);
}

namespace {

// Visits every reduced primitive form of discriminant d in (a, b) order.
template <class Visit>
void for_each_reduced_form(std::int64_t d, Visit&& visit) {
  const std::int64_t m = -d;
  for (std::int64_t a = 1; 3 * a * a <= m; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if (((b - d) & 1) != 0) continue;
      const std::int64_t num = b * b - d;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      visit(ReducedForm{a, b, c});
    }
  }
}

}  // namespace

std::vector<ReducedForm> reduced_forms(Discriminant d) {
  std::vector<ReducedForm> out;
  for_each_reduced_form(d.value(), [&out](const ReducedForm& f) { out.push_back(f); });
  return out;
}

long class_number(Discriminant d) {
  long count = 0;
  for_each_reduced_form(d.value(), [&count](const ReducedForm&) { ++count; });
  return count;
}

namespace {

BigInt sigma3(long n) {
  BigInt s = 0;
  for (long k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    s += BigInt(k) * k * k;
    const long other = n / k;
    if (other != k) s += BigInt(other) * other * other;
  }
  return s;
}

// Upper bounds computed with upward rounding at a fixed small precision.
class UpperBound {
 public:
  explicit UpperBound(Precision p = 64) : v_(p) {}
  mpfr_ptr get() { return v_.get(); }
  mpfr_srcptr get() const { return v_.get(); }

 private:
  Mpfr v_;
};

}  // namespace

IntervalComplex eval_j(const ReducedForm& form, Precision precision) {
  const auto [a, b, c] = form;
  const std::int64_t d = form.discriminant();
  if (d >= 0 || a < 1 || std::llabs(b) > a || a > c) {
    throw DomainError("eval_j requires a reduced positive definite form");
  }
  const Precision wp = precision + 32;
  // |q| = exp(-t), t = pi sqrt|D| / a
  const IntervalReal t = pi(wp) * sqrt(IntervalReal::from_int(static_cast<long>(-d), wp)) /
                         IntervalReal::from_int(static_cast<long>(a), wp);

  UpperBound r, r_lo, one_minus_r, eps;
  {
    Mpfr neg(64);
    mpfr_neg(neg.get(), t.lo().get(), MPFR_RNDU);
    mpfr_exp(r.get(), neg.get(), MPFR_RNDU);
    mpfr_neg(neg.get(), t.hi().get(), MPFR_RNDD);
    mpfr_exp(r_lo.get(), neg.get(), MPFR_RNDD);
  }
  if (mpfr_cmp_d(r.get(), 0.5) >= 0) throw PrecisionExhausted("eval_j: |q| not certified below 1/2");
  mpfr_ui_sub(one_minus_r.get(), 1, r.get(), MPFR_RNDD);
  // Tail tolerance scaled by |q|, since j divides by q.
  mpfr_mul_2si(eps.get(), r_lo.get(), -static_cast<long>(wp), MPFR_RNDD);

  // E4 tail: sum_{n > T} 240 sigma_3(n) r^n with sigma_3(n) < 2 n^3; the term
  // ratio is at most rho = (1 + 1/(T+1))^3 r from n = T+1 on.
  long terms = 0;
  UpperBound e4_tail;
  for (long n = 1;; ++n) {
    UpperBound term, rho, base;
    mpfr_pow_ui(term.get(), r.get(), static_cast<unsigned long>(n + 1), MPFR_RNDU);
    mpfr_mul_ui(term.get(), term.get(), 480UL * static_cast<unsigned long>((n + 1) * (n + 1) * (n + 1)),
                MPFR_RNDU);
    mpfr_set_ui(base.get(), static_cast<unsigned long>(n + 2), MPFR_RNDU);
    mpfr_div_ui(base.get(), base.get(), static_cast<unsigned long>(n + 1), MPFR_RNDU);
    mpfr_pow_ui(rho.get(), base.get(), 3, MPFR_RNDU);
    mpfr_mul(rho.get(), rho.get(), r.get(), MPFR_RNDU);
    if (mpfr_cmp_ui(rho.get(), 1) >= 0) continue;
    mpfr_ui_sub(rho.get(), 1, rho.get(), MPFR_RNDD);
    mpfr_div(term.get(), term.get(), rho.get(), MPFR_RNDU);
    if (mpfr_cmp(term.get(), eps.get()) <= 0) {
      terms = n;
      mpfr_set(e4_tail.get(), term.get(), MPFR_RNDU);
      break;
    }
    if (n > 1'000'000) throw PrecisionExhausted("eval_j: E4 truncation did not converge");
  }

  // Pentagonal tail: sum_{k > K} (r^{k(3k-1)/2} + r^{k(3k+1)/2}) <= 2 r^{e(K+1)} / (1 - r).
  long pent_terms = 0;
  UpperBound pent_tail;
  for (long k = 1;; ++k) {
    const long e = (k + 1) * (3 * (k + 1) - 1) / 2;
    UpperBound bound;
    mpfr_pow_ui(bound.get(), r.get(), static_cast<unsigned long>(e), MPFR_RNDU);
    mpfr_mul_ui(bound.get(), bound.get(), 2, MPFR_RNDU);
    mpfr_div(bound.get(), bound.get(), one_minus_r.get(), MPFR_RNDU);
    if (mpfr_cmp(bound.get(), eps.get()) <= 0) {
      pent_terms = k;
      mpfr_set(pent_tail.get(), bound.get(), MPFR_RNDU);
      break;
    }
  }

  // q^n = exp(-n t) * exp(-pi i n b / a), angle reduced exactly.
  std::map<long, IntervalComplex> powers;
  auto q_pow = [&](long n) -> const IntervalComplex& {
    auto it = powers.find(n);
    if (it == powers.end()) {
      const IntervalReal mag = exp(-(IntervalReal::from_int(n, wp) * t));
      it = powers.emplace(n, mag * IntervalComplex::cis_pi(BigRat(-n * b, a), wp)).first;
    }
    return it->second;
  };

  IntervalComplex e4(IntervalReal::from_int(1L, wp), IntervalReal(wp));
  for (long n = 1; n <= terms; ++n) {
    e4 += IntervalReal::from_int(BigInt(240) * sigma3(n), wp) * q_pow(n);
  }
  Mpfr e4_radius(wp);
  mpfr_set(e4_radius.get(), e4_tail.get(), MPFR_RNDU);
  e4 = e4.inflate(e4_radius);

  IntervalComplex euler(IntervalReal::from_int(1L, wp), IntervalReal(wp));
  for (long k = 1; k <= pent_terms; ++k) {
    IntervalComplex pair = q_pow(k * (3 * k - 1) / 2) + q_pow(k * (3 * k + 1) / 2);
    if (k % 2 == 1) {
      euler -= pair;
    } else {
      euler += pair;
    }
  }
  Mpfr pent_radius(wp);
  mpfr_set(pent_radius.get(), pent_tail.get(), MPFR_RNDU);
  euler = euler.inflate(pent_radius);

  const IntervalComplex j = pow(e4, 3) / (q_pow(1) * pow(euler, 24));
  return {with_precision(j.re(), precision), with_precision(j.im(), precision)};
}

Precision class_polynomial_start_precision(Discriminant d) {
  double bits = 64.0;
  const double root = std::sqrt(static_cast<double>(d.magnitude()));
  long h = 0;
  for (const auto& f : reduced_forms(d)) {
    bits += M_PI * root / static_cast<double>(f.a) / std::log(2.0) + 2.0;
    ++h;
  }
  bits += 4.0 * std::log2(static_cast<double>(h) + 1.0);
  return static_cast<Precision>(std::ceil(bits));
}

std::optional<ClassPolynomial> class_polynomial_at(Discriminant d, Precision precision) {
  ClassPolynomial out;
  out.d = d;
  out.forms = reduced_forms(d);
  out.precision_used = precision;
  std::vector<IntervalComplex> poly{IntervalComplex(IntervalReal::from_int(1L, precision),
                                                    IntervalReal(precision))};
  for (const auto& form : out.forms) {
    IntervalComplex root = eval_j(form, precision);
    // multiply by (X - root)
    std::vector<IntervalComplex> next(poly.size() + 1, IntervalComplex(precision));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * root;
    }
    poly = std::move(next);
    out.roots.push_back(std::move(root));
  }

  const BigRat quarter(1, 4);
  Mpfr margin(64);
  std::vector<BigInt> coeffs;
  for (const auto& c : poly) {
    auto n = c.re().certified_integer();
    if (!n) return std::nullopt;
    if (!(c.im().certainly_less(IntervalReal::from_rat(quarter, 64)) &&
          IntervalReal::from_rat(-quarter, 64).certainly_less(c.im()))) {
      return std::nullopt;
    }
    const IntervalReal off = abs(c.re() - IntervalReal::from_int(*n, precision));
    Mpfr hi(64);
    mpfr_set(hi.get(), off.hi().get(), MPFR_RNDU);
    if (mpfr_cmp(hi.get(), margin.get()) > 0) margin = hi;
    coeffs.push_back(std::move(*n));
  }
  out.poly = UniPoly(std::move(coeffs));
  out.rounding_margin = std::move(margin);
  return out;
}

ClassPolynomial class_polynomial(Discriminant d, Precision cap) {
  return with_precision_retry(
      class_polynomial_start_precision(d), cap,
      [d](Precision p) { return class_polynomial_at(d, p); },
      "class polynomial for D = " + std::to_string(d.value()));
}

const ClassPolynomial& class_polynomial_cached(Discriminant d) {
  static std::mutex mutex;
  static std::map<std::int64_t, std::unique_ptr<const ClassPolynomial>> table;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = table.find(d.value()); it != table.end()) return *it->second;
  }
  auto computed = std::make_unique<const ClassPolynomial>(class_polynomial(d));
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = table.emplace(d.value(), std::move(computed));
  return *it->second;
}

}  // namespace special_locus
