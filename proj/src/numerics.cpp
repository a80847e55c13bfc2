#include "special_locus/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace special_locus {

// ---------------------------------------------------------------------------
// Mpfr

Mpfr::Mpfr(Precision precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

Mpfr::Mpfr(const Mpfr& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Mpfr::Mpfr(Mpfr&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Mpfr& Mpfr::operator=(const Mpfr& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Mpfr& Mpfr::operator=(Mpfr&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Mpfr::~Mpfr() { mpfr_clear(value_); }

namespace {

std::string format_decimal(mpfr_srcptr value, std::size_t digits, mpfr_rnd_t rnd) {
  if (mpfr_nan_p(value)) return "nan";
  if (mpfr_inf_p(value)) return mpfr_sgn(value) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(value)) return "0";
  mpfr_exp_t exponent = 0;
  char* raw = mpfr_get_str(nullptr, &exponent, 10, digits, value, rnd);
  std::string mantissa(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (mantissa.front() == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  while (mantissa.size() > 1 && mantissa.back() == '0') mantissa.pop_back();
  // value = 0.mantissa * 10^exponent
  const long exp10 = static_cast<long>(exponent) - 1;
  const long n = static_cast<long>(mantissa.size());
  if (exp10 >= 0 && exp10 < 21 && exp10 < n + 3) {
    if (n <= exp10 + 1) return sign + mantissa + std::string(static_cast<std::size_t>(exp10 + 1 - n), '0');
    return sign + mantissa.substr(0, static_cast<std::size_t>(exp10 + 1)) + "." +
           mantissa.substr(static_cast<std::size_t>(exp10 + 1));
  }
  if (exp10 < 0 && exp10 >= -6) {
    return sign + "0." + std::string(static_cast<std::size_t>(-exp10 - 1), '0') + mantissa;
  }
  std::string out = sign + mantissa.substr(0, 1);
  if (mantissa.size() > 1) out += "." + mantissa.substr(1);
  if (exp10 != 0) out += "e" + std::to_string(exp10);
  return out;
}

// Result precision of a binary operation.
Precision join(const IntervalReal& a, const IntervalReal& b) {
  return std::max(a.precision(), b.precision());
}

int cmp(const Mpfr& a, const Mpfr& b) { return mpfr_cmp(a.get(), b.get()); }

}  // namespace

std::string to_decimal(const Mpfr& value) {
  return format_decimal(value.get(), mpfr_get_str_ndigits(10, value.precision()), MPFR_RNDN);
}

std::string to_decimal(const Mpfr& value, int digits) {
  return format_decimal(value.get(), static_cast<std::size_t>(std::max(digits, 2)), MPFR_RNDN);
}

Mpfr parse_decimal(const std::string& text, Precision precision) {
  Mpfr out(precision);
  if (text == "inf" || text == "-inf" || text == "nan" ||
      mpfr_set_str(out.get(), text.c_str(), 10, MPFR_RNDN) != 0) {
    throw DomainError("cannot parse decimal '" + text + "'");
  }
  return out;
}

// ---------------------------------------------------------------------------
// IntervalReal

IntervalReal::IntervalReal(Precision precision)
    : lo_(precision), hi_(precision), precision_(precision) {}

IntervalReal::IntervalReal(Mpfr lo, Mpfr hi)
    : lo_(std::move(lo)), hi_(std::move(hi)),
      precision_(std::max(lo_.precision(), hi_.precision())) {
  if (mpfr_nan_p(lo_.get()) || mpfr_nan_p(hi_.get()) || cmp(lo_, hi_) > 0) {
    throw DomainError("malformed interval endpoints");
  }
}

IntervalReal IntervalReal::from_int(long value, Precision precision) {
  IntervalReal out(precision);
  mpfr_set_si(out.lo_.get(), value, MPFR_RNDD);
  mpfr_set_si(out.hi_.get(), value, MPFR_RNDU);
  return out;
}

IntervalReal IntervalReal::from_int(const BigInt& value, Precision precision) {
  IntervalReal out(precision);
  mpfr_set_z(out.lo_.get(), value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(out.hi_.get(), value.get_mpz_t(), MPFR_RNDU);
  return out;
}

IntervalReal IntervalReal::from_rat(const BigRat& value, Precision precision) {
  IntervalReal out(precision);
  mpfr_set_q(out.lo_.get(), value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_.get(), value.get_mpq_t(), MPFR_RNDU);
  return out;
}

IntervalReal IntervalReal::from_double(double value, Precision precision) {
  IntervalReal out(precision);
  mpfr_set_d(out.lo_.get(), value, MPFR_RNDD);
  mpfr_set_d(out.hi_.get(), value, MPFR_RNDU);
  return out;
}

IntervalReal IntervalReal::hull(const BigRat& a, const BigRat& b, Precision precision) {
  return special_locus::hull(from_rat(a, precision), from_rat(b, precision));
}

double IntervalReal::mid_double() const {
  auto [m, r] = mid_rad();
  return m.to_double();
}

Mpfr IntervalReal::width() const {
  Mpfr w(precision_);
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

std::pair<Mpfr, Mpfr> IntervalReal::mid_rad() const {
  Mpfr m(precision_ + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  Mpfr a(precision_), b(precision_);
  mpfr_sub(a.get(), hi_.get(), m.get(), MPFR_RNDU);
  mpfr_sub(b.get(), m.get(), lo_.get(), MPFR_RNDU);
  if (cmp(a, b) < 0) a = b;
  return {std::move(m), std::move(a)};
}

bool IntervalReal::contains(const BigRat& value) const {
  return mpfr_cmp_q(lo_.get(), value.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(hi_.get(), value.get_mpq_t()) >= 0;
}

bool IntervalReal::contains(const IntervalReal& other) const {
  return cmp(lo_, other.lo_) <= 0 && cmp(other.hi_, hi_) <= 0;
}

bool IntervalReal::contains_zero() const {
  return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
}

bool IntervalReal::is_point() const { return cmp(lo_, hi_) == 0; }

bool IntervalReal::certainly_positive() const { return mpfr_sgn(lo_.get()) > 0; }

bool IntervalReal::certainly_negative() const { return mpfr_sgn(hi_.get()) < 0; }

bool IntervalReal::certainly_less(const IntervalReal& other) const {
  return cmp(hi_, other.lo_) < 0;
}

bool IntervalReal::certainly_less_eq(const IntervalReal& other) const {
  return cmp(hi_, other.lo_) <= 0;
}

bool IntervalReal::overlaps(const IntervalReal& other) const {
  return cmp(lo_, other.hi_) <= 0 && cmp(other.lo_, hi_) <= 0;
}

std::optional<BigInt> IntervalReal::certified_integer() const {
  auto [m, r] = mid_rad();
  BigInt n;
  mpfr_get_z(n.get_mpz_t(), m.get(), MPFR_RNDN);
  const BigRat quarter(1, 4);
  const BigRat below = BigRat(n) - quarter;
  const BigRat above = BigRat(n) + quarter;
  if (mpfr_cmp_q(lo_.get(), below.get_mpq_t()) > 0 &&
      mpfr_cmp_q(hi_.get(), above.get_mpq_t()) < 0) {
    return n;
  }
  return std::nullopt;
}

IntervalReal IntervalReal::operator-() const {
  IntervalReal out(precision_);
  mpfr_neg(out.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(out.hi_.get(), lo_.get(), MPFR_RNDU);
  return out;
}

IntervalReal& IntervalReal::operator+=(const IntervalReal& rhs) {
  IntervalReal out(join(*this, rhs));
  mpfr_add(out.lo_.get(), lo_.get(), rhs.lo_.get(), MPFR_RNDD);
  mpfr_add(out.hi_.get(), hi_.get(), rhs.hi_.get(), MPFR_RNDU);
  return *this = std::move(out);
}

IntervalReal& IntervalReal::operator-=(const IntervalReal& rhs) {
  IntervalReal out(join(*this, rhs));
  mpfr_sub(out.lo_.get(), lo_.get(), rhs.hi_.get(), MPFR_RNDD);
  mpfr_sub(out.hi_.get(), hi_.get(), rhs.lo_.get(), MPFR_RNDU);
  return *this = std::move(out);
}

IntervalReal& IntervalReal::operator*=(const IntervalReal& rhs) {
  const Precision p = join(*this, rhs);
  IntervalReal out(p);
  Mpfr t(p);
  const mpfr_srcptr xs[2] = {lo_.get(), hi_.get()};
  const mpfr_srcptr ys[2] = {rhs.lo_.get(), rhs.hi_.get()};
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.get(), out.lo_.get()) < 0) mpfr_set(out.lo_.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.get(), out.hi_.get()) > 0) mpfr_set(out.hi_.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return *this = std::move(out);
}

IntervalReal& IntervalReal::operator/=(const IntervalReal& rhs) {
  if (rhs.contains_zero()) throw DomainError("interval division by an interval containing 0");
  const Precision p = join(*this, rhs);
  IntervalReal out(p);
  Mpfr t(p);
  const mpfr_srcptr xs[2] = {lo_.get(), hi_.get()};
  const mpfr_srcptr ys[2] = {rhs.lo_.get(), rhs.hi_.get()};
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_div(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.get(), out.lo_.get()) < 0) mpfr_set(out.lo_.get(), t.get(), MPFR_RNDD);
      mpfr_div(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.get(), out.hi_.get()) > 0) mpfr_set(out.hi_.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return *this = std::move(out);
}

std::string IntervalReal::to_string(int digits) const {
  return "[" + format_decimal(lo_.get(), static_cast<std::size_t>(std::max(digits, 2)), MPFR_RNDD) +
         ", " + format_decimal(hi_.get(), static_cast<std::size_t>(std::max(digits, 2)), MPFR_RNDU) +
         "]";
}

IntervalReal operator+(IntervalReal a, const IntervalReal& b) { return a += b; }
IntervalReal operator-(IntervalReal a, const IntervalReal& b) { return a -= b; }
IntervalReal operator*(IntervalReal a, const IntervalReal& b) { return a *= b; }
IntervalReal operator/(IntervalReal a, const IntervalReal& b) { return a /= b; }

IntervalReal with_precision(const IntervalReal& x, Precision precision) {
  Mpfr lo(precision), hi(precision);
  mpfr_set(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_set(hi.get(), x.hi().get(), MPFR_RNDU);
  return IntervalReal(std::move(lo), std::move(hi));
}

namespace {

// Applies a monotone nondecreasing MPFR function endpoint-wise.
template <class Fn>
IntervalReal monotone(const IntervalReal& x, Fn&& fn) {
  Mpfr lo(x.precision()), hi(x.precision());
  fn(lo.get(), x.lo().get(), MPFR_RNDD);
  fn(hi.get(), x.hi().get(), MPFR_RNDU);
  return IntervalReal(std::move(lo), std::move(hi));
}

}  // namespace

IntervalReal sqr(const IntervalReal& x) {
  const Precision p = x.precision();
  Mpfr lo(p), hi(p);
  if (x.certainly_positive() || mpfr_sgn(x.lo().get()) == 0) {
    mpfr_sqr(lo.get(), x.lo().get(), MPFR_RNDD);
    mpfr_sqr(hi.get(), x.hi().get(), MPFR_RNDU);
  } else if (mpfr_sgn(x.hi().get()) <= 0) {
    mpfr_sqr(lo.get(), x.hi().get(), MPFR_RNDD);
    mpfr_sqr(hi.get(), x.lo().get(), MPFR_RNDU);
  } else {
    Mpfr t(p);
    mpfr_sqr(hi.get(), x.lo().get(), MPFR_RNDU);
    mpfr_sqr(t.get(), x.hi().get(), MPFR_RNDU);
    if (mpfr_cmp(t.get(), hi.get()) > 0) hi = t;
  }
  return IntervalReal(std::move(lo), std::move(hi));
}

IntervalReal pow(const IntervalReal& x, unsigned long n) {
  if (n == 0) return IntervalReal::from_int(1L, x.precision());
  if (n % 2 == 0) return pow(sqr(x), n / 2);
  return monotone(x, [n](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t rnd) { mpfr_pow_ui(r, a, n, rnd); });
}

IntervalReal abs(const IntervalReal& x) {
  if (mpfr_sgn(x.lo().get()) >= 0) return x;
  if (mpfr_sgn(x.hi().get()) <= 0) return -x;
  Mpfr lo(x.precision()), hi(x.precision());
  mpfr_neg(hi.get(), x.lo().get(), MPFR_RNDU);
  if (mpfr_cmp(x.hi().get(), hi.get()) > 0) mpfr_set(hi.get(), x.hi().get(), MPFR_RNDU);
  return IntervalReal(std::move(lo), std::move(hi));
}

IntervalReal max(const IntervalReal& a, const IntervalReal& b) {
  Mpfr lo(cmp(a.lo(), b.lo()) >= 0 ? a.lo() : b.lo());
  Mpfr hi(cmp(a.hi(), b.hi()) >= 0 ? a.hi() : b.hi());
  return IntervalReal(std::move(lo), std::move(hi));
}

IntervalReal min(const IntervalReal& a, const IntervalReal& b) {
  Mpfr lo(cmp(a.lo(), b.lo()) <= 0 ? a.lo() : b.lo());
  Mpfr hi(cmp(a.hi(), b.hi()) <= 0 ? a.hi() : b.hi());
  return IntervalReal(std::move(lo), std::move(hi));
}

IntervalReal hull(const IntervalReal& a, const IntervalReal& b) {
  Mpfr lo(cmp(a.lo(), b.lo()) <= 0 ? a.lo() : b.lo());
  Mpfr hi(cmp(a.hi(), b.hi()) >= 0 ? a.hi() : b.hi());
  return IntervalReal(std::move(lo), std::move(hi));
}

IntervalReal intersect(const IntervalReal& a, const IntervalReal& b) {
  Mpfr lo(cmp(a.lo(), b.lo()) >= 0 ? a.lo() : b.lo());
  Mpfr hi(cmp(a.hi(), b.hi()) <= 0 ? a.hi() : b.hi());
  if (cmp(lo, hi) > 0) throw DomainError("empty interval intersection");
  return IntervalReal(std::move(lo), std::move(hi));
}

IntervalReal sqrt(const IntervalReal& x) {
  if (mpfr_sgn(x.lo().get()) < 0) throw DomainError("sqrt of an interval reaching below 0");
  return monotone(x, mpfr_sqrt);
}

IntervalReal log(const IntervalReal& x) {
  if (!x.certainly_positive()) throw DomainError("log of an interval not bounded away from 0");
  return monotone(x, mpfr_log);
}

IntervalReal log_log(const IntervalReal& x) {
  if (mpfr_cmp_ui(x.lo().get(), 1) <= 0) {
    throw DomainError("log log of an interval not bounded away above 1");
  }
  auto inner = log(x);
  if (!inner.certainly_positive()) throw DomainError("log log argument too close to 1");
  return log(inner);
}

IntervalReal exp(const IntervalReal& x) { return monotone(x, mpfr_exp); }

namespace {

// cos/sin are 1-Lipschitz: f([m - r, m + r]) lies in [f(m) - r, f(m) + r].
template <class Fn>
IntervalReal lipschitz_trig(const IntervalReal& x, Fn&& fn) {
  const Precision p = x.precision();
  auto [m, r] = x.mid_rad();
  Mpfr lo(p), hi(p);
  if (mpfr_cmp_ui(r.get(), 4) > 0) {
    mpfr_set_si(lo.get(), -1, MPFR_RNDD);
    mpfr_set_si(hi.get(), 1, MPFR_RNDU);
    return IntervalReal(std::move(lo), std::move(hi));
  }
  fn(lo.get(), m.get(), MPFR_RNDD);
  fn(hi.get(), m.get(), MPFR_RNDU);
  mpfr_sub(lo.get(), lo.get(), r.get(), MPFR_RNDD);
  mpfr_add(hi.get(), hi.get(), r.get(), MPFR_RNDU);
  if (mpfr_cmp_si(lo.get(), -1) < 0) mpfr_set_si(lo.get(), -1, MPFR_RNDD);
  if (mpfr_cmp_si(hi.get(), 1) > 0) mpfr_set_si(hi.get(), 1, MPFR_RNDU);
  return IntervalReal(std::move(lo), std::move(hi));
}

// r reduced into [0, 2).
BigRat reduce_turns(const BigRat& r) {
  BigRat half = r / 2;
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
  BigRat out = r - BigRat(2 * fl);
  out.canonicalize();
  return out;
}

}  // namespace

IntervalReal cos(const IntervalReal& x) { return lipschitz_trig(x, mpfr_cos); }

IntervalReal sin(const IntervalReal& x) { return lipschitz_trig(x, mpfr_sin); }

IntervalReal pi(Precision precision) {
  Mpfr lo(precision), hi(precision);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return IntervalReal(std::move(lo), std::move(hi));
}

IntervalReal cos_pi(const BigRat& r, Precision precision) {
  const BigRat t = reduce_turns(r);
  if (t == 0) return IntervalReal::from_int(1L, precision);
  if (t == 1) return IntervalReal::from_int(-1L, precision);
  if (t == BigRat(1, 2) || t == BigRat(3, 2)) return IntervalReal(precision);
  return cos(pi(precision + 8) * IntervalReal::from_rat(t, precision + 8));
}

IntervalReal sin_pi(const BigRat& r, Precision precision) {
  const BigRat t = reduce_turns(r);
  if (t == 0 || t == 1) return IntervalReal(precision);
  if (t == BigRat(1, 2)) return IntervalReal::from_int(1L, precision);
  if (t == BigRat(3, 2)) return IntervalReal::from_int(-1L, precision);
  return sin(pi(precision + 8) * IntervalReal::from_rat(t, precision + 8));
}

IntervalReal interval_elementary(ElementaryKind kind, const IntervalReal& x,
                                 Precision precision) {
  const auto input = with_precision(x, std::max(precision, x.precision()));
  IntervalReal out(precision);
  switch (kind) {
    case ElementaryKind::log: out = log(input); break;
    case ElementaryKind::exp: out = exp(input); break;
    case ElementaryKind::sqrt:
      if (!input.certainly_positive()) throw DomainError("sqrt requires a positive interval");
      out = sqrt(input);
      break;
    case ElementaryKind::loglog: out = log_log(input); break;
    case ElementaryKind::pi_const: out = pi(precision); break;
  }
  return with_precision(out, precision);
}

// ---------------------------------------------------------------------------
// IntervalComplex

IntervalComplex::IntervalComplex(Precision precision) : re_(precision), im_(precision) {}

IntervalComplex::IntervalComplex(IntervalReal re, IntervalReal im)
    : re_(std::move(re)), im_(std::move(im)) {}

IntervalComplex IntervalComplex::from_int(const BigInt& re, Precision precision) {
  return {IntervalReal::from_int(re, precision), IntervalReal(precision)};
}

IntervalComplex IntervalComplex::from_rat(const BigRat& re, const BigRat& im,
                                          Precision precision) {
  return {IntervalReal::from_rat(re, precision), IntervalReal::from_rat(im, precision)};
}

IntervalComplex IntervalComplex::root_of_unity(long k, long n, Precision precision) {
  if (n <= 0) throw DomainError("root of unity order must be positive");
  return cis_pi(BigRat(2 * k, n), precision);
}

IntervalComplex IntervalComplex::cis_pi(const BigRat& r, Precision precision) {
  BigRat canonical = r;
  canonical.canonicalize();
  return {cos_pi(canonical, precision), sin_pi(canonical, precision)};
}

Precision IntervalComplex::precision() const noexcept {
  return std::max(re_.precision(), im_.precision());
}

bool IntervalComplex::overlaps(const IntervalComplex& other) const {
  return re_.overlaps(other.re_) && im_.overlaps(other.im_);
}

Mpfr IntervalComplex::radius() const {
  Mpfr a = re_.width(), b = im_.width();
  Mpfr out(precision());
  mpfr_hypot(out.get(), a.get(), b.get(), MPFR_RNDU);
  mpfr_div_2ui(out.get(), out.get(), 1, MPFR_RNDU);
  return out;
}

IntervalComplex IntervalComplex::operator-() const { return {-re_, -im_}; }

IntervalComplex& IntervalComplex::operator+=(const IntervalComplex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

IntervalComplex& IntervalComplex::operator-=(const IntervalComplex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

IntervalComplex& IntervalComplex::operator*=(const IntervalComplex& rhs) {
  IntervalReal re = re_ * rhs.re_ - im_ * rhs.im_;
  IntervalReal im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

IntervalComplex& IntervalComplex::operator/=(const IntervalComplex& rhs) {
  const IntervalReal denom = abs_sq(rhs);
  if (denom.contains_zero()) throw DomainError("complex division by a box containing 0");
  *this *= conj(rhs);
  re_ /= denom;
  im_ /= denom;
  return *this;
}

IntervalComplex IntervalComplex::inflate(const Mpfr& r) const {
  auto widen = [&r](const IntervalReal& x) {
    Mpfr lo(x.precision()), hi(x.precision());
    mpfr_sub(lo.get(), x.lo().get(), r.get(), MPFR_RNDD);
    mpfr_add(hi.get(), x.hi().get(), r.get(), MPFR_RNDU);
    return IntervalReal(std::move(lo), std::move(hi));
  };
  return {widen(re_), widen(im_)};
}

std::string IntervalComplex::to_string(int digits) const {
  return re_.to_string(digits) + " + " + im_.to_string(digits) + "*i";
}

IntervalComplex operator+(IntervalComplex a, const IntervalComplex& b) { return a += b; }
IntervalComplex operator-(IntervalComplex a, const IntervalComplex& b) { return a -= b; }
IntervalComplex operator*(IntervalComplex a, const IntervalComplex& b) { return a *= b; }
IntervalComplex operator*(const IntervalReal& a, const IntervalComplex& b) {
  return {a * b.re(), a * b.im()};
}
IntervalComplex operator/(IntervalComplex a, const IntervalComplex& b) { return a /= b; }

IntervalComplex conj(const IntervalComplex& z) { return {z.re(), -z.im()}; }

IntervalReal abs_sq(const IntervalComplex& z) { return sqr(z.re()) + sqr(z.im()); }

IntervalReal abs(const IntervalComplex& z) { return sqrt(abs_sq(z)); }

IntervalComplex exp(const IntervalComplex& z) {
  const IntervalReal scale = exp(z.re());
  return {scale * cos(z.im()), scale * sin(z.im())};
}

IntervalComplex pow(const IntervalComplex& z, unsigned long n) {
  IntervalComplex result(IntervalReal::from_int(1L, z.precision()), IntervalReal(z.precision()));
  IntervalComplex base = z;
  while (n > 0) {
    if (n & 1UL) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

IntervalComplex interval_complex_arith(ComplexOp op, const IntervalComplex& a,
                                       const IntervalComplex* b) {
  if (op != ComplexOp::exp && b == nullptr) throw DomainError("binary operation needs two operands");
  switch (op) {
    case ComplexOp::add: return a + *b;
    case ComplexOp::mul: return a * *b;
    case ComplexOp::div: return a / *b;
    case ComplexOp::exp: return exp(a);
  }
  throw InternalError("unreachable complex op");
}

const char* to_string(Certainty c) {
  switch (c) {
    case Certainty::holds: return "holds";
    case Certainty::violated: return "violated";
    case Certainty::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

}  // namespace special_locus
