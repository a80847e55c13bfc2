#include "special_locus/polynomials.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace special_locus {

namespace {

const BigInt& zero_int() {
  static const BigInt zero(0);
  return zero;
}

}  // namespace

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::constant(const BigInt& c) { return UniPoly(std::vector<BigInt>{c}); }

UniPoly UniPoly::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> coeffs(k + 1);
  coeffs[k] = c;
  return UniPoly(std::move(coeffs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& UniPoly::leading() const {
  if (coeffs_.empty()) throw ZeroPolynomial("leading coefficient");
  return coeffs_.back();
}

const BigInt& UniPoly::operator[](std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : zero_int();
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const BigInt& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

BigInt UniPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRat UniPoly::eval(const BigRat& x) const {
  BigRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + BigRat(*it);
    acc.canonicalize();
  }
  return acc;
}

IntervalComplex UniPoly::eval(const IntervalComplex& x) const {
  const Precision p = x.precision();
  IntervalComplex acc(p);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + IntervalComplex::from_int(*it, p);
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return UniPoly(std::move(out));
}

namespace {

// Appends "c*m" to out with sign handling; m is "" for the constant term.
void append_term(std::string& out, const BigInt& c, const std::string& monomial) {
  if (c == 0) return;
  const bool negative = c < 0;
  const BigInt mag = abs(c);
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (monomial.empty()) {
    out += mag.get_str();
  } else if (mag == 1) {
    out += monomial;
  } else {
    out += mag.get_str() + "*" + monomial;
  }
}

std::string power_of(char var, std::size_t k) {
  if (k == 0) return "";
  std::string s(1, var);
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

}  // namespace

std::string UniPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) append_term(out, coeffs_[k], power_of(var, k));
  return out;
}

UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
UniPoly operator*(UniPoly a, const BigInt& b) { return a *= b; }

std::optional<UniPoly> divide_exact(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial("divide_exact divisor");
  if (a.is_zero()) return UniPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<BigInt> rem = a.coeffs();
  std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const BigInt& lc = b.leading();
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    BigInt q = top / lc;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b[j];
    quot[k] = std::move(q);
  }
  for (const auto& c : rem) {
    if (c != 0) return std::nullopt;
  }
  return UniPoly(std::move(quot));
}

UniPoly pseudo_remainder(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial("pseudo_remainder divisor");
  std::vector<BigInt> r = a.coeffs();
  const BigInt& lc = b.leading();
  const auto db = static_cast<std::size_t>(b.degree());
  while (!r.empty() && r.size() > db) {
    const std::size_t shift = r.size() - 1 - db;
    const BigInt top = r.back();
    for (auto& c : r) c *= lc;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= top * b[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return UniPoly(std::move(r));
}

BigInt content(const UniPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::pair<BigInt, UniPoly> content_primitive(const UniPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("content_primitive");
  BigInt c = content(p);
  std::vector<BigInt> coeffs = p.coeffs();
  for (auto& x : coeffs) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return {std::move(c), UniPoly(std::move(coeffs))};
}

UniPoly primitive_part(const UniPoly& p) { return content_primitive(p).second; }

namespace {

UniPoly normalize_sign(UniPoly p) {
  if (!p.is_zero() && p.leading() < 0) p = -p;
  return p;
}

}  // namespace

UniPoly gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw ZeroPolynomial("gcd of two zero polynomials");
  if (p.is_zero()) return normalize_sign(primitive_part(q));
  if (q.is_zero()) return normalize_sign(primitive_part(p));
  UniPoly a = primitive_part(p);
  UniPoly b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    UniPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? UniPoly{} : primitive_part(r);
  }
  return normalize_sign(std::move(a));
}

UniPoly gcd_univariate(const UniPoly& p, const UniPoly& q) { return gcd(p, q); }

std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("squarefree_decomposition");
  std::vector<SquarefreeFactor> out;
  UniPoly u = normalize_sign(primitive_part(p));
  if (u.degree() < 1) return out;
  UniPoly g = gcd(u, u.derivative());
  UniPoly w = *divide_exact(u, g);
  for (int k = 1; w.degree() > 0; ++k) {
    UniPoly y = gcd(w, g);
    UniPoly z = *divide_exact(w, y);
    if (z.degree() > 0) out.push_back({normalize_sign(std::move(z)), k});
    g = *divide_exact(g, y);
    w = std::move(y);
  }
  return out;
}

UniPoly squarefree_part(const UniPoly& p) {
  UniPoly out{1};
  for (const auto& f : squarefree_decomposition(p)) out *= f.factor;
  return out;
}

const UniPoly& cyclotomic(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclotomic polynomial of order 0");
  static std::mutex mutex;
  static std::unordered_map<std::uint64_t, std::unique_ptr<const UniPoly>> table;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = table.find(n); it != table.end()) return *it->second;
  }
  // Y^n - 1 divided by Phi_d for every proper divisor d.
  UniPoly acc = UniPoly::monomial(1, n) - UniPoly{1};
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto q = divide_exact(acc, cyclotomic(d));
    if (!q) throw InternalError("cyclotomic division was not exact");
    acc = std::move(*q);
  }
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = table.emplace(n, std::make_unique<const UniPoly>(std::move(acc)));
  return *it->second;
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly::BiPoly(std::vector<std::vector<BigInt>> grid) : grid_(std::move(grid)) { trim(); }

BiPoly BiPoly::from_x(const UniPoly& p) {
  std::vector<std::vector<BigInt>> grid;
  for (const auto& c : p.coeffs()) grid.push_back({c});
  return BiPoly(std::move(grid));
}

BiPoly BiPoly::from_y(const UniPoly& p) { return BiPoly({p.coeffs()}); }

void BiPoly::trim() {
  std::size_t width = 0;
  for (auto& row : grid_) {
    while (!row.empty() && row.back() == 0) row.pop_back();
    width = std::max(width, row.size());
  }
  while (!grid_.empty() && grid_.back().empty()) grid_.pop_back();
  for (auto& row : grid_) row.resize(width);
  deg_y_ = static_cast<int>(width) - 1;
  if (grid_.empty()) deg_y_ = -1;
}

const BigInt& BiPoly::coeff(std::size_t i, std::size_t j) const {
  if (i < grid_.size() && j < grid_[i].size()) return grid_[i][j];
  return zero_int();
}

UniPoly BiPoly::coeff_in_x(std::size_t i) const {
  if (i >= grid_.size()) return {};
  return UniPoly(grid_[i]);
}

UniPoly BiPoly::coeff_in_y(std::size_t j) const {
  std::vector<BigInt> out;
  out.reserve(grid_.size());
  for (const auto& row : grid_) out.push_back(j < row.size() ? row[j] : BigInt(0));
  return UniPoly(std::move(out));
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& row : out.grid_)
    for (auto& c : row) c = -c;
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  if (rhs.grid_.size() > grid_.size()) grid_.resize(rhs.grid_.size());
  for (std::size_t i = 0; i < rhs.grid_.size(); ++i) {
    auto& row = grid_[i];
    if (rhs.grid_[i].size() > row.size()) row.resize(rhs.grid_[i].size());
    for (std::size_t j = 0; j < rhs.grid_[i].size(); ++j) row[j] += rhs.grid_[i][j];
  }
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) { return *this += -rhs; }

BiPoly& BiPoly::operator*=(const BiPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    grid_.clear();
    trim();
    return *this;
  }
  const std::size_t nx = grid_.size() + rhs.grid_.size() - 1;
  const std::size_t ny = static_cast<std::size_t>(deg_y_ + rhs.deg_y_ + 1);
  std::vector<std::vector<BigInt>> out(nx, std::vector<BigInt>(ny));
  for (std::size_t i = 0; i < grid_.size(); ++i)
    for (std::size_t j = 0; j < grid_[i].size(); ++j) {
      if (grid_[i][j] == 0) continue;
      for (std::size_t k = 0; k < rhs.grid_.size(); ++k)
        for (std::size_t l = 0; l < rhs.grid_[k].size(); ++l)
          out[i + k][j + l] += grid_[i][j] * rhs.grid_[k][l];
    }
  grid_ = std::move(out);
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const BigInt& rhs) {
  for (auto& row : grid_)
    for (auto& c : row) c *= rhs;
  trim();
  return *this;
}

IntervalComplex BiPoly::eval(const IntervalComplex& x, const IntervalComplex& y) const {
  IntervalComplex acc(std::max(x.precision(), y.precision()));
  for (std::size_t i = grid_.size(); i-- > 0;) acc = acc * x + UniPoly(grid_[i]).eval(y);
  return acc;
}

UniPoly BiPoly::substitute_x(const BigInt& x0) const {
  UniPoly acc;
  for (std::size_t i = grid_.size(); i-- > 0;) {
    acc *= x0;
    acc += UniPoly(grid_[i]);
  }
  return acc;
}

UniPoly BiPoly::substitute_y(const BigInt& y0) const {
  std::vector<BigInt> out;
  out.reserve(grid_.size());
  for (const auto& row : grid_) out.push_back(UniPoly(row).eval(y0));
  return UniPoly(std::move(out));
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = grid_.size(); i-- > 0;) {
    for (std::size_t j = grid_[i].size(); j-- > 0;) {
      std::string mono = power_of('X', i);
      const std::string ypart = power_of('Y', j);
      if (!ypart.empty()) mono += (mono.empty() ? "" : "*") + ypart;
      append_term(out, grid_[i][j], mono);
    }
  }
  return out;
}

BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }

BigInt content(const BiPoly& p) {
  BigInt g = 0;
  for (int i = 0; i <= p.deg_x(); ++i)
    for (int j = 0; j <= p.deg_y(); ++j)
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.coeff(i, j).get_mpz_t());
  return g;
}

std::pair<BigInt, BiPoly> content_primitive(const BiPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("content_primitive");
  BigInt c = content(p);
  std::vector<std::vector<BigInt>> grid;
  for (int i = 0; i <= p.deg_x(); ++i) {
    std::vector<BigInt> row;
    for (int j = 0; j <= p.deg_y(); ++j) {
      BigInt v = p.coeff(i, j);
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
      row.push_back(std::move(v));
    }
    grid.push_back(std::move(row));
  }
  return {std::move(c), BiPoly(std::move(grid))};
}

UniPoly resultant_y(const BiPoly& f, const UniPoly& g) {
  if (f.is_zero()) throw ZeroPolynomial("resultant_y first argument");
  if (g.degree() < 1) throw DomainError("resultant_y needs deg g >= 1");
  const auto m = static_cast<std::size_t>(f.deg_y());
  const auto n = static_cast<std::size_t>(g.degree());
  const std::size_t size = m + n;

  // Sylvester matrix over Z[X], highest coefficients first.
  std::vector<std::vector<UniPoly>> mat(size, std::vector<UniPoly>(size));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) mat[r][r + k] = f.coeff_in_y(m - k);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) mat[n + r][r + k] = UniPoly::constant(g[n - k]);

  // Bareiss fraction-free elimination; every division is exact.
  bool negate = false;
  UniPoly previous{1};
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (mat[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && mat[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == size) return {};
      std::swap(mat[k], mat[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        UniPoly num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
        auto q = divide_exact(num, previous);
        if (!q) throw InternalError("Bareiss step was not exact");
        mat[i][j] = std::move(*q);
      }
      mat[i][k] = UniPoly{};
    }
    previous = mat[k][k];
  }
  UniPoly det = mat[size - 1][size - 1];
  return negate ? -det : det;
}

AxisLines axis_line_factors(const BiPoly& f) {
  if (f.is_constant()) throw ConstantPolynomial("axis_line_factors");
  UniPoly in_x;  // gcd of the Y^j coefficients, a polynomial in X
  for (int j = 0; j <= f.deg_y(); ++j) {
    UniPoly c = f.coeff_in_y(j);
    if (!c.is_zero()) in_x = in_x.is_zero() ? normalize_sign(primitive_part(c)) : gcd(in_x, c);
  }
  UniPoly in_y;
  for (int i = 0; i <= f.deg_x(); ++i) {
    UniPoly c = f.coeff_in_x(i);
    if (!c.is_zero()) in_y = in_y.is_zero() ? normalize_sign(primitive_part(c)) : gcd(in_y, c);
  }
  return {in_x.degree() >= 1, in_y.degree() >= 1};
}

IntervalComplex eval_interval(const BiPoly& f, const IntervalComplex& x,
                              const IntervalComplex& y) {
  return f.eval(x, y);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

constexpr int kMaxParsedDegree = 512;

// Sparse rational polynomial used only while parsing.
using RatTerms = std::map<std::pair<int, int>, BigRat>;

RatTerms rat_constant(const BigRat& c) {
  RatTerms t;
  if (c != 0) t[{0, 0}] = c;
  return t;
}

void rat_add(RatTerms& a, const RatTerms& b, int sign) {
  for (const auto& [k, v] : b) {
    BigRat& slot = a[k];
    slot += sign > 0 ? v : BigRat(-v);
    slot.canonicalize();
    if (slot == 0) a.erase(k);
  }
}

RatTerms rat_mul(const RatTerms& a, const RatTerms& b, std::size_t position) {
  RatTerms out;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) {
      const std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
      if (k.first > kMaxParsedDegree || k.second > kMaxParsedDegree) {
        throw SyntaxError(position, "polynomial degree exceeds " + std::to_string(kMaxParsedDegree));
      }
      BigRat& slot = out[k];
      slot += va * vb;
      slot.canonicalize();
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatTerms parse() {
    RatTerms out = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RatTerms expr() {
    RatTerms acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      rat_add(acc, term(), c == '+' ? 1 : -1);
    }
    return acc;
  }

  RatTerms term() {
    RatTerms acc = unary();
    while (peek() == '*') {
      ++pos_;
      const std::size_t at = pos_;
      acc = rat_mul(acc, unary(), at);
    }
    return acc;
  }

  RatTerms unary() {
    const char c = peek();
    if (c == '+' || c == '-') {
      ++pos_;
      RatTerms inner = unary();
      if (c == '-') {
        for (auto& [k, v] : inner) v = -v;
      }
      return inner;
    }
    return power();
  }

  RatTerms power() {
    RatTerms base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("exponent must be a nonnegative integer literal");
      }
      const BigInt e = integer();
      if (e > kMaxParsedDegree) throw SyntaxError(at, "exponent too large");
      RatTerms acc = rat_constant(1);
      for (unsigned long k = e.get_ui(); k > 0; --k) acc = rat_mul(acc, base, at);
      base = std::move(acc);
    }
    reject_implicit_multiplication();
    return base;
  }

  void reject_implicit_multiplication() {
    const char c = peek();
    if (c == '(' || std::isalnum(static_cast<unsigned char>(c))) {
      fail("implicit multiplication is not allowed; use '*'");
    }
  }

  BigInt integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  RatTerms primary() {
    const char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (c == '(') {
      ++pos_;
      RatTerms inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigRat value(integer());
      if (peek() == '/') {
        ++pos_;
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          fail("expected an integer denominator after '/'");
        }
        const std::size_t at = pos_;
        const BigInt den = integer();
        if (den == 0) throw SyntaxError(at, "zero denominator");
        value /= BigRat(den);
        value.canonicalize();
      }
      return rat_constant(value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      RatTerms t;
      if (name == "X" || name == "x") {
        t[{1, 0}] = 1;
      } else if (name == "Y" || name == "y") {
        t[{0, 1}] = 1;
      } else {
        throw UnsupportedVariable(start, name);
      }
      return t;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_polynomial(std::string_view text) {
  const RatTerms terms = Parser(text).parse();
  if (terms.empty()) throw ZeroPolynomial("parse_polynomial");
  BigInt lcm = 1;
  int dx = 0, dy = 0;
  for (const auto& [k, v] : terms) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    dx = std::max(dx, k.first);
    dy = std::max(dy, k.second);
  }
  std::vector<std::vector<BigInt>> grid(static_cast<std::size_t>(dx + 1),
                                        std::vector<BigInt>(static_cast<std::size_t>(dy + 1)));
  for (const auto& [k, v] : terms) {
    BigRat scaled = v * BigRat(lcm);
    scaled.canonicalize();
    grid[static_cast<std::size_t>(k.first)][static_cast<std::size_t>(k.second)] = scaled.get_num();
  }
  return content_primitive(BiPoly(std::move(grid))).second;
}

}  // namespace special_locus
