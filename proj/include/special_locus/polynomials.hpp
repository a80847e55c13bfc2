#pragma once

// Exact integer polynomials in one and two variables.
//
// BiPoly stores a dense grid c[i][j] for the monomial X^i Y^j. X is the outer
// variable: F = sum_i g_i(Y) X^i.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "special_locus/numerics.hpp"

namespace special_locus {

class UniPoly {
 public:
  UniPoly() = default;
  // Coefficients from low to high degree; trailing zeros are dropped.
  explicit UniPoly(std::vector<BigInt> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  static UniPoly constant(const BigInt& c);
  static UniPoly monomial(const BigInt& c, std::size_t k);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& leading() const;
  // Coefficient of x^k, zero past the degree.
  const BigInt& operator[](std::size_t k) const;
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  UniPoly& operator*=(const BigInt& rhs);

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  BigInt eval(const BigInt& x) const;
  BigRat eval(const BigRat& x) const;
  IntervalComplex eval(const IntervalComplex& x) const;

  UniPoly derivative() const;

  std::string to_string(char var = 'X') const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

UniPoly operator+(UniPoly a, const UniPoly& b);
UniPoly operator-(UniPoly a, const UniPoly& b);
UniPoly operator*(UniPoly a, const UniPoly& b);
UniPoly operator*(UniPoly a, const BigInt& b);

// a = q * b exactly over Z[x], when such a q exists.
std::optional<UniPoly> divide_exact(const UniPoly& a, const UniPoly& b);
// r with lc(b)^k * a = q * b + r and deg r < deg b.
UniPoly pseudo_remainder(const UniPoly& a, const UniPoly& b);

BigInt content(const UniPoly& p);
// (content > 0, primitive part); content * primitive == p.
std::pair<BigInt, UniPoly> content_primitive(const UniPoly& p);
UniPoly primitive_part(const UniPoly& p);

// Primitive gcd with positive leading coefficient; gcd(0, 0) is rejected.
UniPoly gcd(const UniPoly& p, const UniPoly& q);
UniPoly gcd_univariate(const UniPoly& p, const UniPoly& q);

// Yun's algorithm: p = c * prod s_k^k with s_k squarefree and pairwise coprime.
struct SquarefreeFactor {
  UniPoly factor;
  int multiplicity;
};
std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& p);
UniPoly squarefree_part(const UniPoly& p);

// N-th cyclotomic polynomial, memoized process-wide.
const UniPoly& cyclotomic(std::uint64_t n);

class BiPoly {
 public:
  BiPoly() = default;
  // grid[i][j] is the coefficient of X^i Y^j. Rows may be ragged.
  explicit BiPoly(std::vector<std::vector<BigInt>> grid);

  static BiPoly from_x(const UniPoly& p);  // p(X)
  static BiPoly from_y(const UniPoly& p);  // p(Y)

  bool is_zero() const noexcept { return grid_.empty(); }
  bool is_constant() const noexcept { return deg_x() <= 0 && deg_y() <= 0; }
  int deg_x() const noexcept { return static_cast<int>(grid_.size()) - 1; }
  int deg_y() const noexcept { return deg_y_; }
  const BigInt& coeff(std::size_t i, std::size_t j) const;

  // g_i(Y), the coefficient of X^i.
  UniPoly coeff_in_x(std::size_t i) const;
  // The coefficient of Y^j as a polynomial in X.
  UniPoly coeff_in_y(std::size_t j) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const BiPoly& rhs);
  BiPoly& operator*=(const BigInt& rhs);

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.grid_ == b.grid_; }

  IntervalComplex eval(const IntervalComplex& x, const IntervalComplex& y) const;
  // F(x0, Y) as a polynomial in Y.
  UniPoly substitute_x(const BigInt& x0) const;
  // F(X, y0) as a polynomial in X.
  UniPoly substitute_y(const BigInt& y0) const;

  std::string to_string() const;

 private:
  void trim();

  std::vector<std::vector<BigInt>> grid_;  // rectangular after trim()
  int deg_y_ = -1;
};

BiPoly operator+(BiPoly a, const BiPoly& b);
BiPoly operator-(BiPoly a, const BiPoly& b);
BiPoly operator*(BiPoly a, const BiPoly& b);

BigInt content(const BiPoly& p);
std::pair<BigInt, BiPoly> content_primitive(const BiPoly& p);

// Sylvester determinant of F (as a polynomial in Y over Z[X]) and g(Y).
UniPoly resultant_y(const BiPoly& f, const UniPoly& g);

struct AxisLines {
  bool has_vertical = false;
  bool has_horizontal = false;
};

AxisLines axis_line_factors(const BiPoly& f);

IntervalComplex eval_interval(const BiPoly& f, const IntervalComplex& x,
                              const IntervalComplex& y);

// Grammar (EBNF, whitespace ignored):
//   expr    = term { ("+" | "-") term } ;
//   term    = unary { "*" unary } ;
//   unary   = ("+" | "-") unary | power ;
//   power   = primary [ "^" integer ] ;
//   primary = integer [ "/" integer ] | "X" | "Y" | "(" expr ")" ;
// Rational coefficients are cleared and the primitive part returned.
BiPoly parse_polynomial(std::string_view text);

}  // namespace special_locus
