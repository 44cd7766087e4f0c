#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "riordan/rational.hpp"
#include "riordan/riordan_array.hpp"

namespace riordan {

/// Dense univariate polynomial in x, coefficients ascending, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  /// x^n
  static Polynomial monomial(std::size_t n, const Rational& c = Rational(1));

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of x^i, zero past the degree.
  Rational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);

  /// Descending powers, e.g. "x^3 - 3x^2 + 2x"; non-integer coefficients in
  /// parentheses, e.g. "(1/2)x^2 - 1".
  std::string str() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Dense polynomial in x and y; coefficient grid indexed [i][j] for x^i y^j.
class Bivariate {
 public:
  explicit Bivariate(std::size_t degree);

  std::size_t degree() const { return grid_.size() - 1; }
  Rational& at(std::size_t i, std::size_t j) { return grid_.at(i).at(j); }
  const Rational& at(std::size_t i, std::size_t j) const { return grid_.at(i).at(j); }

  Bivariate& operator+=(const Bivariate& rhs);
  /// p(x) q(y) added into this grid.
  void add_product(const Polynomial& px, const Polynomial& qy, const Rational& scale = Rational(1));

  friend bool operator==(const Bivariate&, const Bivariate&) = default;

 private:
  std::vector<std::vector<Rational>> grid_;
};

/// s_n(x) = sum_k entry(n, k) x^k for n = 0..n_max.
std::vector<Polynomial> sheffer_sequence(const RiordanArray& r, std::size_t n_max);

/// (sr)_n(x) = sum_k a_{n,k} r_k(x), with r_k the Sheffer sequence of b.
std::vector<Polynomial> umbral_compose(const RiordanArray& a, const RiordanArray& b, std::size_t n_max);

/// Coefficient array of a polynomial sequence, one row per polynomial.
Triangle coefficient_triangle(Flavor flavor, std::span<const Polynomial> sequence);

struct SheffIdentityReport {
  std::size_t n_max = 0;
  std::vector<std::size_t> failing;  // indices n where the sides differ
  bool holds() const { return failing.empty(); }
};

/// Expands both sides of the Sheffer identity over (x, y) for n <= n_max.
///
/// Exponential: s_n(x+y) = sum_k binom(n,k) s_k(x) p_{n-k}(y).
/// Ordinary:    s_n(z)   = sum_k s_k(x) p_{n-k}(y) with z^k -> sum_i x^i y^(k-i).
/// p is the Sheffer sequence of (ε, α).
SheffIdentityReport sheffer_identity_check(const RiordanArray& r, std::size_t n_max);

/// s_n(x+y) (exponential) or s_n(z) with z^k -> h_k(x,y) (ordinary), as a grid.
Bivariate sheffer_identity_lhs(Flavor flavor, const Polynomial& s);

}  // namespace riordan
