#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

/// Default truncation order for series, umbrae and arrays.
inline constexpr std::size_t kDefaultOrder = 16;

/// Formal power series truncated at z^N.
///
/// Holds exactly N+1 coefficients. Binary operations require equal orders
/// and throw std::invalid_argument otherwise; nothing past z^N is claimed.
class Series {
 public:
  /// The zero series of order N.
  explicit Series(std::size_t order);
  /// Coefficients of z^0..z^N, lowest first. Must be non-empty.
  explicit Series(std::vector<Rational> coefficients);

  static Series one(std::size_t order);
  /// The series z.
  static Series variable(std::size_t order);
  static Series monomial(std::size_t order, std::size_t power, const Rational& c = Rational(1));

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Same coefficients re-truncated (or zero-padded) to a new order.
  Series with_order(std::size_t order) const;

  Series derivative() const;
  /// Antiderivative with zero constant term; the z^N term is truncated away.
  Series integral() const;

  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series& operator*=(const Series& rhs);
  Series& operator*=(const Rational& c);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Series& b) { return a *= b; }
  friend Series operator*(Series a, const Rational& c) { return a *= c; }
  friend Series operator*(const Rational& c, Series a) { return a *= c; }
  Series operator-() const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Cauchy product truncated to the common order.
Series mul(const Series& f, const Series& g);
Series add(const Series& f, const Series& g);

/// Multiplicative inverse 1/f. Requires f(0) != 0.
Series reciprocal(const Series& f);

/// f(g(z)) by Horner evaluation. Requires g(0) = 0.
Series compose(const Series& f, const Series& g);

/// Formal logarithm of f with f(0) = 1.
Series log_unit(const Series& f);

/// Formal exponential of f with f(0) = 0.
Series exp_zero(const Series& f);

/// f^k; negative k requires f(0) != 0.
Series pow_int(const Series& f, long k);

/// f^c = exp(c log f). Requires f(0) = 1.
Series pow_rational(const Series& f, const Rational& c);

/// Compositional inverse by triangular coefficient solving.
///
/// Requires f(0) = 0 and [z]f != 0. Coefficient n of the result is fixed by
/// the z^n coefficient of f(g), using the fact that [z^n] g^k for k >= 2
/// never involves g_n.
Series revert_newton(const Series& f);

/// Compositional inverse by the Lagrange coefficient rule
/// [z^n] g = (1/n) [z^(n-1)] h^(-n), where f = z h.
Series revert_lagrange(const Series& f);

}  // namespace riordan
