#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "riordan/rational.hpp"
#include "riordan/series.hpp"

namespace riordan {

/// An umbra, identified with its moment sequence a_0 = 1, a_1, ..., a_N.
///
/// Equal moment sequences are interchangeable: every formula below uses
/// only moments of products of powers of distinct symbols, which factor by
/// uncorrelation, so copies stand in for the similar umbrae α', α'', ...
class Umbra {
 public:
  /// Throws std::invalid_argument unless moments is non-empty with a_0 = 1.
  explicit Umbra(std::vector<Rational> moments);

  /// Umbra whose exponential generating function is f; requires f(0) = 1.
  static Umbra from_egf(const Series& f);

  /// f(z) = 1 + sum a_n z^n / n!
  Series egf() const;

  std::size_t order() const { return moments_.size() - 1; }
  const Rational& moment(std::size_t n) const { return moments_.at(n); }
  std::span<const Rational> moments() const { return moments_; }

  friend bool operator==(const Umbra&, const Umbra&) = default;

 private:
  std::vector<Rational> moments_;
};

/// Registry identifiers: augmentation, unity, singleton, bernoulli, bell,
/// boolean-unity, catalan, delta(k). Greek aliases ε υ χ ι β ῡ ς are accepted.
std::vector<std::string> named_umbrae();

/// Throws std::invalid_argument for an unknown name.
Umbra named(std::string_view name, std::size_t order = kDefaultOrder);

/// Umbra with moments c^n (the scalar c viewed as an umbra).
Umbra scalar_umbra(const Rational& c, std::size_t order);

/// γ + α for uncorrelated summands: EGF product.
Umbra operator+(const Umbra& gamma, const Umbra& alpha);

/// k.α: EGF f_α^k.
Umbra dot_int(long k, const Umbra& alpha);

/// c.α: EGF f_α^c.
Umbra dot_rational(const Rational& c, const Umbra& alpha);

/// γ.α: EGF f_γ(log f_α).
Umbra dot(const Umbra& gamma, const Umbra& alpha);

/// ∂α: EGF 1 + z f_α(z), i.e. moments 1, n a_{n-1}.
Umbra derivative(const Umbra& alpha);

/// γ.β.∂α: EGF f_γ(z f_α(z)).
Umbra compose_umbra(const Umbra& gamma, const Umbra& alpha);

/// E[(γ + k.α)^m] = m! [z^m] f_γ f_α^k.
Rational sum_power_moment(const Umbra& gamma, const Umbra& alpha, long k, std::size_t m);

/// E[γ(γ - n.α)^(n-1)], expanded binomially over uncorrelated factors:
///   sum_j binom(n-1, j) E[γ^(j+1)] E[((-n).α)^(n-1-j)].
/// Throws std::invalid_argument for n = 0 and std::out_of_range beyond the order.
Rational abel_moment(const Umbra& gamma, const Umbra& alpha, std::size_t n);

/// K_{γ,α}: moments abel_moment(γ, α, n) for n >= 1.
Umbra K_umbra(const Umbra& gamma, const Umbra& alpha);
Umbra K_umbra(const Umbra& alpha);

/// Lagrange involution L_{γ,α} = -1.K_{γ,α}.
Umbra L_umbra(const Umbra& gamma, const Umbra& alpha);
Umbra L_umbra(const Umbra& alpha);

/// (z f_α(z))^<-1> by series reversion.
Series inverse_series_by_reversion(const Umbra& alpha);

/// (z f_α(z))^<-1> read off ∂(L_α): the EGF of the derivative minus 1.
Series inverse_series_by_involution(const Umbra& alpha);

/// (z f_α(z))^<-1>. Computes both routes above and throws std::logic_error
/// if they disagree.
Series comp_inverse_derivative(const Umbra& alpha);

}  // namespace riordan
