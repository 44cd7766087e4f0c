#include "riordan/umbra.hpp"

#include <charconv>
#include <optional>
#include <stdexcept>
#include <string>

#include "riordan/coefficients.hpp"

namespace riordan {

namespace {

void require_same_order(const Umbra& a, const Umbra& b, const char* op) {
  if (a.order() != b.order()) {
    throw std::invalid_argument(std::string(op) + ": umbra order mismatch (" + std::to_string(a.order()) +
                                " vs " + std::to_string(b.order()) + ")");
  }
}

// z f(z), truncated to the order of f
Series shift_up(const Series& f) {
  Series s(f.order());
  for (std::size_t i = 0; i < f.order(); ++i) s[i + 1] = f[i];
  return s;
}

Rational egf_moment(const Series& f, std::size_t m) { return f[m] * factorial(m); }

// E[γ(γ - n.α)^(n-1)] given the EGF of (-n).α
Rational abel_from_power(const Umbra& gamma, const Series& neg_n_alpha, std::size_t n) {
  Rational total;
  for (std::size_t j = 0; j < n; ++j) {
    total += binomial(static_cast<long>(n - 1), static_cast<long>(j)) * gamma.moment(j + 1) *
             egf_moment(neg_n_alpha, n - 1 - j);
  }
  return total;
}

std::optional<std::size_t> parse_delta(std::string_view name) {
  if (!name.starts_with("delta(") || !name.ends_with(")")) return std::nullopt;
  const std::string_view digits = name.substr(6, name.size() - 7);
  std::size_t k = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || k == 0) {
    throw std::invalid_argument("delta(k) needs a positive integer k, got '" + std::string(name) + "'");
  }
  return k;
}

}  // namespace

Umbra::Umbra(std::vector<Rational> moments) : moments_(std::move(moments)) {
  if (moments_.empty()) throw std::invalid_argument("umbra needs at least the moment a_0");
  if (moments_[0] != Rational(1)) throw std::invalid_argument("umbra moment a_0 must be 1");
}

Umbra Umbra::from_egf(const Series& f) {
  std::vector<Rational> m(f.order() + 1);
  for (std::size_t n = 0; n <= f.order(); ++n) m[n] = egf_moment(f, n);
  return Umbra(std::move(m));
}

Series Umbra::egf() const {
  Series f(order());
  for (std::size_t n = 0; n <= order(); ++n) f[n] = moments_[n] / factorial(n);
  return f;
}

std::vector<std::string> named_umbrae() {
  return {"augmentation", "unity", "singleton", "bernoulli", "bell", "boolean-unity", "catalan", "delta(k)"};
}

Umbra named(std::string_view name, std::size_t order) {
  std::vector<Rational> m(order + 1);
  m[0] = Rational(1);
  if (name == "augmentation" || name == "ε") {
    return Umbra(std::move(m));
  }
  if (name == "unity" || name == "υ") {
    return scalar_umbra(Rational(1), order);
  }
  if (name == "singleton" || name == "χ") {
    if (order >= 1) m[1] = Rational(1);
    return Umbra(std::move(m));
  }
  if (name == "bernoulli" || name == "ι") {
    // z / (e^z - 1)
    Series quotient(order);
    for (std::size_t n = 0; n <= order; ++n) quotient[n] = factorial(n + 1).inverse();
    return Umbra::from_egf(reciprocal(quotient));
  }
  if (name == "bell" || name == "β") {
    Series e(order);
    for (std::size_t n = 1; n <= order; ++n) e[n] = factorial(n).inverse();
    return Umbra::from_egf(exp_zero(e));
  }
  if (name == "boolean-unity" || name == "ῡ") {
    for (std::size_t n = 1; n <= order; ++n) m[n] = factorial(n);
    return Umbra(std::move(m));
  }
  if (name == "catalan" || name == "ς") {
    for (std::size_t n = 1; n <= order; ++n) {
      const auto ln = static_cast<long>(n);
      m[n] = factorial(n) * binomial(2 * ln, ln) / Rational(ln + 1);
    }
    return Umbra(std::move(m));
  }
  if (auto k = parse_delta(name)) {
    if (*k <= order) m[*k] = Rational(1);
    return Umbra(std::move(m));
  }
  throw std::invalid_argument("unknown umbra '" + std::string(name) + "'");
}

Umbra scalar_umbra(const Rational& c, std::size_t order) {
  std::vector<Rational> m(order + 1);
  m[0] = Rational(1);
  for (std::size_t n = 1; n <= order; ++n) m[n] = m[n - 1] * c;
  return Umbra(std::move(m));
}

Umbra operator+(const Umbra& gamma, const Umbra& alpha) {
  require_same_order(gamma, alpha, "umbral sum");
  return Umbra::from_egf(gamma.egf() * alpha.egf());
}

Umbra dot_int(long k, const Umbra& alpha) { return Umbra::from_egf(pow_int(alpha.egf(), k)); }

Umbra dot_rational(const Rational& c, const Umbra& alpha) {
  if (c.is_integer() && c.numerator().fits_slong_p()) return dot_int(c.numerator().get_si(), alpha);
  return Umbra::from_egf(pow_rational(alpha.egf(), c));
}

Umbra dot(const Umbra& gamma, const Umbra& alpha) {
  require_same_order(gamma, alpha, "dot");
  return Umbra::from_egf(compose(gamma.egf(), log_unit(alpha.egf())));
}

Umbra derivative(const Umbra& alpha) {
  std::vector<Rational> m(alpha.order() + 1);
  m[0] = Rational(1);
  for (std::size_t n = 1; n <= alpha.order(); ++n) m[n] = Rational(static_cast<long>(n)) * alpha.moment(n - 1);
  return Umbra(std::move(m));
}

Umbra compose_umbra(const Umbra& gamma, const Umbra& alpha) {
  require_same_order(gamma, alpha, "compose_umbra");
  return Umbra::from_egf(compose(gamma.egf(), shift_up(alpha.egf())));
}

Rational sum_power_moment(const Umbra& gamma, const Umbra& alpha, long k, std::size_t m) {
  require_same_order(gamma, alpha, "sum_power_moment");
  if (m > gamma.order()) throw std::out_of_range("sum_power_moment: m beyond truncation order");
  return egf_moment(gamma.egf() * pow_int(alpha.egf(), k), m);
}

Rational abel_moment(const Umbra& gamma, const Umbra& alpha, std::size_t n) {
  require_same_order(gamma, alpha, "abel_moment");
  if (n == 0) throw std::invalid_argument("abel_moment: n must be at least 1");
  if (n > gamma.order()) throw std::out_of_range("abel_moment: n beyond truncation order");
  return abel_from_power(gamma, pow_int(alpha.egf(), -static_cast<long>(n)), n);
}

Umbra K_umbra(const Umbra& gamma, const Umbra& alpha) {
  require_same_order(gamma, alpha, "K_umbra");
  const std::size_t order = gamma.order();
  std::vector<Rational> m(order + 1);
  m[0] = Rational(1);
  if (order == 0) return Umbra(std::move(m));
  const Series inv = reciprocal(alpha.egf());
  Series power = inv;  // f_α^(-n)
  for (std::size_t n = 1; n <= order; ++n) {
    m[n] = abel_from_power(gamma, power, n);
    if (n < order) power *= inv;
  }
  return Umbra(std::move(m));
}

Umbra K_umbra(const Umbra& alpha) { return K_umbra(alpha, alpha); }

Umbra L_umbra(const Umbra& gamma, const Umbra& alpha) { return dot_int(-1, K_umbra(gamma, alpha)); }

Umbra L_umbra(const Umbra& alpha) { return L_umbra(alpha, alpha); }

Series inverse_series_by_reversion(const Umbra& alpha) { return revert_newton(shift_up(alpha.egf())); }

Series inverse_series_by_involution(const Umbra& alpha) {
  return derivative(L_umbra(alpha)).egf() - Series::one(alpha.order());
}

Series comp_inverse_derivative(const Umbra& alpha) {
  Series by_reversion = inverse_series_by_reversion(alpha);
  if (by_reversion != inverse_series_by_involution(alpha)) {
    throw std::logic_error("comp_inverse_derivative: reversion and Lagrange involution disagree");
  }
  return by_reversion;
}

}  // namespace riordan
