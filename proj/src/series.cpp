#include "riordan/series.hpp"

#include <stdexcept>
#include <string>

namespace riordan {

namespace {

void require_same_order(const Series& f, const Series& g, const char* op) {
  if (f.order() != g.order()) {
    throw std::invalid_argument(std::string(op) + ": order mismatch (" + std::to_string(f.order()) +
                                " vs " + std::to_string(g.order()) + ")");
  }
}

void require_reversible(const Series& f, const char* op) {
  if (!f[0].is_zero()) throw std::domain_error(std::string(op) + ": f(0) must be 0");
  if (f.order() == 0) return;
  if (f[1].is_zero()) throw std::domain_error(std::string(op) + ": [z]f must be nonzero");
}

}  // namespace

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

Series Series::one(std::size_t order) { return monomial(order, 0); }

Series Series::variable(std::size_t order) { return monomial(order, 1); }

Series Series::monomial(std::size_t order, std::size_t power, const Rational& c) {
  Series s(order);
  if (power <= order) s.coeffs_[power] = c;
  return s;
}

Series Series::with_order(std::size_t order) const {
  Series s(order);
  for (std::size_t i = 0; i <= order && i < coeffs_.size(); ++i) s.coeffs_[i] = coeffs_[i];
  return s;
}

Series Series::derivative() const {
  Series d(order());
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.coeffs_[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return d;
}

Series Series::integral() const {
  Series s(order());
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
    s.coeffs_[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
  }
  return s;
}

Series& Series::operator+=(const Series& rhs) {
  require_same_order(*this, rhs, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& rhs) {
  require_same_order(*this, rhs, "sub");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Series& Series::operator*=(const Series& rhs) {
  require_same_order(*this, rhs, "mul");
  const std::size_t n = coeffs_.size();
  std::vector<mpq_class> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    const mpq_class& a = coeffs_[i].raw();
    for (std::size_t j = 0; i + j < n; ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      out[i + j] += a * rhs.coeffs_[j].raw();
    }
  }
  for (std::size_t i = 0; i < n; ++i) coeffs_[i] = Rational(out[i]);
  return *this;
}

Series& Series::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Series Series::operator-() const {
  Series s = *this;
  for (auto& x : s.coeffs_) x = -x;
  return s;
}

Series mul(const Series& f, const Series& g) { return f * g; }

Series add(const Series& f, const Series& g) { return f + g; }

Series reciprocal(const Series& f) {
  if (f[0].is_zero()) throw std::domain_error("reciprocal: f(0) must be nonzero");
  const std::size_t n = f.order();
  Series r(n);
  const Rational inv0 = f[0].inverse();
  r[0] = inv0;
  for (std::size_t m = 1; m <= n; ++m) {
    mpq_class acc;
    for (std::size_t k = 1; k <= m; ++k) acc += f[k].raw() * r[m - k].raw();
    r[m] = -Rational(acc) * inv0;
  }
  return r;
}

Series compose(const Series& f, const Series& g) {
  require_same_order(f, g, "compose");
  if (!g[0].is_zero()) throw std::domain_error("compose: inner series must have zero constant term");
  const std::size_t n = f.order();
  Series acc = Series::monomial(n, 0, f[n]);
  for (std::size_t i = n; i-- > 0;) {
    acc *= g;
    acc[0] += f[i];
  }
  return acc;
}

Series log_unit(const Series& f) {
  if (f[0] != Rational(1)) throw std::domain_error("log_unit: f(0) must be 1");
  const std::size_t n = f.order();
  Series g(n);
  // n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}
  for (std::size_t m = 1; m <= n; ++m) {
    mpq_class acc = f[m].raw() * static_cast<unsigned long>(m);
    for (std::size_t k = 1; k < m; ++k) acc -= g[k].raw() * f[m - k].raw() * static_cast<unsigned long>(k);
    g[m] = Rational(mpq_class(acc / static_cast<unsigned long>(m)));
  }
  return g;
}

Series exp_zero(const Series& f) {
  if (!f[0].is_zero()) throw std::domain_error("exp_zero: f(0) must be 0");
  const std::size_t n = f.order();
  Series h(n);
  h[0] = Rational(1);
  // n h_n = sum_{k=1}^{n} k f_k h_{n-k}
  for (std::size_t m = 1; m <= n; ++m) {
    mpq_class acc;
    for (std::size_t k = 1; k <= m; ++k) acc += f[k].raw() * h[m - k].raw() * static_cast<unsigned long>(k);
    h[m] = Rational(mpq_class(acc / static_cast<unsigned long>(m)));
  }
  return h;
}

Series pow_int(const Series& f, long k) {
  if (k < 0) return pow_int(reciprocal(f), -k);
  Series result = Series::one(f.order());
  Series base = f;
  auto e = static_cast<unsigned long>(k);
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Series pow_rational(const Series& f, const Rational& c) {
  if (f[0] != Rational(1)) throw std::domain_error("pow_rational: f(0) must be 1");
  return exp_zero(log_unit(f) * c);
}

Series revert_newton(const Series& f) {
  require_reversible(f, "revert_newton");
  const std::size_t n = f.order();
  Series g(n);
  if (n == 0) return g;
  // powers[k][m] = [z^m] g^k for k >= 1, filled column by column
  std::vector<std::vector<mpq_class>> powers(n + 1, std::vector<mpq_class>(n + 1));
  const Rational inv1 = f[1].inverse();
  for (std::size_t m = 1; m <= n; ++m) {
    mpq_class rest;
    for (std::size_t k = 2; k <= m; ++k) {
      mpq_class p;
      for (std::size_t i = 1; i + k <= m + 1; ++i) p += g[i].raw() * powers[k - 1][m - i];
      powers[k][m] = p;
      rest += f[k].raw() * p;
    }
    const Rational target = m == 1 ? Rational(1) : Rational();
    g[m] = (target - Rational(rest)) * inv1;
    powers[1][m] = g[m].raw();
  }
  return g;
}

Series revert_lagrange(const Series& f) {
  require_reversible(f, "revert_lagrange");
  const std::size_t n = f.order();
  Series g(n);
  if (n == 0) return g;
  Series h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = f[i + 1];
  const Series h_inv = reciprocal(h);
  Series power = h_inv;
  for (std::size_t m = 1; m <= n; ++m) {
    g[m] = power[m - 1] / Rational(static_cast<long>(m));
    if (m < n) power *= h_inv;
  }
  return g;
}

}  // namespace riordan
