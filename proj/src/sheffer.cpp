#include "riordan/sheffer.hpp"

#include <stdexcept>

#include "riordan/coefficients.hpp"

namespace riordan {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(std::size_t n, const Rational& c) {
  std::vector<Rational> v(n + 1);
  v[n] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return Polynomial();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  std::vector<Rational> out(a.coeffs_);
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const Rational magnitude = c.sign() < 0 ? -c : c;
    if (i == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != Rational(1)) {
      out += magnitude.is_integer() ? magnitude.str() : "(" + magnitude.str() + ")";
    }
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Bivariate::Bivariate(std::size_t degree) : grid_(degree + 1, std::vector<Rational>(degree + 1)) {}

Bivariate& Bivariate::operator+=(const Bivariate& rhs) {
  if (rhs.degree() != degree()) throw std::invalid_argument("Bivariate: degree mismatch");
  for (std::size_t i = 0; i < grid_.size(); ++i)
    for (std::size_t j = 0; j < grid_.size(); ++j) grid_[i][j] += rhs.grid_[i][j];
  return *this;
}

void Bivariate::add_product(const Polynomial& px, const Polynomial& qy, const Rational& scale) {
  for (long i = 0; i <= px.degree(); ++i) {
    for (long j = 0; j <= qy.degree(); ++j) {
      at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) +=
          scale * px[static_cast<std::size_t>(i)] * qy[static_cast<std::size_t>(j)];
    }
  }
}

std::vector<Polynomial> sheffer_sequence(const RiordanArray& r, std::size_t n_max) {
  if (n_max > r.order()) throw std::out_of_range("sheffer_sequence: n_max beyond truncation order");
  const Triangle t = triangle(r, n_max + 1);
  std::vector<Polynomial> seq;
  seq.reserve(n_max + 1);
  for (const auto& row : t.rows) seq.emplace_back(row);
  return seq;
}

std::vector<Polynomial> umbral_compose(const RiordanArray& a, const RiordanArray& b, std::size_t n_max) {
  if (a.flavor() != b.flavor()) throw std::invalid_argument("umbral_compose: flavor mismatch");
  if (a.order() != b.order()) throw std::invalid_argument("umbral_compose: order mismatch");
  const std::vector<Polynomial> inner = sheffer_sequence(b, n_max);
  const Triangle outer = triangle(a, n_max + 1);
  std::vector<Polynomial> out;
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    Polynomial p;
    for (std::size_t k = 0; k <= n; ++k) p += outer.rows[n][k] * inner[k];
    out.push_back(std::move(p));
  }
  return out;
}

Triangle coefficient_triangle(Flavor flavor, std::span<const Polynomial> sequence) {
  Triangle t{flavor, {}};
  for (std::size_t n = 0; n < sequence.size(); ++n) {
    if (sequence[n].degree() > static_cast<long>(n)) {
      throw std::invalid_argument("coefficient_triangle: polynomial degree exceeds its index");
    }
    std::vector<Rational> row(n + 1);
    for (std::size_t k = 0; k <= n; ++k) row[k] = sequence[n][k];
    t.rows.push_back(std::move(row));
  }
  return t;
}

Bivariate sheffer_identity_lhs(Flavor flavor, const Polynomial& s) {
  const std::size_t deg = s.degree() < 0 ? 0 : static_cast<std::size_t>(s.degree());
  Bivariate grid(deg);
  for (std::size_t j = 0; j <= deg; ++j) {
    if (s[j].is_zero()) continue;
    for (std::size_t i = 0; i <= j; ++i) {
      const Rational weight =
          flavor == Flavor::exponential ? binomial(static_cast<long>(j), static_cast<long>(i)) : Rational(1);
      grid.at(i, j - i) += s[j] * weight;
    }
  }
  return grid;
}

SheffIdentityReport sheffer_identity_check(const RiordanArray& r, std::size_t n_max) {
  const std::vector<Polynomial> s = sheffer_sequence(r, n_max);
  const RiordanArray associated(r.flavor(), named("augmentation", r.order()), r.alpha());
  const std::vector<Polynomial> p = sheffer_sequence(associated, n_max);
  SheffIdentityReport report;
  report.n_max = n_max;
  for (std::size_t n = 0; n <= n_max; ++n) {
    Bivariate lhs = sheffer_identity_lhs(r.flavor(), s[n]);
    Bivariate rhs(lhs.degree());
    if (s[n].degree() != static_cast<long>(n)) {
      report.failing.push_back(n);
      continue;
    }
    for (std::size_t k = 0; k <= n; ++k) {
      const Rational weight = r.flavor() == Flavor::exponential
                                  ? binomial(static_cast<long>(n), static_cast<long>(k))
                                  : Rational(1);
      rhs.add_product(s[k], p[n - k], weight);
    }
    if (!(lhs == rhs)) report.failing.push_back(n);
  }
  return report;
}

}  // namespace riordan
