#include "riordan/genpowers.hpp"

#include <stdexcept>
#include <vector>

#include "riordan/coefficients.hpp"

namespace riordan {

namespace {

bool is_zero(const Triangle& t) {
  for (const auto& row : t.rows)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

}  // namespace

Triangle general_power(const Triangle& m, const Rational& c) {
  for (std::size_t n = 0; n < m.size(); ++n) {
    if (m.rows[n][n] != Rational(1)) throw std::invalid_argument("general_power: diagonal must be all 1");
  }
  const Triangle id = identity_triangle(m.flavor, m.size());
  const Triangle nilpotent = m - id;
  Triangle result = id;
  Triangle power = id;
  for (std::size_t j = 1; j < m.size(); ++j) {
    power = matrix_product(power, nilpotent);
    if (is_zero(power)) break;
    const Rational b = binomial_generalized(c, j);
    if (!b.is_zero()) result = result + b * power;
  }
  return result;
}

Triangle general_power(const RiordanArray& r, const Rational& c) { return general_power(triangle(r), c); }

RiordanArray power_pair(const RiordanArray& r, const Rational& c) {
  if (r.flavor() != Flavor::exponential) throw std::invalid_argument("power_pair: exponential arrays only");
  const std::size_t order = r.order();

  const Triangle gamma_block = general_power(r, c);
  std::vector<Rational> gamma_moments(order + 1);
  for (std::size_t n = 0; n <= order; ++n) gamma_moments[n] = gamma_block.at(n, 0);

  // (α^{‡c})^N needs row N+1 of the associated block; that row only reads
  // α moments up to N, so the padding moment never enters.
  std::vector<Rational> padded(r.alpha().moments().begin(), r.alpha().moments().end());
  padded.emplace_back();
  const Umbra alpha_ext(std::move(padded));
  const RiordanArray associated(Flavor::exponential, named("augmentation", order + 1), alpha_ext);
  const Triangle alpha_block = general_power(associated, c);
  std::vector<Rational> alpha_moments(order + 1);
  for (std::size_t n = 1; n <= order + 1; ++n) {
    alpha_moments[n - 1] = alpha_block.at(n, 1) / Rational(static_cast<long>(n));
  }

  return RiordanArray(Flavor::exponential, Umbra(std::move(gamma_moments)), Umbra(std::move(alpha_moments)));
}

AdditivityReport additivity_check(const RiordanArray& r, const Rational& c1, const Rational& c2) {
  const Triangle m = triangle(r);
  const Triangle lhs = general_power(m, c1 + c2);
  const Triangle rhs = matrix_product(general_power(m, c1), general_power(m, c2));
  AdditivityReport report{c1, c2, std::nullopt};
  for (std::size_t n = 0; n < lhs.size() && !report.first_mismatch; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      if (lhs.rows[n][k] != rhs.rows[n][k]) {
        report.first_mismatch = AdditivityReport::Mismatch{n, k, lhs.rows[n][k], rhs.rows[n][k]};
        break;
      }
    }
  }
  return report;
}

}  // namespace riordan
