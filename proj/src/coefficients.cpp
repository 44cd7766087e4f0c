#include "riordan/coefficients.hpp"

#include <numeric>
#include <stdexcept>

namespace riordan {

Rational factorial(std::size_t n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative upper argument, use binomial_generalized");
  if (k < 0 || k > n) return Rational();
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

Rational binomial_generalized(const Rational& c, std::size_t j) {
  return falling_factorial(c, j) / factorial(j);
}

Rational multinomial(std::size_t n, std::span<const std::size_t> parts) {
  if (std::accumulate(parts.begin(), parts.end(), std::size_t{0}) != n) {
    throw std::invalid_argument("multinomial: parts do not sum to n");
  }
  Rational result = factorial(n);
  for (std::size_t p : parts) result /= factorial(p);
  return result;
}

Rational falling_factorial(const Rational& x, std::size_t n) {
  Rational result(1);
  Rational term = x;
  for (std::size_t i = 0; i < n; ++i) {
    result *= term;
    term -= Rational(1);
  }
  return result;
}

}  // namespace riordan
