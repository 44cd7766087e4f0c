#pragma once

#include <cstddef>
#include <span>

#include "riordan/rational.hpp"

namespace riordan {

/// n!
Rational factorial(std::size_t n);

/// Integer binomial coefficient; zero when k < 0 or k > n (n >= 0).
Rational binomial(long n, long k);

/// binom(c, j) = c(c-1)...(c-j+1)/j! for rational upper argument.
Rational binomial_generalized(const Rational& c, std::size_t j);

/// n! / prod(parts_i!). Throws std::invalid_argument if the parts do not sum to n.
Rational multinomial(std::size_t n, std::span<const std::size_t> parts);

/// (x)_n = x(x-1)...(x-n+1); 1 for n = 0.
Rational falling_factorial(const Rational& x, std::size_t n);

}  // namespace riordan
