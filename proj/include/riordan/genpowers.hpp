#pragma once

#include <cstddef>
#include <optional>

#include "riordan/rational.hpp"
#include "riordan/riordan_array.hpp"
#include "riordan/triangle.hpp"

namespace riordan {

/// sum_j binom(c, j) (M - I)^j on a unit-diagonal lower-triangular block.
/// M - I is strictly lower triangular, so the sum stops at j = size - 1.
Triangle general_power(const Triangle& m, const Rational& c);

/// general_power on the full (order+1)-row block of r.
Triangle general_power(const RiordanArray& r, const Rational& c);

/// The pair (γ^{†c}, α^{‡c}) lifted from the matrix power:
/// γ^{†c} has moments column 0 of general_power(r, c), and
/// (α^{‡c})^{n-1} = general_power((ε, α), c)_{n,1} / n.
/// Exponential flavor only (std::invalid_argument otherwise).
RiordanArray power_pair(const RiordanArray& r, const Rational& c);

struct AdditivityReport {
  Rational c1;
  Rational c2;
  struct Mismatch {
    std::size_t n = 0;
    std::size_t k = 0;
    Rational lhs;
    Rational rhs;
  };
  std::optional<Mismatch> first_mismatch;

  bool holds() const { return !first_mismatch.has_value(); }
};

/// Compares general_power(r, c1 + c2) with the product of the two powers.
AdditivityReport additivity_check(const RiordanArray& r, const Rational& c1, const Rational& c2);

}  // namespace riordan
