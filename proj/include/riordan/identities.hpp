#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "riordan/rational.hpp"
#include "riordan/riordan_array.hpp"
#include "riordan/series.hpp"
#include "riordan/sheffer.hpp"
#include "riordan/triangle.hpp"

namespace riordan {

/// Integer sequences computed by elementary recurrences and closed forms,
/// independent of the umbral machinery they are compared against.
namespace elementary {

/// binom(2n, n) / (n+1)
Rational catalan(std::size_t n);
/// Bell triangle.
std::vector<Rational> bell_numbers(std::size_t n_max);
/// F_0 = 0, F_1 = 1.
Rational fibonacci(std::size_t n);
/// B_m = -1/(m+1) sum_{k<m} binom(m+1, k) B_k, so B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(std::size_t n_max);
/// Cauchy numbers of the first kind, integral over [0,1] of (x)_n.
std::vector<Rational> cauchy_numbers(std::size_t n_max);
/// S(n,k) = k S(n-1,k) + S(n-1,k-1).
Triangle stirling2_numbers(std::size_t rows);
/// Signed s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k).
Triangle stirling1_numbers(std::size_t rows);
/// x(x-1)...(x-n+1)
Polynomial falling_factorial_polynomial(std::size_t n);

}  // namespace elementary

/// One compared pair; lhs and rhs are rendered exact values or polynomials.
struct Witness {
  std::string at;
  std::string lhs;
  std::string rhs;

  bool ok() const { return lhs == rhs; }
};

struct IdentityReport {
  std::string name;
  std::size_t n_max = 0;
  bool passed = true;
  std::vector<Witness> witnesses;

  std::vector<Witness> failures() const;
};

/// Builds a report; passed is false exactly when some witness differs.
IdentityReport summarize(std::string name, std::size_t n_max, std::vector<Witness> witnesses);

struct RunOptions {
  /// Raised to n_max + 1 when smaller, since some checks read row n + 1.
  std::size_t order = kDefaultOrder;
  /// How array entries are materialized; defaults to triangle(r).
  std::function<Triangle(const RiordanArray&)> materialize;
};

/// Names of all executable identities.
std::vector<std::string> catalog();

/// One-line statement of a catalog identity.
std::string statement(std::string_view name);

/// Runs one identity for 0 <= n <= n_max. Throws std::invalid_argument for
/// an unknown name.
IdentityReport run(std::string_view name, std::size_t n_max, const RunOptions& options = {});

}  // namespace riordan
