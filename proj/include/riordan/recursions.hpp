#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "riordan/rational.hpp"
#include "riordan/riordan_array.hpp"
#include "riordan/series.hpp"
#include "riordan/triangle.hpp"
#include "riordan/umbra.hpp"

namespace riordan {

/// The A-sequence of an array: the moments of K_α.
Umbra a_sequence(const RiordanArray& r);

enum class Rule { colrec, rowrec, rowrec2 };

std::string to_string(Rule rule);
Rule parse_rule(std::string_view text);

/// One summand coefficient * entry of a recursion right-hand side.
struct RecursionTerm {
  std::size_t i = 0;
  Rational coefficient;
  Rational entry;
};

struct RecursionReport {
  Rule rule = Rule::colrec;
  std::size_t n = 0;
  std::size_t k = 0;
  Rational lhs;  // entry(n, k)
  Rational rhs;  // sum of the terms
  std::vector<RecursionTerm> terms;

  bool holds() const { return lhs == rhs; }
};

/// Evaluates the column and row recursions against directly computed entries.
///
/// Exponential flavor, 1 <= k <= n:
///   colrec:  (n/k) sum_i binom(n-1, i) α^i            (γ,α)_{n-1-i, k-1}
///   rowrec:  (n/k) sum_i binom(k-1+i, i) K_α^i        (γ,α)_{n-1, k-1+i}
///   rowrec2: binom(n,k) sum_i (k.K_α)^i               (γ,α)_{n-k, i}
/// Ordinary flavor replaces the leading factors by 1 and divides each
/// moment by i!. All sums run over 0 <= i <= n-k.
class RecursionVerifier {
 public:
  explicit RecursionVerifier(const RiordanArray& r);

  RecursionReport check(Rule rule, std::size_t n, std::size_t k) const;

  const Triangle& entries() const { return triangle_; }
  const Umbra& a_sequence() const { return k_alpha_; }

 private:
  RecursionReport colrec(std::size_t n, std::size_t k) const;
  RecursionReport rowrec(std::size_t n, std::size_t k) const;
  RecursionReport rowrec2(std::size_t n, std::size_t k) const;

  Flavor flavor_;
  Triangle triangle_;
  Umbra alpha_;
  Umbra k_alpha_;
  std::vector<Series> k_alpha_powers_;  // EGF of k.K_α, index k
};

/// Throws std::out_of_range unless 1 <= k <= n <= order.
RecursionReport check_colrec(const RiordanArray& r, std::size_t n, std::size_t k);
RecursionReport check_rowrec(const RiordanArray& r, std::size_t n, std::size_t k);
RecursionReport check_rowrec2(const RiordanArray& r, std::size_t n, std::size_t k);

}  // namespace riordan
