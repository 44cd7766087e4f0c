#include "riordan/recursions.hpp"

#include <stdexcept>

#include "riordan/coefficients.hpp"

namespace riordan {

namespace {

Rational as_rational(std::size_t v) { return Rational(static_cast<long>(v)); }

Rational binom(std::size_t n, std::size_t k) { return binomial(static_cast<long>(n), static_cast<long>(k)); }

}  // namespace

Umbra a_sequence(const RiordanArray& r) { return K_umbra(r.alpha()); }

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::colrec: return "colrec";
    case Rule::rowrec: return "rowrec";
    case Rule::rowrec2: return "rowrec2";
  }
  return "?";
}

Rule parse_rule(std::string_view text) {
  if (text == "colrec") return Rule::colrec;
  if (text == "rowrec") return Rule::rowrec;
  if (text == "rowrec2") return Rule::rowrec2;
  throw std::invalid_argument("unknown recursion rule '" + std::string(text) + "'");
}

RecursionVerifier::RecursionVerifier(const RiordanArray& r)
    : flavor_(r.flavor()), triangle_(triangle(r)), alpha_(r.alpha()), k_alpha_(K_umbra(r.alpha())) {
  const Series k_egf = k_alpha_.egf();
  k_alpha_powers_.reserve(r.order() + 1);
  k_alpha_powers_.push_back(Series::one(r.order()));
  for (std::size_t k = 1; k <= r.order(); ++k) k_alpha_powers_.push_back(k_alpha_powers_.back() * k_egf);
}

RecursionReport RecursionVerifier::check(Rule rule, std::size_t n, std::size_t k) const {
  if (k < 1 || k > n || n >= triangle_.size()) {
    throw std::out_of_range("recursion check needs 1 <= k <= n <= order");
  }
  RecursionReport report;
  switch (rule) {
    case Rule::colrec: report = colrec(n, k); break;
    case Rule::rowrec: report = rowrec(n, k); break;
    case Rule::rowrec2: report = rowrec2(n, k); break;
  }
  report.rule = rule;
  report.n = n;
  report.k = k;
  report.lhs = triangle_.at(n, k);
  for (const auto& term : report.terms) report.rhs += term.coefficient * term.entry;
  return report;
}

RecursionReport RecursionVerifier::colrec(std::size_t n, std::size_t k) const {
  RecursionReport report;
  const bool exponential = flavor_ == Flavor::exponential;
  for (std::size_t i = 0; i <= n - k; ++i) {
    Rational c = exponential ? as_rational(n) / as_rational(k) * binom(n - 1, i) * alpha_.moment(i)
                             : alpha_.moment(i) / factorial(i);
    report.terms.push_back({i, std::move(c), triangle_.at(n - 1 - i, k - 1)});
  }
  return report;
}

RecursionReport RecursionVerifier::rowrec(std::size_t n, std::size_t k) const {
  RecursionReport report;
  const bool exponential = flavor_ == Flavor::exponential;
  for (std::size_t i = 0; i <= n - k; ++i) {
    Rational c = exponential ? as_rational(n) / as_rational(k) * binom(k - 1 + i, i) * k_alpha_.moment(i)
                             : k_alpha_.moment(i) / factorial(i);
    report.terms.push_back({i, std::move(c), triangle_.at(n - 1, k - 1 + i)});
  }
  return report;
}

RecursionReport RecursionVerifier::rowrec2(std::size_t n, std::size_t k) const {
  RecursionReport report;
  const bool exponential = flavor_ == Flavor::exponential;
  // [z^i] of the k.K_α EGF is (k.K_α)^i / i!
  const Series& power = k_alpha_powers_.at(k);
  for (std::size_t i = 0; i <= n - k; ++i) {
    Rational c = exponential ? binom(n, k) * power[i] * factorial(i) : power[i];
    report.terms.push_back({i, std::move(c), triangle_.at(n - k, i)});
  }
  return report;
}

RecursionReport check_colrec(const RiordanArray& r, std::size_t n, std::size_t k) {
  return RecursionVerifier(r).check(Rule::colrec, n, k);
}

RecursionReport check_rowrec(const RiordanArray& r, std::size_t n, std::size_t k) {
  return RecursionVerifier(r).check(Rule::rowrec, n, k);
}

RecursionReport check_rowrec2(const RiordanArray& r, std::size_t n, std::size_t k) {
  return RecursionVerifier(r).check(Rule::rowrec2, n, k);
}

}  // namespace riordan
