#include "riordan/riordan_array.hpp"

#include <stdexcept>
#include <string>

#include "riordan/coefficients.hpp"

namespace riordan {

namespace {

void require_compatible(const RiordanArray& a, const RiordanArray& b, const char* op) {
  if (a.flavor() != b.flavor()) throw std::invalid_argument(std::string(op) + ": flavor mismatch");
  if (a.order() != b.order()) throw std::invalid_argument(std::string(op) + ": order mismatch");
}

// [z^m] of f_γ f_α^k scaled to the flavor's entry at (k + m, k)
Rational scale_entry(Flavor flavor, const Rational& coefficient, std::size_t n, std::size_t k) {
  if (flavor == Flavor::ordinary) return coefficient;
  return coefficient * factorial(n) / factorial(k);
}

}  // namespace

RiordanArray::RiordanArray(Flavor flavor, Umbra gamma, Umbra alpha)
    : flavor_(flavor), gamma_(std::move(gamma)), alpha_(std::move(alpha)) {
  if (gamma_.order() != alpha_.order()) throw std::invalid_argument("RiordanArray: γ and α orders differ");
}

RiordanArray RiordanArray::identity(Flavor flavor, std::size_t order) {
  const Umbra eps = named("augmentation", order);
  return RiordanArray(flavor, eps, eps);
}

Rational entry(const RiordanArray& r, std::size_t n, std::size_t k) {
  if (n > r.order() || k > r.order()) throw std::out_of_range("entry: index beyond truncation order");
  if (k > n) return Rational();
  const Series column = r.gamma().egf() * pow_int(r.alpha().egf(), static_cast<long>(k));
  return scale_entry(r.flavor(), column[n - k], n, k);
}

Triangle triangle(const RiordanArray& r, std::size_t rows) {
  if (rows > r.order() + 1) throw std::out_of_range("triangle: more rows than the truncation order allows");
  Triangle t{r.flavor(), {}};
  for (std::size_t n = 0; n < rows; ++n) t.rows.emplace_back(n + 1);
  const Series f_alpha = r.alpha().egf();
  Series column = r.gamma().egf();  // f_γ f_α^k
  for (std::size_t k = 0; k < rows; ++k) {
    for (std::size_t n = k; n < rows; ++n) t.rows[n][k] = scale_entry(r.flavor(), column[n - k], n, k);
    if (k + 1 < rows) column *= f_alpha;
  }
  return t;
}

Triangle triangle(const RiordanArray& r) { return triangle(r, r.order() + 1); }

RiordanArray multiply(const RiordanArray& a, const RiordanArray& b) {
  require_compatible(a, b, "multiply");
  return RiordanArray(a.flavor(), a.gamma() + compose_umbra(b.gamma(), a.alpha()),
                      a.alpha() + compose_umbra(b.alpha(), a.alpha()));
}

RiordanArray inverse(const RiordanArray& r) {
  return RiordanArray(r.flavor(), L_umbra(r.gamma(), r.alpha()), L_umbra(r.alpha()));
}

Umbra act(const RiordanArray& r, const Umbra& eta) {
  if (eta.order() != r.order()) throw std::invalid_argument("act: order mismatch");
  return r.gamma() + compose_umbra(eta, r.alpha());
}

std::vector<Rational> apply(const RiordanArray& r, std::span<const Rational> column) {
  if (column.size() != r.order() + 1) throw std::invalid_argument("apply: column must have order + 1 entries");
  return matrix_vector(triangle(r), column);
}

std::vector<Rational> row_sums(const RiordanArray& r) {
  const bool exponential = r.flavor() == Flavor::exponential;
  const Umbra ones = named(exponential ? "unity" : "boolean-unity", r.order());
  const Umbra out = act(r, ones);
  std::vector<Rational> sums(out.moments().begin(), out.moments().end());
  if (!exponential) {
    for (std::size_t n = 0; n < sums.size(); ++n) sums[n] /= factorial(n);
  }
  return sums;
}

bool stabilizes(const RiordanArray& r, const Umbra& eta) { return act(r, eta) == eta; }

SubgroupReport classify(const RiordanArray& r) {
  const Umbra eps = named("augmentation", r.order());
  SubgroupReport report;
  report.appell = r.alpha() == eps;
  report.associated = r.gamma() == eps;
  report.bell = r.gamma() == r.alpha();
  report.stochastic = true;
  for (const Rational& s : row_sums(r)) report.stochastic = report.stochastic && s == Rational(1);
  report.stab_chi = stabilizes(r, named("singleton", r.order()));
  return report;
}

RiordanArray pascal(Flavor flavor, std::size_t order) {
  if (flavor == Flavor::exponential) {
    return RiordanArray(flavor, named("unity", order), named("augmentation", order));
  }
  const Umbra bu = named("boolean-unity", order);
  return RiordanArray(flavor, bu, bu);
}

RiordanArray stirling_second(std::size_t order) {
  return RiordanArray(Flavor::exponential, named("augmentation", order), dot_int(-1, named("bernoulli", order)));
}

RiordanArray stirling_first(std::size_t order) {
  return RiordanArray(Flavor::exponential, named("augmentation", order),
                      dot(named("bernoulli", order), named("singleton", order)));
}

RiordanArray catalan_array(std::size_t order) {
  const Umbra c = named("catalan", order);
  return RiordanArray(Flavor::ordinary, c, c);
}

RiordanArray catalan2_array(std::size_t order) {
  const Umbra c2 = dot_int(2, named("catalan", order));
  return RiordanArray(Flavor::ordinary, c2, c2);
}

}  // namespace riordan
