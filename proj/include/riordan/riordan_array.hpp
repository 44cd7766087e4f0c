#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "riordan/rational.hpp"
#include "riordan/triangle.hpp"
#include "riordan/umbra.hpp"

namespace riordan {

/// A normalized Riordan array generated by the umbra pair (γ, α).
///
/// Exponential flavor: (γ,α)_{n,k} = binom(n,k) E[(γ + k.α)^(n-k)].
/// Ordinary flavor:    [γ,α]_{n,k} = E[(γ + k.α)^(n-k)] / (n-k)!.
/// Entries are always derived from the pair; nothing else is stored.
class RiordanArray {
 public:
  /// γ and α must share a truncation order.
  RiordanArray(Flavor flavor, Umbra gamma, Umbra alpha);

  static RiordanArray identity(Flavor flavor, std::size_t order = kDefaultOrder);

  Flavor flavor() const { return flavor_; }
  const Umbra& gamma() const { return gamma_; }
  const Umbra& alpha() const { return alpha_; }
  std::size_t order() const { return gamma_.order(); }

  friend bool operator==(const RiordanArray&, const RiordanArray&) = default;

 private:
  Flavor flavor_;
  Umbra gamma_;
  Umbra alpha_;
};

/// Entry (n, k); zero for k > n. Throws std::out_of_range past the order.
Rational entry(const RiordanArray& r, std::size_t n, std::size_t k);

/// First `rows` rows; rows <= order + 1.
Triangle triangle(const RiordanArray& r, std::size_t rows);
/// All order + 1 rows.
Triangle triangle(const RiordanArray& r);

/// Pair-form product (γ + σ.β.∂α, α + ρ.β.∂α).
RiordanArray multiply(const RiordanArray& a, const RiordanArray& b);

/// (L_{γ,α}, L_α).
RiordanArray inverse(const RiordanArray& r);

/// The umbra γ + η.β.∂α (EGF f_γ f_η(z f_α)).
///
/// Exponential: its moments are triangle(r) times η's moment column.
/// Ordinary: its moments over n! are triangle(r) times the column η^k / k!.
Umbra act(const RiordanArray& r, const Umbra& eta);

/// Literal matrix action on a column of order + 1 values.
std::vector<Rational> apply(const RiordanArray& r, std::span<const Rational> column);

/// Row sums through the action on υ (exponential) or ῡ (ordinary).
std::vector<Rational> row_sums(const RiordanArray& r);

/// Whether r • η ≡ η up to the truncation order.
bool stabilizes(const RiordanArray& r, const Umbra& eta);

/// Subgroup membership, each flag tested as equivalence at the truncation order.
struct SubgroupReport {
  bool appell = false;      // α ≡ ε
  bool associated = false;  // γ ≡ ε, i.e. Stab(ε)
  bool bell = false;        // γ ≡ α
  bool stochastic = false;  // all row sums 1
  bool stab_chi = false;    // r • χ ≡ χ
};

SubgroupReport classify(const RiordanArray& r);

// Named arrays.
/// Exponential (υ, ε); ordinary [ῡ, ῡ].
RiordanArray pascal(Flavor flavor, std::size_t order = kDefaultOrder);
/// (ε, -1.ι)
RiordanArray stirling_second(std::size_t order = kDefaultOrder);
/// (ε, ι.χ)
RiordanArray stirling_first(std::size_t order = kDefaultOrder);
/// [ς, ς]
RiordanArray catalan_array(std::size_t order = kDefaultOrder);
/// [2.ς, 2.ς]
RiordanArray catalan2_array(std::size_t order = kDefaultOrder);

}  // namespace riordan
