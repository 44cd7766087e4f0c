#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

enum class Flavor { exponential, ordinary };

/// "exp" / "ord".
std::string to_string(Flavor flavor);
/// Accepts exp, exponential, ord, ordinary.
Flavor parse_flavor(std::string_view text);

/// A materialized lower-triangular block; row n holds n+1 entries.
struct Triangle {
  Flavor flavor = Flavor::exponential;
  std::vector<std::vector<Rational>> rows;

  std::size_t size() const { return rows.size(); }
  /// Entry (n, k), zero above the diagonal.
  Rational at(std::size_t n, std::size_t k) const;

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// Unit diagonal of the given size.
Triangle identity_triangle(Flavor flavor, std::size_t size);

/// Literal matrix product of two equally sized blocks.
Triangle matrix_product(const Triangle& a, const Triangle& b);

/// Matrix-vector product; the column must have as many entries as the block.
std::vector<Rational> matrix_vector(const Triangle& t, std::span<const Rational> column);

Triangle operator+(const Triangle& a, const Triangle& b);
Triangle operator-(const Triangle& a, const Triangle& b);
Triangle operator*(const Rational& c, const Triangle& a);

/// Leading block with the given number of rows.
Triangle leading_block(const Triangle& t, std::size_t rows);

}  // namespace riordan
