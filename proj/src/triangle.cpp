#include "riordan/triangle.hpp"

#include <stdexcept>

namespace riordan {

namespace {

void require_compatible(const Triangle& a, const Triangle& b, const char* op) {
  if (a.flavor != b.flavor) throw std::invalid_argument(std::string(op) + ": flavor mismatch");
  if (a.size() != b.size()) throw std::invalid_argument(std::string(op) + ": size mismatch");
}

Triangle zeros(Flavor flavor, std::size_t size) {
  Triangle t{flavor, {}};
  t.rows.reserve(size);
  for (std::size_t n = 0; n < size; ++n) t.rows.emplace_back(n + 1);
  return t;
}

}  // namespace

std::string to_string(Flavor flavor) { return flavor == Flavor::exponential ? "exp" : "ord"; }

Flavor parse_flavor(std::string_view text) {
  if (text == "exp" || text == "exponential") return Flavor::exponential;
  if (text == "ord" || text == "ordinary") return Flavor::ordinary;
  throw std::invalid_argument("unknown flavor '" + std::string(text) + "'");
}

Rational Triangle::at(std::size_t n, std::size_t k) const {
  if (n >= rows.size()) throw std::out_of_range("triangle row out of range");
  return k <= n ? rows[n][k] : Rational();
}

Triangle identity_triangle(Flavor flavor, std::size_t size) {
  Triangle t = zeros(flavor, size);
  for (std::size_t n = 0; n < size; ++n) t.rows[n][n] = Rational(1);
  return t;
}

Triangle matrix_product(const Triangle& a, const Triangle& b) {
  require_compatible(a, b, "matrix_product");
  Triangle c = zeros(a.flavor, a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      mpq_class acc;
      for (std::size_t i = k; i <= n; ++i) {
        if (a.rows[n][i].is_zero() || b.rows[i][k].is_zero()) continue;
        acc += a.rows[n][i].raw() * b.rows[i][k].raw();
      }
      c.rows[n][k] = Rational(acc);
    }
  }
  return c;
}

std::vector<Rational> matrix_vector(const Triangle& t, std::span<const Rational> column) {
  if (column.size() != t.size()) throw std::invalid_argument("matrix_vector: column length mismatch");
  std::vector<Rational> out(t.size());
  for (std::size_t n = 0; n < t.size(); ++n) {
    mpq_class acc;
    for (std::size_t k = 0; k <= n; ++k) acc += t.rows[n][k].raw() * column[k].raw();
    out[n] = Rational(acc);
  }
  return out;
}

Triangle operator+(const Triangle& a, const Triangle& b) {
  require_compatible(a, b, "add");
  Triangle c = a;
  for (std::size_t n = 0; n < c.size(); ++n)
    for (std::size_t k = 0; k <= n; ++k) c.rows[n][k] += b.rows[n][k];
  return c;
}

Triangle operator-(const Triangle& a, const Triangle& b) {
  require_compatible(a, b, "sub");
  Triangle c = a;
  for (std::size_t n = 0; n < c.size(); ++n)
    for (std::size_t k = 0; k <= n; ++k) c.rows[n][k] -= b.rows[n][k];
  return c;
}

Triangle operator*(const Rational& s, const Triangle& a) {
  Triangle c = a;
  for (auto& row : c.rows)
    for (auto& x : row) x *= s;
  return c;
}

Triangle leading_block(const Triangle& t, std::size_t rows) {
  if (rows > t.size()) throw std::out_of_range("leading_block: too many rows");
  return Triangle{t.flavor, {t.rows.begin(), t.rows.begin() + static_cast<std::ptrdiff_t>(rows)}};
}

}  // namespace riordan
