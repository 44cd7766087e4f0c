#pragma once

// Test-side reference computations. Everything here is deliberately naive
// (enumeration, plain recurrences, schoolbook convolution) and shares no
// code with the library beyond the Rational type.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "riordan/rational.hpp"
#include "riordan/riordan_array.hpp"
#include "riordan/series.hpp"
#include "riordan/umbra.hpp"

namespace oracle {

using riordan::Rational;

inline Rational fact(std::size_t n) {
  Rational r(1);
  for (std::size_t i = 2; i <= n; ++i) r *= Rational(static_cast<long>(i));
  return r;
}

/// Binomial via the additive Pascal recurrence.
inline Rational choose(long n, long k) {
  if (k < 0 || k > n || n < 0) return Rational(0);
  std::vector<Rational> row{Rational(1)};
  for (long i = 1; i <= n; ++i) {
    std::vector<Rational> next(static_cast<std::size_t>(i + 1), Rational(1));
    for (long j = 1; j < i; ++j) next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

/// Dyck paths of semilength n, counted by walking heights step by step.
inline Rational dyck_paths(std::size_t n) {
  std::vector<Rational> ways(2 * n + 2);
  ways[0] = Rational(1);
  for (std::size_t step = 0; step < 2 * n; ++step) {
    std::vector<Rational> next(2 * n + 2);
    for (std::size_t h = 0; h <= 2 * n; ++h) {
      if (ways[h].is_zero()) continue;
      next[h + 1] += ways[h];
      if (h > 0) next[h - 1] += ways[h];
    }
    ways = std::move(next);
  }
  return ways[0];
}

/// Visits every set partition of {0..n-1} as a restricted growth string,
/// passing the number of blocks.
template <typename F>
void for_each_partition(std::size_t n, F&& visit) {
  std::vector<std::size_t> a(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t blocks) -> void {
    if (i == n) {
      visit(blocks);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      a[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) visit(0);
  else rec(rec, 0, 0);
}

/// S(n,k) by counting set partitions into k blocks.
inline std::vector<std::vector<Rational>> stirling2_by_partitions(std::size_t rows) {
  std::vector<std::vector<Rational>> t(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    std::vector<long> count(n + 1, 0);
    for_each_partition(n, [&](std::size_t blocks) { ++count[blocks]; });
    for (long c : count) t[n].emplace_back(c);
  }
  return t;
}

inline std::vector<Rational> bell_by_partitions(std::size_t n_max) {
  std::vector<Rational> out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    long count = 0;
    for_each_partition(n, [&](std::size_t) { ++count; });
    out.emplace_back(count);
  }
  return out;
}

/// Signed s(n,k) = (-1)^{n-k} times the number of permutations of n with k cycles.
inline std::vector<std::vector<Rational>> stirling1_by_permutations(std::size_t rows) {
  std::vector<std::vector<Rational>> t(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    std::vector<long> count(n + 1, 0);
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      std::vector<bool> seen(n, false);
      std::size_t cycles = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
      }
      ++count[cycles];
    } while (std::next_permutation(p.begin(), p.end()));
    for (std::size_t k = 0; k <= n; ++k) t[n].emplace_back((n - k) % 2 == 0 ? count[k] : -count[k]);
  }
  return t;
}

/// Ways to tile a strip of length n with squares and dominoes is F_{n+1}.
inline Rational fibonacci_by_tilings(std::size_t n) {
  if (n == 0) return Rational(0);
  std::vector<Rational> tilings(n + 1);
  tilings[0] = Rational(1);
  for (std::size_t len = 1; len < n; ++len) {
    tilings[len] = tilings[len - 1] + (len >= 2 ? tilings[len - 2] : Rational(0));
  }
  return tilings[n - 1];
}

/// Akiyama-Tanigawa algorithm; yields B_1 = +1/2, so the sign is flipped.
inline std::vector<Rational> bernoulli_akiyama_tanigawa(std::size_t n_max) {
  std::vector<Rational> out;
  std::vector<Rational> a(n_max + 1);
  for (std::size_t m = 0; m <= n_max; ++m) {
    a[m] = Rational(1) / Rational(static_cast<long>(m + 1));
    for (std::size_t j = m; j >= 1; --j) a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  if (n_max >= 1) out[1] = -out[1];
  return out;
}

/// Cauchy numbers of the first kind: sum_k s(n,k) / (k+1).
inline std::vector<Rational> cauchy_by_stirling(std::size_t n_max) {
  const auto s = stirling1_by_permutations(n_max + 1);
  std::vector<Rational> out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    Rational acc;
    for (std::size_t k = 0; k <= n; ++k) acc += s[n][k] / Rational(static_cast<long>(k + 1));
    out.push_back(acc);
  }
  return out;
}

/// Schoolbook truncated product.
inline std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size() && j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

/// Literal matrix product of two square lower-triangular tables.
inline std::vector<std::vector<Rational>> matmul(const std::vector<std::vector<Rational>>& a,
                                                 const std::vector<std::vector<Rational>>& b) {
  std::vector<std::vector<Rational>> c(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    c[n].resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
      for (std::size_t j = k; j <= n; ++j) c[n][k] += a[n][j] * b[j][k];
  }
  return c;
}

/// Lagrange interpolation through (x_i, y_i) evaluated at x.
inline Rational interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys, const Rational& x) {
  Rational acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Rational term = ys[i];
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != i) term *= (x - xs[j]) / (xs[i] - xs[j]);
    acc += term;
  }
  return acc;
}

/// Seeded source of small random rationals, umbrae and series.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long span = 5, long max_den = 4) { return Rational(integer(-span, span), integer(1, max_den)); }

  Rational nonzero_rational(long span = 5, long max_den = 4) {
    for (;;) {
      Rational r = rational(span, max_den);
      if (!r.is_zero()) return r;
    }
  }

  riordan::Umbra umbra(std::size_t order) {
    std::vector<Rational> m{Rational(1)};
    for (std::size_t n = 1; n <= order; ++n) m.push_back(rational(3, 3));
    return riordan::Umbra(std::move(m));
  }

  /// f = a_1 z + a_2 z^2 + ... with a_1 != 0.
  riordan::Series unit_series(std::size_t order) {
    riordan::Series f(order);
    f[1] = nonzero_rational(3, 3);
    for (std::size_t n = 2; n <= order; ++n) f[n] = rational(3, 3);
    return f;
  }

  riordan::RiordanArray array(riordan::Flavor flavor, std::size_t order) {
    riordan::Umbra g = umbra(order);
    riordan::Umbra a = umbra(order);
    return riordan::RiordanArray(flavor, std::move(g), std::move(a));
  }

 private:
  std::mt19937 rng_;
};

}  // namespace oracle
