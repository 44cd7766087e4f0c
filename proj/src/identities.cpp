#include "riordan/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "riordan/coefficients.hpp"
#include "riordan/umbra.hpp"

namespace riordan {

namespace elementary {

Rational catalan(std::size_t n) {
  const auto ln = static_cast<long>(n);
  return binomial(2 * ln, ln) / Rational(ln + 1);
}

std::vector<Rational> bell_numbers(std::size_t n_max) {
  std::vector<Rational> bell{Rational(1)};
  std::vector<Rational> row{Rational(1)};
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<Rational> next{row.back()};
    for (const Rational& x : row) next.push_back(next.back() + x);
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

Rational fibonacci(std::size_t n) {
  Rational a(0), b(1);
  for (std::size_t i = 0; i < n; ++i) {
    Rational next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

std::vector<Rational> bernoulli_numbers(std::size_t n_max) {
  std::vector<Rational> b{Rational(1)};
  for (std::size_t m = 1; m <= n_max; ++m) {
    Rational acc;
    for (std::size_t k = 0; k < m; ++k) acc += binomial(static_cast<long>(m + 1), static_cast<long>(k)) * b[k];
    b.push_back(-acc / Rational(static_cast<long>(m + 1)));
  }
  return b;
}

std::vector<Rational> cauchy_numbers(std::size_t n_max) {
  std::vector<Rational> c;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Polynomial p = falling_factorial_polynomial(n);
    Rational integral;
    for (long i = 0; i <= p.degree(); ++i) integral += p[static_cast<std::size_t>(i)] / Rational(i + 1);
    c.push_back(integral);
  }
  return c;
}

Triangle stirling2_numbers(std::size_t rows) {
  Triangle t = identity_triangle(Flavor::exponential, rows);
  for (std::size_t n = 1; n < rows; ++n)
    for (std::size_t k = 1; k < n; ++k)
      t.rows[n][k] = Rational(static_cast<long>(k)) * t.rows[n - 1][k] + t.rows[n - 1][k - 1];
  return t;
}

Triangle stirling1_numbers(std::size_t rows) {
  Triangle t = identity_triangle(Flavor::exponential, rows);
  for (std::size_t n = 1; n < rows; ++n)
    for (std::size_t k = 1; k < n; ++k)
      t.rows[n][k] = t.rows[n - 1][k - 1] - Rational(static_cast<long>(n - 1)) * t.rows[n - 1][k];
  return t;
}

Polynomial falling_factorial_polynomial(std::size_t n) {
  Polynomial p = Polynomial::monomial(0);
  for (std::size_t i = 0; i < n; ++i) p = p * Polynomial({-Rational(static_cast<long>(i)), Rational(1)});
  return p;
}

}  // namespace elementary

namespace {

struct Context {
  std::size_t n_max;
  std::size_t order;
  std::function<Triangle(const RiordanArray&)> materialize;

  Triangle entries(const RiordanArray& r) const { return materialize(r); }
};

using Check = std::vector<Witness> (*)(const Context&);

struct Entry {
  const char* name;
  const char* statement;
  Check check;
};

Rational R(long v) { return Rational(v); }
Rational binom(long n, long k) { return binomial(n, k); }

std::string at_n(std::size_t n) { return "n=" + std::to_string(n); }
std::string at_nk(std::size_t n, std::size_t k) { return "n=" + std::to_string(n) + ",k=" + std::to_string(k); }

Witness w(std::string at, const Rational& lhs, const Rational& rhs) { return {std::move(at), lhs.str(), rhs.str()}; }
Witness w(std::string at, const Polynomial& lhs, const Polynomial& rhs) {
  return {std::move(at), lhs.str(), rhs.str()};
}

Rational row_sum(const Triangle& t, std::size_t n) {
  Rational s;
  for (const Rational& x : t.rows[n]) s += x;
  return s;
}

Rational weighted_row(const Triangle& t, std::size_t n, const std::vector<Rational>& column) {
  Rational s;
  for (std::size_t k = 0; k <= n; ++k) s += t.rows[n][k] * column[k];
  return s;
}

Umbra chi_scaled(long c, std::size_t order) { return dot_int(c, named("singleton", order)); }

// χ.-1, the umbra with EGF 1 - z
Umbra chi_negated(std::size_t order) { return dot(named("singleton", order), scalar_umbra(R(-1), order)); }

RiordanArray ordinary_bell(const Umbra& u) { return RiordanArray(Flavor::ordinary, u, u); }

// (1/k) egf power k of a moment sequence, returned as moments
std::vector<Rational> moment_power(const std::vector<Rational>& moments, std::size_t k, std::size_t order) {
  Series f(order);
  for (std::size_t i = 0; i <= order; ++i) f[i] = moments[i] / factorial(i);
  const Series p = pow_int(f, static_cast<long>(k));
  std::vector<Rational> out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) out[i] = p[i] * factorial(i);
  return out;
}

Polynomial cheb_closed_form(std::size_t n) {
  std::vector<Rational> c(n + 1);
  const auto ln = static_cast<long>(n);
  for (long k = 0; k <= ln; ++k) {
    c[static_cast<std::size_t>(k)] = binom(ln + k + 1, ln - k) * ((ln - k) % 2 == 0 ? R(1) : R(-1));
  }
  return Polynomial(std::move(c));
}

std::vector<Witness> pascal_rowsum(const Context& ctx) {
  const RiordanArray p = pascal(Flavor::exponential, ctx.order);
  const Triangle t = ctx.entries(p);
  const std::vector<Rational> via_action = row_sums(p);
  std::vector<Witness> out;
  for (std::size_t n = 0; n <= ctx.n_max; ++n) {
    out.push_back(w(at_n(n), pow(R(2), static_cast<long>(n)), row_sum(t, n)));
    out.push_back(w(at_n(n) + " action", pow(R(2), static_cast<long>(n)), via_action[n]));
  }
  return out;
}

std::vector<Witness> stirling_bell(const Context& ctx) {
  const Triangle s2 = ctx.entries(stirling_second(ctx.order));
  const std::vector<Rational> bell = elementary::bell_numbers(ctx.n_max);
  std::vector<Witness> out;
  for (std::size_t n = 0; n <= ctx.n_max; ++n) out.push_back(w(at_n(n), bell[n], row_sum(s2, n)));
  return out;
}

std::vector<Witness> stirling_inverse(const Context& ctx) {
  const std::size_t rows = ctx.n_max + 1;
  const Triangle s2 = leading_block(ctx.entries(stirling_second(ctx.order)), rows);
  const Triangle s1 = leading_block(ctx.entries(stirling_first(ctx.order)), rows);
  const Triangle product = matrix_product(s1, s2);
  std::vector<Witness> out;
  for (std::size_t n = 0; n < rows; ++n) {
    for (std::size_t k = 0; k <= n; ++k) out.push_back(w("s*S " + at_nk(n, k), R(n == k ? 1 : 0), product.rows[n][k]));
    Polynomial rhs;
    for (std::size_t k = 0; k <= n; ++k) rhs += s2.rows[n][k] * elementary::falling_factorial_polynomial(k);
    out.push_back(w("x^n " + at_n(n), Polynomial::monomial(n), rhs));
  }
  return out;
}

std::vector<Witness> stirling1_altsum(const Context& ctx) {
  const Triangle s1 = ctx.entries(stirling_first(ctx.order));
  std::vector<Witness> out;
  for (std::size_t n = 2; n <= ctx.n_max; ++n) out.push_back(w(at_n(n), R(0), row_sum(s1, n)));
  return out;
}

// sum over 1 <= k <= n <= n_max of lhs = entry(n,k) vs a caller-supplied rhs
template <typename Rhs>
std::vector<Witness> over_entries(const Context& ctx, const Triangle& t, Rhs rhs) {
  std::vector<Witness> out;
  for (std::size_t n = 1; n <= ctx.n_max; ++n)
    for (std::size_t k = 1; k <= n; ++k) out.push_back(w(at_nk(n, k), t.rows[n][k], rhs(n, k)));
  return out;
}

std::vector<Witness> stirling2_colrec(const Context& ctx) {
  const Triangle s = ctx.entries(stirling_second(ctx.order));
  return over_entries(ctx, s, [&](std::size_t n, std::size_t k) {
    Rational acc;
    for (std::size_t i = 0; i <= n - k; ++i) {
      acc += binom(static_cast<long>(n), static_cast<long>(i + 1)) * s.rows[n - 1 - i][k - 1];
    }
    return acc / R(static_cast<long>(k));
  });
}

std::vector<Witness> stirling2_rowrec(const Context& ctx) {
  const Triangle s = ctx.entries(stirling_second(ctx.order));
  const std::vector<Rational> cauchy = elementary::cauchy_numbers(ctx.n_max);
  return over_entries(ctx, s, [&](std::size_t n, std::size_t k) {
    Rational acc;
    for (std::size_t i = 0; i <= n - k; ++i) {
      acc += binom(static_cast<long>(k - 1 + i), static_cast<long>(i)) * cauchy[i] * s.rows[n - 1][k - 1 + i];
    }
    return acc * R(static_cast<long>(n)) / R(static_cast<long>(k));
  });
}

std::vector<Witness> stirling2_rowrec2(const Context& ctx) {
  const Triangle s = ctx.entries(stirling_second(ctx.order));
  const std::vector<Rational> cauchy = elementary::cauchy_numbers(ctx.n_max);
  return over_entries(ctx, s, [&](std::size_t n, std::size_t k) {
    const std::vector<Rational> gen = moment_power(cauchy, k, ctx.n_max);
    Rational acc;
    for (std::size_t i = 0; i <= n - k; ++i) acc += gen[i] * s.rows[n - k][i];
    return acc * binom(static_cast<long>(n), static_cast<long>(k));
  });
}

std::vector<Witness> stirling1_colrec(const Context& ctx) {
  const Triangle s = ctx.entries(stirling_first(ctx.order));
  return over_entries(ctx, s, [&](std::size_t n, std::size_t k) {
    Rational acc;
    for (std::size_t i = 0; i <= n - k; ++i) {
      const Rational sign = i % 2 == 0 ? R(1) : R(-1);
      acc += falling_factorial(R(static_cast<long>(n)), i + 1) / R(static_cast<long>(i + 1)) * sign *
             s.rows[n - 1 - i][k - 1];
    }
    return acc / R(static_cast<long>(k));
  });
}

std::vector<Witness> stirling1_rowrec(const Context& ctx) {
  const Triangle s = ctx.entries(stirling_first(ctx.order));
  const std::vector<Rational> bern = elementary::bernoulli_numbers(ctx.n_max);
  return over_entries(ctx, s, [&](std::size_t n, std::size_t k) {
    Rational acc;
    for (std::size_t i = 0; i <= n - k; ++i) {
      acc += binom(static_cast<long>(k - 1 + i), static_cast<long>(i)) * bern[i] * s.rows[n - 1][k - 1 + i];
    }
    return acc * R(static_cast<long>(n)) / R(static_cast<long>(k));
  });
}

std::vector<Witness> stirling1_rowrec2(const Context& ctx) {
  const Triangle s = ctx.entries(stirling_first(ctx.order));
  const std::vector<Rational> bern = elementary::bernoulli_numbers(ctx.n_max);
  return over_entries(ctx, s, [&](std::size_t n, std::size_t k) {
    const std::vector<Rational> gen = moment_power(bern, k, ctx.n_max);
    Rational acc;
    for (std::size_t i = 0; i <= n - k; ++i) acc += gen[i] * s.rows[n - k][i];
    return acc * binom(static_cast<long>(n), static_cast<long>(k));
  });
}

std::vector<Witness> ballot_formula(const Context& ctx) {
  const Triangle t = ctx.entries(catalan_array(ctx.order));
  std::vector<Witness> out;
  for (std::size_t n = 0; n <= ctx.n_max; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const auto ln = static_cast<long>(n), lk = static_cast<long>(k);
      out.push_back(w(at_nk(n, k), t.rows[n][k], R(lk + 1) / R(ln + 1) * binom(2 * ln - lk, ln)));
    }
  }
  return out;
}

std::vector<Witness> catalan_rowsum(const Context& ctx) {
  const Triangle t = ctx.entries(catalan_array(ctx.order));
  std::vector<Witness> out;
  for (std::size_t n = 0; n <= ctx.n_max; ++n) out.push_back(w(at_n(n), elementary::catalan(n + 1), row_sum(t, n)));
  return out;
}

std::vector<Witness> catalan_convolution(const Context& ctx) {
  const Triangle t = ctx.entries(catalan_array(ctx.order));
  std::vector<Witness> out;
  for (std::size_t n = 0; n <= ctx.n_max; ++n) {
    Rational conv;
    for (std::size_t i = 0; i <= n; ++i) conv += elementary::catalan(i) * elementary::catalan(n - i);
    out.push_back(w(at_n(n), elementary::catalan(n + 1), conv));
    out.push_back(w(at_n(n) + " column", elementary::catalan(n + 1), t.rows[n + 1][1]));
  }
  return out;
}

std::vector<Witness> cat2_factor(const Context& ctx) {
  const RiordanArray cat = catalan_array(ctx.order);
  const RiordanArray pas = pascal(Flavor::ordinary, ctx.order);
  const Triangle target = ctx.entries(catalan2_array(ctx.order));
  const Triangle c = ctx.entries(cat);
  const Triangle literal = matrix_product(c, ctx.entries(pas));
  const Triangle paired = triangle(multiply(cat, pas));
  std::vector<Witness> out;
  for (std::size_t n = 0; n <= ctx.n_max; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      Rational sum;
      for (std::size_t i = k; i <= n; ++i) sum += binom(static_cast<long>(i), static_cast<long>(k)) * c.rows[n][i];
      out.push_back(w(at_nk(n, k), target.rows[n][k], sum));
      out.push_back(w(at_nk(n, k) + " product", target.rows[n][k], literal.rows[n][k]));
      out.push_back(w(at_nk(n, k) + " pair", target.rows[n][k], paired.rows[n][k]));
    }
  }
  return out;
}

std::vector<Witness> cat2_entry(const Context& ctx) {
  const Triangle t = ctx.entries(catalan2_array(ctx.order));
  std::vector<Witness> out;
  for (std::size_t n = 0; n <= ctx.n_max; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const auto ln = static_cast<long>(n), lk = static_cast<long>(k);
      out.push_back(w(at_nk(n, k), t.rows[n][k], R(lk + 1) / R(ln + 1) * binom(2 * ln + 2, ln - lk)));
    }
  }
  return out;
}

std::vector<Witness> cheb_coeffs(const Context& ctx) {
  const Umbra m2chi = chi_scaled(-2, ctx.order);
  const Triangle t = ctx.entries(ordinary_bell(m2chi));
  std::vector<Witness> out;
  Polynomial prev2, prev1;
  const Polynomial shift({R(-2), R(1)});  // x - 2
  for (std::size_t n = 0; n <= ctx.n_max; ++n) {
    const Polynomial s(t.rows[n]);
    Polynomial recursive;
    if (n == 0) recursive = Polynomial::monomial(0);
    else if (n == 1) recursive = shift;
    else recursive = shift * prev1 - prev2;
    out.push_back(w(at_n(n), s, cheb_closed_form(n)));
    out.push_back(w(at_n(n) + " recursion", s, recursive));
    prev2 = std::move(prev1);
    prev1 = std::move(recursive);
  }
  return out;
}

std::vector<Witness> power_column(const Context& ctx, long base, const std::vector<Rational>& column) {
  const Triangle t = ctx.entries(catalan2_array(ctx.order));
  std::vector<Witness> out;
  for (std::size_t n = 0; n <= ctx.n_max; ++n) {
    out.push_back(w(at_n(n), pow(R(base), static_cast<long>(n)), weighted_row(t, n, column)));
  }
  return out;
}

std::vector<Rational> periodic(std::size_t length, std::initializer_list<long> period) {
  std::vector<Rational> v;
  const std::vector<long> p(period);
  for (std::size_t i = 0; i < length; ++i) v.emplace_back(p[i % p.size()]);
  return v;
}

std::vector<Witness> periodic_2(const Context& ctx) {
  return power_column(ctx, 2, periodic(ctx.n_max + 1, {1, 0, -1, 0}));
}

std::vector<Witness> periodic_3(const Context& ctx) {
  return power_column(ctx, 3, periodic(ctx.n_max + 1, {1, 1, 0, -1, -1, 0}));
}

std::vector<Witness> nat_4n(const Context& ctx) {
  std::vector<Rational> naturals;
  for (std::size_t k = 0; k <= ctx.n_max; ++k) naturals.emplace_back(static_cast<long>(k + 1));
  std::vector<Witness> out = power_column(ctx, 4, naturals);
  for (std::size_t n = 0; n <= ctx.n_max; ++n) {
    const auto ln = static_cast<long>(n);
    Rational closed;
    for (long k = 0; k <= ln; ++k) closed += R((k + 1) * (k + 1)) / R(ln + 1) * binom(2 * ln + 2, ln - k);
    out.push_back(w(at_n(n) + " closed", pow(R(4), ln), closed));
  }
  return out;
}

std::vector<Witness> fib_5n(const Context& ctx) {
  std::vector<Rational> fib;
  for (std::size_t k = 0; k <= ctx.n_max; ++k) fib.push_back(elementary::fibonacci(2 * k + 2));
  std::vector<Witness> out = power_column(ctx, 5, fib);
  for (std::size_t n = 0; n <= ctx.n_max; ++n) {
    const auto ln = static_cast<long>(n);
    Rational closed;
    for (long k = 0; k <= ln; ++k) {
      closed += R(k + 1) / R(ln + 1) * binom(2 * ln + 2, ln - k) * fib[static_cast<std::size_t>(k)];
    }
    out.push_back(w(at_n(n) + " closed", pow(R(5), ln), closed));
  }
  return out;
}

Rational sign_pow(std::size_t n) { return n % 2 == 0 ? R(1) : R(-1); }

std::vector<Witness> fib_even_inverse(const Context& ctx) {
  const Triangle inv = ctx.entries(inverse(catalan2_array(ctx.order)));
  std::vector<Witness> out;
  for (std::size_t n = 0; n <= ctx.n_max; ++n) {
    const auto ln = static_cast<long>(n);
    Rational sum, via_array;
    for (long k = 0; k <= ln; ++k) {
      sum += (binom(ln + k + 2, ln - k) - binom(ln + k + 1, ln - k - 1)) * pow(R(-5), k);
      via_array += inv.rows[n][static_cast<std::size_t>(k)] * pow(R(5), k);
    }
    out.push_back(w(at_n(n), elementary::fibonacci(2 * n + 2), sign_pow(n) * sum));
    out.push_back(w(at_n(n) + " inverse-array", elementary::fibonacci(2 * n + 2), via_array));
  }
  return out;
}

std::vector<Witness> fib_odd(const Context& ctx) {
  std::vector<Witness> out;
  for (std::size_t n = 0; n <= ctx.n_max; ++n) {
    const auto ln = static_cast<long>(n);
    Rational sum;
    for (long k = 0; k <= ln; ++k) sum += (binom(ln + k + 2, ln - k) - binom(ln + k, ln - k - 2)) * pow(R(-5), k);
    out.push_back(w(at_n(n), elementary::fibonacci(2 * n + 1), sign_pow(n) * sum));
  }
  return out;
}

std::vector<Witness> inv_pascal(const Context& ctx) {
  const Triangle inv = ctx.entries(inverse(pascal(Flavor::ordinary, ctx.order)));
  const Triangle target = ctx.entries(ordinary_bell(chi_scaled(-1, ctx.order)));
  std::vector<Witness> out;
  for (std::size_t n = 0; n <= ctx.n_max; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      out.push_back(w(at_nk(n, k), inv.rows[n][k], target.rows[n][k]));
      out.push_back(w(at_nk(n, k) + " signed-binomial", inv.rows[n][k],
                      sign_pow(n - k) * binom(static_cast<long>(n), static_cast<long>(k))));
    }
  }
  return out;
}

std::vector<Witness> cat2_inverse_factor(const Context& ctx) {
  const Triangle inv = ctx.entries(inverse(catalan2_array(ctx.order)));
  const Triangle factored = matrix_product(ctx.entries(ordinary_bell(chi_scaled(-1, ctx.order))),
                                           ctx.entries(ordinary_bell(chi_negated(ctx.order))));
  const Triangle explicit_form = ctx.entries(ordinary_bell(chi_scaled(-2, ctx.order)));
  std::vector<Witness> out;
  for (std::size_t n = 0; n <= ctx.n_max; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      out.push_back(w(at_nk(n, k) + " factored", inv.rows[n][k], factored.rows[n][k]));
      out.push_back(w(at_nk(n, k) + " explicit", inv.rows[n][k], explicit_form.rows[n][k]));
    }
  }
  return out;
}

std::vector<Witness> cheb_action(const Context& ctx) {
  const Triangle t = ctx.entries(catalan2_array(ctx.order));
  std::vector<Witness> out;
  for (std::size_t n = 0; n <= ctx.n_max; ++n) {
    Polynomial rhs;
    for (std::size_t k = 0; k <= n; ++k) rhs += t.rows[n][k] * cheb_closed_form(k);
    out.push_back(w(at_n(n), Polynomial::monomial(n), rhs));
  }
  return out;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"pascal-rowsum", "2^n = sum_k binom(n,k)", pascal_rowsum},
      {"stirling-bell", "B_n = sum_k S(n,k)", stirling_bell},
      {"stirling-inverse", "s S = I and x^n = sum_k S(n,k) (x)_k", stirling_inverse},
      {"stirling1-altsum", "0 = sum_k s(n,k) for n >= 2", stirling1_altsum},
      {"stirling2-colrec", "S(n,k) = (1/k) sum_i binom(n,i+1) S(n-1-i,k-1)", stirling2_colrec},
      {"stirling2-rowrec", "S(n,k) = (n/k) sum_i binom(k-1+i,i) C_i S(n-1,k-1+i), C_i Cauchy numbers",
       stirling2_rowrec},
      {"stirling2-rowrec2", "S(n,k) = binom(n,k) sum_i C^(k)_i S(n-k,i), generalized Cauchy numbers",
       stirling2_rowrec2},
      {"stirling1-colrec", "s(n,k) = (1/k) sum_i (n)_{i+1}/(i+1) (-1)^i s(n-1-i,k-1)", stirling1_colrec},
      {"stirling1-rowrec", "s(n,k) = (n/k) sum_i binom(k-1+i,i) b_i s(n-1,k-1+i), b_i Bernoulli numbers",
       stirling1_rowrec},
      {"stirling1-rowrec2", "s(n,k) = binom(n,k) sum_i b^(k)_i s(n-k,i), generalized Bernoulli numbers",
       stirling1_rowrec2},
      {"ballot-formula", "[c,c]_{n,k} = ((k+1)/(n+1)) binom(2n-k,n)", ballot_formula},
      {"catalan-rowsum", "C_{n+1} = sum_k [c,c]_{n,k}", catalan_rowsum},
      {"catalan-convolution", "C_{n+1} = sum_i C_i C_{n-i}", catalan_convolution},
      {"cat2-factor", "[2.c,2.c] = [c,c][u,u], entries sum_i binom(i,k) [c,c]_{n,i}", cat2_factor},
      {"cat2-entry", "[2.c,2.c]_{n,k} = ((k+1)/(n+1)) binom(2n+2,n-k)", cat2_entry},
      {"cheb-coeffs", "s_n(x) = sum_k binom(n+k+1,n-k)(-1)^{n-k} x^k = (x-2)s_{n-1} - s_{n-2}", cheb_coeffs},
      {"periodic-2", "[2.c,2.c] (1,0,-1,0,...) = (2^n)", periodic_2},
      {"periodic-3", "[2.c,2.c] (1,1,0,-1,-1,0,...) = (3^n)", periodic_3},
      {"nat-4n", "4^n = sum_k ((k+1)^2/(n+1)) binom(2n+2,n-k)", nat_4n},
      {"fib-5n", "5^n = sum_k ((k+1)/(n+1)) binom(2n+2,n-k) F_{2k+2}", fib_5n},
      {"fib-even-inverse", "F_{2n+2} = (-1)^n sum_k (binom(n+k+2,n-k) - binom(n+k+1,n-k-1)) (-5)^k",
       fib_even_inverse},
      {"fib-odd", "F_{2n+1} = (-1)^n sum_k (binom(n+k+2,n-k) - binom(n+k,n-k-2)) (-5)^k", fib_odd},
      {"inv-pascal", "[u,u]^-1 = [-1.chi,-1.chi], entries (-1)^{n-k} binom(n,k)", inv_pascal},
      {"cat2-inverse-factor", "[2.c,2.c]^-1 = [-1.chi,-1.chi][chi.-1,chi.-1] = [-2.chi,-2.chi]",
       cat2_inverse_factor},
      {"cheb-action", "[2.c,2.c] (s_n(x)) = (x^n)", cheb_action},
  };
  return entries;
}

const Entry& find(std::string_view name) {
  for (const Entry& e : registry()) {
    if (name == e.name) return e;
  }
  throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

}  // namespace

std::vector<Witness> IdentityReport::failures() const {
  std::vector<Witness> out;
  std::copy_if(witnesses.begin(), witnesses.end(), std::back_inserter(out), [](const Witness& x) { return !x.ok(); });
  return out;
}

IdentityReport summarize(std::string name, std::size_t n_max, std::vector<Witness> witnesses) {
  IdentityReport report{std::move(name), n_max, true, std::move(witnesses)};
  report.passed = std::all_of(report.witnesses.begin(), report.witnesses.end(), [](const Witness& x) { return x.ok(); });
  return report;
}

std::vector<std::string> catalog() {
  std::vector<std::string> names;
  for (const Entry& e : registry()) names.emplace_back(e.name);
  return names;
}

std::string statement(std::string_view name) { return find(name).statement; }

IdentityReport run(std::string_view name, std::size_t n_max, const RunOptions& options) {
  const Entry& entry = find(name);
  Context ctx{n_max, std::max(options.order, n_max + 1), options.materialize};
  if (!ctx.materialize) ctx.materialize = [](const RiordanArray& r) { return triangle(r); };
  return summarize(entry.name, n_max, entry.check(ctx));
}

}  // namespace riordan
