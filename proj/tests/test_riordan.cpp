#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "riordan/riordan_array.hpp"

using namespace riordan;

namespace {

std::vector<Rational> R(std::initializer_list<Rational> xs) { return xs; }

Umbra chi_scaled(long c, std::size_t order) { return dot_int(c, named("singleton", order)); }

// Row sums all 1: f_γ = e^{z - z f_α} (exponential) or (1 - z f_α)/(1 - z) (ordinary).
RiordanArray stochastic(Flavor f, const Umbra& alpha) {
  const std::size_t N = alpha.order();
  const Series z = Series::variable(N);
  const Series zf = z * alpha.egf();
  Series geometric(N);
  for (std::size_t n = 0; n <= N; ++n) geometric[n] = Rational(1);
  const Series g = f == Flavor::exponential ? exp_zero(z - zf) : (Series::one(N) - zf) * geometric;
  return RiordanArray(f, Umbra::from_egf(g), alpha);
}

}  // namespace

TEST(RiordanArray, FlavorAndOrderChecks) {
  EXPECT_THROW(RiordanArray(Flavor::exponential, named("unity", 4), named("unity", 5)), std::invalid_argument);
  const RiordanArray e = pascal(Flavor::exponential, 4), o = pascal(Flavor::ordinary, 4);
  EXPECT_THROW(multiply(e, o), std::invalid_argument);
  EXPECT_THROW(entry(e, 5, 0), std::out_of_range);
  EXPECT_EQ(entry(e, 2, 3), Rational(0));
}

TEST(RiordanArray, NamedTriangles) {
  EXPECT_EQ(entry(pascal(Flavor::exponential), 4, 2), Rational(6));
  const Triangle cat = triangle(catalan_array(6), 5);
  EXPECT_EQ(cat.rows[3], R({5, 5, 3, 1}));
  EXPECT_EQ(cat.rows[4], R({14, 14, 9, 4, 1}));
  const Triangle cat2 = triangle(catalan2_array(6), 5);
  EXPECT_EQ(cat2.rows[3], R({14, 14, 6, 1}));
  EXPECT_EQ(cat2.rows[4], R({42, 48, 27, 8, 1}));
  for (std::size_t n = 0; n <= 8; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      const auto ln = static_cast<long>(n), lk = static_cast<long>(k);
      EXPECT_EQ(entry(catalan2_array(10), n, k), Rational(lk + 1, ln + 1) * oracle::choose(2 * ln + 2, ln - lk));
      EXPECT_EQ(entry(catalan_array(10), n, k), Rational(lk + 1, ln + 1) * oracle::choose(2 * ln - lk, ln));
    }
  EXPECT_EQ(triangle(RiordanArray::identity(Flavor::ordinary, 5)), identity_triangle(Flavor::ordinary, 6));
}

TEST(RiordanArray, StirlingTrianglesMatchCounting) {
  const std::size_t rows = 8;
  EXPECT_EQ(triangle(stirling_second(10), rows).rows, oracle::stirling2_by_partitions(rows));
  EXPECT_EQ(triangle(stirling_first(10), rows).rows, oracle::stirling1_by_permutations(rows));
}

TEST(RiordanArray, Multiplication) {
  oracle::Gen gen(51);
  const RiordanArray r = gen.array(Flavor::exponential, 8);
  EXPECT_EQ(multiply(r, RiordanArray::identity(Flavor::exponential, 8)), r);
  EXPECT_EQ(multiply(RiordanArray::identity(Flavor::exponential, 8), r), r);
  EXPECT_EQ(triangle(multiply(catalan_array(10), pascal(Flavor::ordinary, 10))), triangle(catalan2_array(10)));
}

TEST(RiordanArray, Inverse) {
  const std::size_t N = 10;
  const Triangle inv = triangle(inverse(pascal(Flavor::ordinary, N)));
  EXPECT_EQ(inverse(pascal(Flavor::ordinary, N)),
            RiordanArray(Flavor::ordinary, chi_scaled(-1, N), chi_scaled(-1, N)));
  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      EXPECT_EQ(inv.rows[n][k], ((n - k) % 2 ? Rational(-1) : Rational(1)) *
                                    oracle::choose(static_cast<long>(n), static_cast<long>(k)));
  const Umbra chi_neg = dot(named("singleton", N), scalar_umbra(Rational(-1), N));
  EXPECT_EQ(inverse(catalan_array(N)), RiordanArray(Flavor::ordinary, chi_neg, chi_neg));
  EXPECT_EQ(inverse(stirling_second(N)), stirling_first(N));
}

TEST(RiordanArray, Action) {
  const std::size_t N = 10;
  const Umbra unity = named("unity", N);
  const Umbra two_n = act(pascal(Flavor::exponential, N), unity);
  for (std::size_t n = 0; n <= N; ++n) EXPECT_EQ(two_n.moment(n), pow(Rational(2), static_cast<long>(n)));
  EXPECT_EQ(act(stirling_second(N), unity), named("bell", N));
  EXPECT_EQ(act(stirling_first(N), unity), named("singleton", N));
  std::vector<Rational> periodic;
  for (std::size_t k = 0; k <= N; ++k) periodic.push_back(Rational(std::vector<long>{1, 0, -1, 0}[k % 4]));
  const std::vector<Rational> powers = riordan::apply(catalan2_array(N), periodic);
  for (std::size_t n = 0; n <= N; ++n) EXPECT_EQ(powers[n], pow(Rational(2), static_cast<long>(n)));
  EXPECT_THROW(riordan::apply(catalan2_array(N), std::vector<Rational>(3)), std::invalid_argument);
}

TEST(RiordanArray, RowSums) {
  const std::size_t N = 10;
  const auto bell = oracle::bell_by_partitions(N);
  const std::vector<Rational> pascal_rows = row_sums(pascal(Flavor::exponential, N));
  const std::vector<Rational> catalan_rows = row_sums(catalan_array(N));
  const std::vector<Rational> stirling_rows = row_sums(stirling_second(N));
  for (std::size_t n = 0; n <= N; ++n) {
    EXPECT_EQ(pascal_rows[n], pow(Rational(2), static_cast<long>(n)));
    EXPECT_EQ(catalan_rows[n], oracle::dyck_paths(n + 1));
    EXPECT_EQ(stirling_rows[n], bell[n]);
  }
}

TEST(RiordanArray, Classify) {
  const SubgroupReport p = classify(pascal(Flavor::exponential, 8));
  EXPECT_TRUE(p.appell);
  EXPECT_FALSE(p.associated);
  const SubgroupReport s = classify(stirling_second(8));
  EXPECT_TRUE(s.associated);
  EXPECT_FALSE(s.appell);
  EXPECT_TRUE(classify(catalan_array(8)).bell);
  const SubgroupReport id = classify(RiordanArray::identity(Flavor::exponential, 8));
  EXPECT_TRUE(id.appell && id.associated && id.bell && id.stochastic && id.stab_chi);
  EXPECT_FALSE(classify(pascal(Flavor::exponential, 8)).stochastic);
  oracle::Gen gen(56);
  for (Flavor f : {Flavor::exponential, Flavor::ordinary}) {
    const RiordanArray a = stochastic(f, gen.umbra(8)), b = stochastic(f, gen.umbra(8));
    EXPECT_TRUE(classify(a).stochastic);
    EXPECT_TRUE(classify(multiply(a, b)).stochastic);
    EXPECT_TRUE(classify(inverse(a)).stochastic);
  }
  EXPECT_TRUE(stabilizes(RiordanArray::identity(Flavor::ordinary, 8), named("bell", 8)));
}

TEST(RiordanArray, PropertyFlavorBridge) {
  oracle::Gen gen(52);
  for (int trial = 0; trial < 5; ++trial) {
    const Umbra g = gen.umbra(9), a = gen.umbra(9);
    const Triangle e = triangle(RiordanArray(Flavor::exponential, g, a));
    const Triangle o = triangle(RiordanArray(Flavor::ordinary, g, a));
    for (std::size_t n = 0; n <= 9; ++n)
      for (std::size_t k = 0; k <= n; ++k)
        EXPECT_EQ(oracle::fact(n) * o.rows[n][k], oracle::fact(k) * e.rows[n][k]);
  }
}

TEST(RiordanArray, PropertyGroupLaws) {
  oracle::Gen gen(53);
  for (Flavor f : {Flavor::exponential, Flavor::ordinary}) {
    for (int trial = 0; trial < 6; ++trial) {
      const RiordanArray a = gen.array(f, 8), b = gen.array(f, 8), c = gen.array(f, 8);
      EXPECT_EQ(triangle(multiply(a, b)).rows, oracle::matmul(triangle(a).rows, triangle(b).rows));
      EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
      EXPECT_EQ(multiply(a, inverse(a)), RiordanArray::identity(f, 8));
      EXPECT_EQ(multiply(inverse(a), a), RiordanArray::identity(f, 8));
    }
  }
}

TEST(RiordanArray, PropertyFundamentalTheorem) {
  oracle::Gen gen(54);
  for (Flavor f : {Flavor::exponential, Flavor::ordinary}) {
    for (int trial = 0; trial < 5; ++trial) {
      const RiordanArray r = gen.array(f, 9);
      const Umbra eta = gen.umbra(9);
      const Triangle t = triangle(r);
      const Umbra moved = act(r, eta);
      for (std::size_t n = 0; n <= 9; ++n) {
        Rational sum;
        for (std::size_t k = 0; k <= n; ++k) {
          sum += t.rows[n][k] * (f == Flavor::exponential ? eta.moment(k) : eta.moment(k) / oracle::fact(k));
        }
        EXPECT_EQ(f == Flavor::exponential ? moved.moment(n) : moved.moment(n) / oracle::fact(n), sum);
      }
    }
  }
}

TEST(RiordanArray, PropertySubgroupClosure) {
  oracle::Gen gen(55);
  const std::size_t N = 7;
  const Umbra eps = named("augmentation", N);
  for (int trial = 0; trial < 4; ++trial) {
    const Flavor f = trial % 2 ? Flavor::ordinary : Flavor::exponential;
    const RiordanArray a1(f, gen.umbra(N), eps), a2(f, gen.umbra(N), eps);
    EXPECT_TRUE(classify(multiply(a1, a2)).appell);
    EXPECT_TRUE(classify(inverse(a1)).appell);
    const RiordanArray s1(f, eps, gen.umbra(N)), s2(f, eps, gen.umbra(N));
    EXPECT_TRUE(classify(multiply(s1, s2)).associated);
    EXPECT_TRUE(classify(inverse(s1)).associated);
    const Umbra u1 = gen.umbra(N), u2 = gen.umbra(N);
    const RiordanArray b1(f, u1, u1), b2(f, u2, u2);
    EXPECT_TRUE(classify(multiply(b1, b2)).bell);
    EXPECT_TRUE(classify(inverse(b1)).bell);
  }
}
