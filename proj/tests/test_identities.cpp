#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "riordan/identities.hpp"

using namespace riordan;

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST(Elementary, AgreesWithOracles) {
  const std::size_t N = 10;
  for (std::size_t n = 0; n <= N; ++n) {
    EXPECT_EQ(elementary::catalan(n), oracle::dyck_paths(n));
    EXPECT_EQ(elementary::fibonacci(n), oracle::fibonacci_by_tilings(n));
  }
  EXPECT_EQ(elementary::bell_numbers(N), oracle::bell_by_partitions(N));
  EXPECT_EQ(elementary::bernoulli_numbers(N), oracle::bernoulli_akiyama_tanigawa(N));
  EXPECT_EQ(elementary::cauchy_numbers(N), oracle::cauchy_by_stirling(N));
  EXPECT_EQ(elementary::stirling2_numbers(9).rows, oracle::stirling2_by_partitions(9));
  EXPECT_EQ(elementary::stirling1_numbers(9).rows, oracle::stirling1_by_permutations(9));
}

TEST(Identities, Catalog) {
  const auto names = catalog();
  EXPECT_GE(names.size(), 15u);
  EXPECT_TRUE(contains(names, "fib-5n"));
  EXPECT_TRUE(contains(names, "nat-4n"));
  for (const auto& name : names) EXPECT_FALSE(statement(name).empty());
  EXPECT_THROW(run("no-such-identity", 3), std::invalid_argument);
  EXPECT_THROW(statement("no-such-identity"), std::invalid_argument);
}

TEST(Identities, Examples) {
  const IdentityReport nat = run("nat-4n", 2);
  EXPECT_TRUE(nat.passed);
  ASSERT_GE(nat.witnesses.size(), 3u);
  EXPECT_EQ(nat.witnesses[2].at, "n=2");
  EXPECT_EQ(nat.witnesses[2].lhs, "16");
  EXPECT_EQ(nat.witnesses[2].rhs, "16");

  const IdentityReport fib = run("fib-5n", 4);
  EXPECT_TRUE(fib.passed);
  std::vector<Rational> column;
  for (std::size_t k = 0; k <= 4; ++k) column.push_back(elementary::fibonacci(2 * k + 2));
  EXPECT_EQ(column, (std::vector<Rational>{1, 3, 8, 21, 55}));

  const IdentityReport trivial = run("pascal-rowsum", 0);
  EXPECT_TRUE(trivial.passed);
  EXPECT_EQ(trivial.witnesses.front().lhs, "1");
}

TEST(Identities, AllPassUpToTen) {
  for (const auto& name : catalog()) {
    const IdentityReport r = run(name, 10);
    EXPECT_TRUE(r.passed) << name;
    EXPECT_FALSE(r.witnesses.empty()) << name;
  }
}

TEST(Identities, CorruptedEntryIsCaught) {
  RunOptions opts;
  opts.materialize = [](const RiordanArray& r) {
    Triangle t = triangle(r);
    t.rows[3][1] += Rational(1);
    return t;
  };
  for (const std::string name : {"ballot-formula", "stirling-bell", "pascal-rowsum", "cat2-entry", "nat-4n"}) {
    const IdentityReport r = run(name, 6, opts);
    EXPECT_FALSE(r.passed) << name;
    ASSERT_FALSE(r.failures().empty()) << name;
    EXPECT_NE(r.failures().front().lhs, r.failures().front().rhs);
  }
}

TEST(Identities, SummarizeInvariant) {
  EXPECT_TRUE(summarize("x", 0, {}).passed);
  EXPECT_TRUE(summarize("x", 0, {{"n=0", "1", "1"}}).passed);
  const IdentityReport bad = summarize("x", 0, {{"n=0", "1", "1"}, {"n=1", "2", "3"}});
  EXPECT_FALSE(bad.passed);
  EXPECT_EQ(bad.failures().size(), 1u);
}
