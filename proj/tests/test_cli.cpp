#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <string>

#include "cli_runner.hpp"
#include "riordan/io.hpp"

TEST(Cli, GoldenFiles) {
  for (const auto& c : cli::golden_cases()) {
    const cli::Result r = cli::run(c.args);
    EXPECT_EQ(r.code, 0) << c.name;
    EXPECT_EQ(r.out, cli::golden(c.name)) << c.name;
  }
}

TEST(Cli, JsonOutputRoundTrips) {
  const cli::Result r = cli::run("array --flavor ord --gamma 2.catalan --alpha bernoulli --rows 7 --format json");
  ASSERT_EQ(r.code, 0);
  const riordan::Triangle t = riordan::io::triangle_from_json(riordan::io::Json::parse(r.out));
  EXPECT_EQ(riordan::io::render(t, riordan::io::Format::json), r.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli::run("array --flavor sideways").code, 2);
  EXPECT_EQ(cli::run("array --gamma banana").code, 2);
  EXPECT_EQ(cli::run("array --rows 20 --order 4").code, 2);
  EXPECT_EQ(cli::run("pow --gamma unity").code, 2);
  EXPECT_EQ(cli::run("pow --gamma unity --c 1/0").code, 2);
  EXPECT_EQ(cli::run("verify no-such-identity").code, 2);
  EXPECT_EQ(cli::run("frobnicate").code, 2);
  EXPECT_EQ(cli::run("").code, 2);
  EXPECT_EQ(cli::run("verify fib-5n --n-max 6").code, 0);
  EXPECT_EQ(cli::run("check --all --flavor ord --gamma catalan --alpha catalan --rows 8").code, 0);
  EXPECT_EQ(cli::run("list").code, 0);
}

TEST(Cli, OrderFromEnvironment) {
  const cli::Result r = cli::run("array --gamma unity --format csv");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 17);
  setenv("RIORDAN_ORDER", "5", 1);
  const cli::Result small = cli::run("array --gamma unity --format csv");
  EXPECT_EQ(std::count(small.out.begin(), small.out.end(), '\n'), 6);
  setenv("RIORDAN_ORDER", "x", 1);
  EXPECT_EQ(cli::run("array").code, 2);
  unsetenv("RIORDAN_ORDER");
}

TEST(Cli, ListAndAct) {
  const cli::Result list = cli::run("list");
  EXPECT_NE(list.out.find("fib-5n"), std::string::npos);
  const cli::Result umbrae = cli::run("list --umbrae");
  EXPECT_NE(umbrae.out.find("boolean-unity"), std::string::npos);
  const cli::Result col = cli::run("act --flavor ord --gamma 2.catalan --alpha 2.catalan --order 6 --column 1,0,-1,0,1,0,-1 --format csv");
  EXPECT_EQ(col.out, "1,2,4,8,16,32,64\n");
}
