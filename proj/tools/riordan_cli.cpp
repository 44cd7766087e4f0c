#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riordan/genpowers.hpp"
#include "riordan/identities.hpp"
#include "riordan/io.hpp"
#include "riordan/recursions.hpp"
#include "riordan/riordan_array.hpp"
#include "riordan/sheffer.hpp"

using namespace riordan;

namespace {

struct ArrayOptions {
  std::string flavor = "exp";
  std::string gamma = "augmentation";
  std::string alpha = "augmentation";
  std::optional<std::size_t> rows;
  std::optional<std::size_t> order;
  std::string format = "table";
};

void add_array_options(CLI::App* cmd, ArrayOptions& o) {
  cmd->add_option("--flavor", o.flavor, "exp or ord")->capture_default_str();
  cmd->add_option("--gamma", o.gamma, "umbra expression: [<rational>.]<name> or @file.json")->capture_default_str();
  cmd->add_option("--alpha", o.alpha, "umbra expression: [<rational>.]<name> or @file.json")->capture_default_str();
  cmd->add_option("--rows", o.rows, "rows to print, at most order + 1");
  cmd->add_option("--order", o.order, "truncation order N");
  cmd->add_option("--format", o.format, "table, csv or json")->capture_default_str();
}

std::size_t default_order() {
  if (const char* env = std::getenv("RIORDAN_ORDER")) {
    try {
      std::size_t pos = 0;
      const unsigned long v = std::stoul(env, &pos);
      if (pos == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("RIORDAN_ORDER must be a natural number, got '" + std::string(env) + "'");
  }
  return kDefaultOrder;
}

std::size_t order_of(const ArrayOptions& o) { return o.order ? *o.order : default_order(); }

std::size_t rows_of(const ArrayOptions& o) {
  const std::size_t order = order_of(o);
  const std::size_t rows = o.rows ? *o.rows : order + 1;
  if (rows > order + 1) {
    throw std::invalid_argument("--rows " + std::to_string(rows) + " exceeds order + 1 = " + std::to_string(order + 1));
  }
  return rows;
}

RiordanArray build(const ArrayOptions& o, const std::string& gamma, const std::string& alpha) {
  const std::size_t order = order_of(o);
  return RiordanArray(parse_flavor(o.flavor), io::parse_spec(gamma, order), io::parse_spec(alpha, order));
}

RiordanArray build(const ArrayOptions& o) { return build(o, o.gamma, o.alpha); }

void print_triangle(const Triangle& t, const ArrayOptions& o) { std::cout << io::render(t, io::parse_format(o.format)); }

void print_values(std::span<const Rational> values, io::Format format) {
  switch (format) {
    case io::Format::json: {
      io::Json list = io::Json::array();
      for (const Rational& x : values) list.push_back(x.str());
      std::cout << list.dump() << '\n';
      break;
    }
    case io::Format::csv:
      for (std::size_t i = 0; i < values.size(); ++i) std::cout << (i ? "," : "") << values[i].str();
      std::cout << '\n';
      break;
    case io::Format::table:
      for (std::size_t i = 0; i < values.size(); ++i) std::cout << i << ": " << values[i].str() << '\n';
      break;
  }
}

void print_umbra(const Umbra& u, std::size_t count, io::Format format) {
  const auto m = u.moments().first(count);
  if (format == io::Format::json) {
    std::cout << io::umbra_to_json(Umbra(std::vector<Rational>(m.begin(), m.end()))).dump() << '\n';
  } else {
    print_values(m, format);
  }
}

std::vector<Rational> parse_column(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(Rational::parse(item));
  return out;
}

std::string describe(const RecursionReport& r) {
  return to_string(r.rule) + " n=" + std::to_string(r.n) + " k=" + std::to_string(r.k) + ": " + r.lhs.str() +
         (r.holds() ? " = " : " != ") + r.rhs.str();
}

void print_identity(const IdentityReport& report, bool json) {
  if (json) {
    std::cout << io::report_to_json(report).dump() << '\n';
    return;
  }
  std::cout << report.name << ": " << (report.passed ? "pass" : "fail") << " (n <= " << report.n_max << ", "
            << report.witnesses.size() << " witnesses)\n";
  for (const Witness& w : report.failures()) std::cout << "  " << w.at << ": " << w.lhs << " != " << w.rhs << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Riordan arrays through umbral calculus"};
  app.require_subcommand(1);

  ArrayOptions opts;
  int exit_code = 0;

  auto* array_cmd = app.add_subcommand("array", "print the array generated by (gamma, alpha)");
  add_array_options(array_cmd, opts);
  array_cmd->callback([&] {
    print_triangle(triangle(build(opts), rows_of(opts)), opts);
  });

  std::string gamma2 = "augmentation", alpha2 = "augmentation";
  auto* mul_cmd = app.add_subcommand("mul", "product of (gamma, alpha) and (gamma2, alpha2)");
  add_array_options(mul_cmd, opts);
  mul_cmd->add_option("--gamma2", gamma2, "right factor gamma")->capture_default_str();
  mul_cmd->add_option("--alpha2", alpha2, "right factor alpha")->capture_default_str();
  mul_cmd->callback([&] {
    const RiordanArray product = multiply(build(opts), build(opts, gamma2, alpha2));
    print_triangle(triangle(product, rows_of(opts)), opts);
  });

  auto* inv_cmd = app.add_subcommand("inv", "inverse array");
  add_array_options(inv_cmd, opts);
  inv_cmd->callback([&] { print_triangle(triangle(inverse(build(opts)), rows_of(opts)), opts); });

  std::string power = "1";
  auto* pow_cmd = app.add_subcommand("pow", "generalized power sum_j binom(c,j) (M - I)^j");
  add_array_options(pow_cmd, opts);
  pow_cmd->add_option("--c", power, "rational exponent p/q")->required();
  pow_cmd->callback([&] {
    const Triangle t = general_power(triangle(build(opts), rows_of(opts)), Rational::parse(power));
    print_triangle(t, opts);
  });

  std::string eta, column;
  auto* act_cmd = app.add_subcommand("act", "action on an umbra or a literal column");
  add_array_options(act_cmd, opts);
  auto* eta_opt = act_cmd->add_option("--eta", eta, "umbra acted on; prints gamma + eta.beta.D alpha");
  auto* col_opt = act_cmd->add_option("--column", column, "comma-separated column of order + 1 rationals");
  eta_opt->excludes(col_opt);
  act_cmd->callback([&] {
    const RiordanArray r = build(opts);
    const io::Format format = io::parse_format(opts.format);
    if (!column.empty()) {
      const std::vector<Rational> values = riordan::apply(r, parse_column(column));
      print_values(std::span<const Rational>(values).first(rows_of(opts)), format);
    } else if (!eta.empty()) {
      print_umbra(act(r, io::parse_spec(eta, order_of(opts))), rows_of(opts), format);
    } else {
      throw CLI::RequiredError("--eta or --column");
    }
  });

  auto* sheffer_cmd = app.add_subcommand("sheffer", "Sheffer polynomials s_n(x) = sum_k entry(n,k) x^k");
  add_array_options(sheffer_cmd, opts);
  sheffer_cmd->callback([&] {
    const std::size_t rows = rows_of(opts);
    if (rows == 0) {
      std::cout << (opts.format == "json" ? "[]\n" : "");
      return;
    }
    const std::vector<Polynomial> s = sheffer_sequence(build(opts), rows - 1);
    std::cout << io::render(s, io::parse_format(opts.format));
  });

  auto* aseq_cmd = app.add_subcommand("aseq", "A-sequence, the moments of K_alpha");
  add_array_options(aseq_cmd, opts);
  aseq_cmd->callback([&] {
    print_umbra(a_sequence(build(opts)), rows_of(opts), io::parse_format(opts.format));
  });

  std::string rule = "colrec";
  std::size_t check_n = 1, check_k = 1;
  bool check_all = false;
  auto* check_cmd = app.add_subcommand("check", "verify the column and row recursions");
  add_array_options(check_cmd, opts);
  check_cmd->add_option("--rule", rule, "colrec, rowrec or rowrec2")->capture_default_str();
  check_cmd->add_option("--n", check_n, "row index")->capture_default_str();
  check_cmd->add_option("--k", check_k, "column index")->capture_default_str();
  check_cmd->add_flag("--all", check_all, "every rule and every 1 <= k <= n < rows");
  check_cmd->callback([&] {
    const RecursionVerifier verifier(build(opts));
    const bool json = opts.format == "json";
    std::vector<RecursionReport> reports;
    if (check_all) {
      for (Rule r : {Rule::colrec, Rule::rowrec, Rule::rowrec2})
        for (std::size_t n = 1; n < rows_of(opts); ++n)
          for (std::size_t k = 1; k <= n; ++k) reports.push_back(verifier.check(r, n, k));
    } else {
      reports.push_back(verifier.check(parse_rule(rule), check_n, check_k));
    }
    std::size_t failed = 0;
    io::Json list = io::Json::array();
    for (const RecursionReport& r : reports) {
      if (!r.holds()) ++failed;
      if (json) list.push_back(io::report_to_json(r));
      else if (!check_all || !r.holds()) std::cout << describe(r) << '\n';
    }
    if (json) std::cout << (check_all ? list.dump() : list.at(0).dump()) << '\n';
    else if (check_all) std::cout << reports.size() - failed << "/" << reports.size() << " relations hold\n";
    if (failed) exit_code = 1;
  });

  std::string identity;
  std::size_t n_max = 10;
  bool verify_json = false, verify_all = false;
  auto* verify_cmd = app.add_subcommand("verify", "run an identity from the catalog");
  verify_cmd->add_option("name", identity, "identity name (see `list`)");
  verify_cmd->add_option("--n-max", n_max, "largest n checked")->capture_default_str();
  verify_cmd->add_flag("--json", verify_json, "print the report as JSON");
  verify_cmd->add_flag("--all", verify_all, "run the whole catalog");
  verify_cmd->callback([&] {
    std::vector<std::string> names;
    if (verify_all) names = catalog();
    else if (!identity.empty()) names.push_back(identity);
    else throw CLI::RequiredError("name");
    RunOptions run_options;
    run_options.order = default_order();
    for (const std::string& name : names) {
      const IdentityReport report = run(name, n_max, run_options);
      print_identity(report, verify_json);
      if (!report.passed) exit_code = 1;
    }
  });

  bool list_umbrae = false;
  auto* list_cmd = app.add_subcommand("list", "list the identity catalog");
  list_cmd->add_flag("--umbrae", list_umbrae, "list the named umbrae instead");
  list_cmd->callback([&] {
    if (list_umbrae) {
      for (const std::string& name : named_umbrae()) std::cout << name << '\n';
      return;
    }
    for (const std::string& name : catalog()) std::cout << name << "  " << statement(name) << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
