#include "riordan/io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace riordan::io {

namespace {

Json rationals_to_json(std::span<const Rational> values) {
  Json out = Json::array();
  for (const Rational& x : values) out.push_back(x.str());
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of rationals");
  std::vector<Rational> out;
  for (const Json& x : j) {
    if (x.is_string()) out.push_back(Rational::parse(x.get<std::string>()));
    else if (x.is_number_integer()) out.emplace_back(x.get<long>());
    else throw std::invalid_argument("rationals must be strings or integers, got " + x.dump());
  }
  return out;
}

std::optional<Rational> try_rational(std::string_view text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

Umbra read_file(const std::string& path, std::size_t order) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("'" + path + "': " + e.what());
  }
  const Umbra u = umbra_from_json(j);
  if (u.order() < order) {
    throw std::invalid_argument("'" + path + "' has " + std::to_string(u.order() + 1) + " moments, need " +
                                std::to_string(order + 1));
  }
  return Umbra(std::vector<Rational>(u.moments().begin(), u.moments().begin() + static_cast<long>(order) + 1));
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "table") return Format::table;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

Json series_to_json(const Series& f) { return rationals_to_json(f.coefficients()); }

Series series_from_json(const Json& j) {
  std::vector<Rational> c = rationals_from_json(j);
  if (c.empty()) throw std::invalid_argument("a series needs at least one coefficient");
  return Series(std::move(c));
}

Json umbra_to_json(const Umbra& u) {
  Json out = Json::object();
  out["moments"] = rationals_to_json(u.moments());
  out["order"] = u.order();
  return out;
}

Umbra umbra_from_json(const Json& j) {
  if (j.is_array()) return Umbra(rationals_from_json(j));
  if (!j.is_object() || !j.contains("moments")) throw std::invalid_argument("expected {\"moments\": [...]}");
  Umbra u(rationals_from_json(j.at("moments")));
  if (j.contains("order") && j.at("order").get<std::size_t>() != u.order()) {
    throw std::invalid_argument("\"order\" does not match the number of moments");
  }
  return u;
}

Json triangle_to_json(const Triangle& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) rows.push_back(rationals_to_json(row));
  Json out = Json::object();
  out["flavor"] = to_string(t.flavor);
  out["rows"] = std::move(rows);
  return out;
}

Triangle triangle_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("flavor") || !j.contains("rows")) {
    throw std::invalid_argument("expected {\"flavor\": ..., \"rows\": [...]}");
  }
  Triangle t;
  t.flavor = parse_flavor(j.at("flavor").get<std::string>());
  for (const Json& row : j.at("rows")) {
    t.rows.push_back(rationals_from_json(row));
    if (t.rows.back().size() != t.rows.size()) throw std::invalid_argument("row n must hold n + 1 entries");
  }
  return t;
}

std::string render(const Triangle& t, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::json: out << triangle_to_json(t).dump() << '\n'; break;
    case Format::csv:
      for (const auto& row : t.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << row[k].str();
        out << '\n';
      }
      break;
    case Format::table: {
      std::vector<std::size_t> width(t.size(), 0);
      for (const auto& row : t.rows)
        for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].str().size());
      for (const auto& row : t.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
          const std::string s = row[k].str();
          out << (k ? " " : "") << std::string(width[k] - s.size(), ' ') << s;
        }
        out << '\n';
      }
      break;
    }
  }
  return out.str();
}

std::string render(std::span<const Polynomial> sequence, Format format) {
  std::ostringstream out;
  if (format == Format::json) {
    Json list = Json::array();
    for (const Polynomial& p : sequence) list.push_back(rationals_to_json(p.coefficients()));
    out << list.dump() << '\n';
    return out.str();
  }
  for (std::size_t n = 0; n < sequence.size(); ++n) {
    if (format == Format::table) out << "s_" << n << "(x) = ";
    out << sequence[n].str() << '\n';
  }
  return out.str();
}

Json report_to_json(const RecursionReport& report) {
  Json terms = Json::array();
  for (const RecursionTerm& term : report.terms) {
    Json t = Json::object();
    t["i"] = term.i;
    t["coefficient"] = term.coefficient.str();
    t["entry"] = term.entry.str();
    terms.push_back(std::move(t));
  }
  Json out = Json::object();
  out["rule"] = to_string(report.rule);
  out["n"] = report.n;
  out["k"] = report.k;
  out["lhs"] = report.lhs.str();
  out["rhs"] = report.rhs.str();
  out["terms"] = std::move(terms);
  return out;
}

Json report_to_json(const IdentityReport& report) {
  Json witnesses = Json::array();
  for (const Witness& w : report.witnesses) {
    Json x = Json::object();
    x["at"] = w.at;
    x["lhs"] = w.lhs;
    x["rhs"] = w.rhs;
    witnesses.push_back(std::move(x));
  }
  Json out = Json::object();
  out["name"] = report.name;
  out["n_max"] = report.n_max;
  out["status"] = report.passed ? "pass" : "fail";
  out["witnesses"] = std::move(witnesses);
  return out;
}

Umbra parse_spec(std::string_view text, std::size_t order) {
  if (text.starts_with("@")) return read_file(std::string(text.substr(1)), order);
  if (text.empty()) throw std::invalid_argument("empty umbra expression");

  std::vector<std::string_view> tokens;
  for (std::size_t start = 0;;) {
    const std::size_t dot = text.find('.', start);
    tokens.push_back(text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  for (std::string_view t : tokens) {
    if (t.empty()) throw std::invalid_argument("malformed umbra expression '" + std::string(text) + "'");
  }

  const std::string_view last = tokens.back();
  std::optional<Umbra> acc;
  if (auto c = try_rational(last)) {
    if (tokens.size() == 1) throw std::invalid_argument("umbra expression '" + std::string(text) + "' names no umbra");
    acc = scalar_umbra(*c, order);
  } else {
    acc = named(last, order);
  }
  for (std::size_t i = tokens.size() - 1; i-- > 0;) {
    if (auto c = try_rational(tokens[i])) acc = dot_rational(*c, *acc);
    else acc = dot(named(tokens[i], order), *acc);
  }
  return *acc;
}

}  // namespace riordan::io
