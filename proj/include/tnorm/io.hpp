/*   Copyright 2026 The tnorm Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tnorm/error.hpp"
#include "tnorm/madm.hpp"
#include "tnorm/power.hpp"
#include "tnorm/tnorm_spec.hpp"

namespace tnorm::io {

/// Shortest decimal text that parses back to exactly `x`.
inline std::string format_number(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

/// `x` with exactly `decimals` digits after the point.
inline std::string format_fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  std::string s(buf);
  if (s.starts_with('-') && s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

// ---------------------------------------------------------------------------
// t-norm literals
//
//   spec     := "min" | family | "ordinal[" summand ("," summand)* "]"
//   summand  := "(" number "," number "," family ")"
//   family   := "product" | "lukasiewicz" | "einstein"
//             | "hamacher:" number | "aczel-alsina:" number
//
// Whitespace is ignored. `einstein` is an alias for `hamacher:2`.

namespace detail {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  TNormSpec parse_spec() {
    TNormSpec spec = TNormSpec::minimum();
    if (accept("min")) {
      spec = TNormSpec::minimum();
    } else if (accept("ordinal[")) {
      std::vector<Summand> summands;
      do {
        summands.push_back(parse_summand());
      } while (accept(","));
      expect("]");
      try {
        spec = TNormSpec::ordinal_sum(std::move(summands));
      } catch (const ValidationError& e) {
        fail(e.what());
      }
    } else {
      spec = TNormSpec::archimedean(parse_family());
    }
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

  GeneratorFamily parse_family_only() {
    GeneratorFamily f = parse_family();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  GeneratorFamily parse_family() {
    try {
      if (accept("product")) return GeneratorFamily::product();
      if (accept("lukasiewicz")) return GeneratorFamily::lukasiewicz();
      if (accept("einstein")) return GeneratorFamily::einstein();
      if (accept("hamacher:")) return GeneratorFamily::hamacher(parse_number());
      if (accept("aczel-alsina:")) {
        return GeneratorFamily::aczel_alsina(parse_number());
      }
    } catch (const ValidationError& e) {
      fail(e.what());
    }
    if (text_.compare(pos_, 7, "drastic") == 0) {
      fail("the drastic t-norm is not continuous and is not supported");
    }
    fail("expected a t-norm family");
  }

  Summand parse_summand() {
    expect("(");
    const double a = parse_number();
    expect(",");
    const double e = parse_number();
    expect(",");
    const GeneratorFamily f = parse_family();
    expect(")");
    return {a, e, f};
  }

  double parse_number() {
    double v = 0.0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc{} || !std::isfinite(v)) fail("expected a number");
    pos_ += static_cast<std::size_t>(res.ptr - begin);
    return v;
  }

  bool accept(std::string_view token) {
    if (text_.compare(pos_, token.size(), token) == 0) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("invalid t-norm literal '" + text_ + "' at offset " +
                     std::to_string(pos_) + ": " + msg);
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline TNormSpec parse_tnorm(std::string_view text) {
  return detail::LiteralParser(text).parse_spec();
}

inline GeneratorFamily parse_family(std::string_view text) {
  return detail::LiteralParser(text).parse_family_only();
}

inline std::string format_family(const GeneratorFamily& f) {
  switch (f.kind()) {
    case FamilyKind::product:
      return "product";
    case FamilyKind::lukasiewicz:
      return "lukasiewicz";
    case FamilyKind::hamacher:
      return "hamacher:" + format_number(f.parameter());
    case FamilyKind::aczel_alsina:
      return "aczel-alsina:" + format_number(f.parameter());
  }
  return {};
}

/// Canonical literal; parse_tnorm(format_tnorm(s)) == s.
inline std::string format_tnorm(const TNormSpec& spec) {
  if (spec.is_minimum()) return "min";
  if (spec.is_archimedean()) return format_family(spec.family());
  std::string out = "ordinal[";
  bool first = true;
  for (const auto& s : spec.summands()) {
    if (!first) out += ',';
    first = false;
    out += '(' + format_number(s.a) + ',' + format_number(s.e) + ',' +
           format_family(s.family) + ')';
  }
  return out + ']';
}

// ---------------------------------------------------------------------------
// Problem files
//
// {
//   "tnorm": "<literal>",
//   "alternatives": ["S1", ...],
//   "attributes": [{"name": "O1", "kind": "benefit" | "cost"}, ...],
//   "matrix": [[[mu, nu], ...], ...],
//   "weights": {"fixed": [w1, ...]}
//            | {"constraints": [{"name": "...", "coeffs": [...],
//                                "op": "<=" | ">=" | "=", "rhs": r}, ...]}
// }

namespace detail {

using nlohmann::json;

inline const json& require(const json& obj, const char* key,
                           const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(where + ": missing key '" + key + "'");
  }
  return obj.at(key);
}

inline double require_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number");
  return v.get<double>();
}

inline std::string require_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": expected a string");
  return v.get<std::string>();
}

inline const json& require_array(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  return v;
}

inline std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline Relation parse_relation(const std::string& op, const std::string& where) {
  if (op == "<=") return Relation::less_equal;
  if (op == ">=") return Relation::greater_equal;
  if (op == "=" || op == "==") return Relation::equal;
  throw ParseError(where + ": unknown relation '" + op + "'");
}

inline const char* relation_text(Relation r) {
  switch (r) {
    case Relation::less_equal:
      return "<=";
    case Relation::greater_equal:
      return ">=";
    case Relation::equal:
      return "=";
  }
  return "";
}

}  // namespace detail

/// Parses and validates a problem document. Errors name the offending
/// position: a line/column for syntax, a (row,column) cell, a constraint.
inline DecisionProblem parse_problem(std::string_view text) {
  using detail::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("syntax error at " + detail::line_col(text, e.byte) +
                     ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("problem file must be a JSON object");

  DecisionProblem p;
  p.tnorm = parse_tnorm(detail::require_string(
      detail::require(doc, "tnorm", "problem"), "tnorm"));

  for (const auto& name : detail::require_array(
           detail::require(doc, "alternatives", "problem"), "alternatives")) {
    p.alternatives.push_back(detail::require_string(name, "alternatives"));
  }

  const auto& attrs = detail::require_array(
      detail::require(doc, "attributes", "problem"), "attributes");
  for (std::size_t j = 0; j < attrs.size(); ++j) {
    const std::string where = "attribute " + std::to_string(j + 1);
    Attribute a;
    a.name = detail::require_string(detail::require(attrs[j], "name", where), where);
    const std::string kind =
        detail::require_string(detail::require(attrs[j], "kind", where), where);
    if (kind == "benefit") {
      a.kind = AttributeKind::benefit;
    } else if (kind == "cost") {
      a.kind = AttributeKind::cost;
    } else {
      throw ParseError(where + ": kind must be 'benefit' or 'cost'");
    }
    p.attributes.push_back(std::move(a));
  }

  const auto& rows =
      detail::require_array(detail::require(doc, "matrix", "problem"), "matrix");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<IFV> row;
    const auto& cells = detail::require_array(rows[r], "matrix row " + std::to_string(r + 1));
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const std::string at = "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
      const auto& cell = cells[c];
      if (!cell.is_array() || cell.size() != 2) {
        throw ParseError("cell at " + at + " must be a [mu, nu] pair");
      }
      const double mu = detail::require_number(cell[0], "cell at " + at);
      const double nu = detail::require_number(cell[1], "cell at " + at);
      if (mu < 0.0 || mu > 1.0 || nu < 0.0 || nu > 1.0) {
        throw ParseError("degree outside [0,1] at " + at);
      }
      if (mu + nu > 1.0 + kUnitSlack) {
        throw ParseError("mu+nu exceeds 1 at " + at);
      }
      row.emplace_back(mu, nu);
    }
    p.matrix.push_back(std::move(row));
  }

  const auto& weights = detail::require(doc, "weights", "problem");
  if (weights.is_object() && weights.contains("fixed")) {
    std::vector<double> w;
    for (const auto& v : detail::require_array(weights.at("fixed"), "weights.fixed")) {
      w.push_back(detail::require_number(v, "weights.fixed"));
    }
    try {
      p.weights = WeightVector(std::move(w));
    } catch (const ValidationError& e) {
      throw ParseError(std::string("weights.fixed: ") + e.what());
    }
  } else if (weights.is_object() && weights.contains("constraints")) {
    std::vector<LinearConstraint> cons;
    const auto& list =
        detail::require_array(weights.at("constraints"), "weights.constraints");
    for (std::size_t i = 0; i < list.size(); ++i) {
      LinearConstraint c;
      c.name = list[i].is_object() && list[i].contains("name")
                   ? detail::require_string(list[i].at("name"), "constraint name")
                   : "#" + std::to_string(i + 1);
      const std::string where = "constraint '" + c.name + "'";
      for (const auto& v : detail::require_array(
               detail::require(list[i], "coeffs", where), where)) {
        c.coeffs.push_back(detail::require_number(v, where));
      }
      c.relation = detail::parse_relation(
          detail::require_string(detail::require(list[i], "op", where), where), where);
      c.rhs = detail::require_number(detail::require(list[i], "rhs", where), where);
      cons.push_back(std::move(c));
    }
    p.weights = std::move(cons);
  } else {
    throw ParseError("weights: expected {\"fixed\": [...]} or {\"constraints\": [...]}");
  }

  try {
    p.validate();
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
  return p;
}

inline DecisionProblem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open problem file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

/// Problem document that parse_problem reads back to an equal problem.
inline std::string serialize_problem(const DecisionProblem& p) {
  using detail::json;
  json doc;
  doc["tnorm"] = format_tnorm(p.tnorm);
  doc["alternatives"] = p.alternatives;
  doc["attributes"] = json::array();
  for (const auto& a : p.attributes) {
    doc["attributes"].push_back(
        {{"name", a.name}, {"kind", a.kind == AttributeKind::cost ? "cost" : "benefit"}});
  }
  doc["matrix"] = json::array();
  for (const auto& row : p.matrix) {
    json jr = json::array();
    for (const auto& cell : row) jr.push_back({cell.mu(), cell.nu()});
    doc["matrix"].push_back(std::move(jr));
  }
  if (const auto* fixed = std::get_if<WeightVector>(&p.weights)) {
    doc["weights"]["fixed"] =
        std::vector<double>(fixed->values().begin(), fixed->values().end());
  } else {
    json list = json::array();
    for (const auto& c : std::get<std::vector<LinearConstraint>>(p.weights)) {
      list.push_back({{"name", c.name},
                      {"coeffs", c.coeffs},
                      {"op", detail::relation_text(c.relation)},
                      {"rhs", c.rhs}});
    }
    doc["weights"]["constraints"] = std::move(list);
  }
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Reports

enum class ReportFormat { text, csv, json };

inline ReportFormat parse_report_format(std::string_view s) {
  if (s == "text") return ReportFormat::text;
  if (s == "csv") return ReportFormat::csv;
  if (s == "json" || s == "structured") return ReportFormat::json;
  throw ParseError("unknown output format '" + std::string(s) + "'");
}

inline std::string ranking_line(const RankingResult& r) {
  std::string out;
  for (std::size_t i : r.order()) {
    if (!out.empty()) out += " > ";
    out += r.alternatives[i].name;
  }
  return out;
}

/// Renders a ranking. Contains no timestamps or other run-dependent data.
inline std::string format_report(const DecisionProblem& problem,
                                 const RankingResult& r, ReportFormat format,
                                 int precision = 4) {
  std::ostringstream out;
  const auto fx = [&](double x) { return format_fixed(x, precision); };
  switch (format) {
    case ReportFormat::text: {
      out << "t-norm: " << format_tnorm(problem.tnorm) << '\n';
      out << "weights:";
      for (double w : r.weights_used) out << ' ' << fx(w);
      out << '\n';
      std::size_t width = std::string("alternative").size();
      for (const auto& a : r.alternatives) width = std::max(width, a.name.size());
      const std::size_t agg_width = 2 * static_cast<std::size_t>(precision) + 10;
      auto pad = [](std::string s, std::size_t w) {
        if (s.size() < w) s.append(w - s.size(), ' ');
        return s;
      };
      out << pad("alternative", width) << "  " << pad("aggregate", agg_width)
          << "  " << pad("L-value", static_cast<std::size_t>(precision) + 2)
          << "  rank\n";
      for (const auto& a : r.alternatives) {
        const std::string agg =
            "<" + fx(a.aggregate.mu()) + ", " + fx(a.aggregate.nu()) + ">";
        out << pad(a.name, width) << "  " << pad(agg, agg_width) << "  "
            << pad(fx(a.l_value), static_cast<std::size_t>(precision) + 2)
            << "  " << a.rank << '\n';
      }
      out << "ranking: " << ranking_line(r) << '\n';
      if (!r.weights_unique) {
        out << "note: the optimal weight vector is not unique\n";
      }
      if (r.stability_caveat) {
        out << "warning: t-norm is not power stable; distributive laws of the "
               "aggregation do not hold\n";
      }
      break;
    }
    case ReportFormat::csv: {
      out << "alternative,mu,nu,l_value,rank\n";
      for (const auto& a : r.alternatives) {
        out << a.name << ',' << fx(a.aggregate.mu()) << ',' << fx(a.aggregate.nu())
            << ',' << fx(a.l_value) << ',' << a.rank << '\n';
      }
      break;
    }
    case ReportFormat::json: {
      using detail::json;
      json doc;
      doc["tnorm"] = format_tnorm(problem.tnorm);
      doc["power_stable"] = !r.stability_caveat;
      doc["weights"] = r.weights_used;
      doc["weights_unique"] = r.weights_unique;
      doc["alternatives"] = json::array();
      for (const auto& a : r.alternatives) {
        doc["alternatives"].push_back({{"name", a.name},
                                       {"mu", a.aggregate.mu()},
                                       {"nu", a.aggregate.nu()},
                                       {"l_value", a.l_value},
                                       {"rank", a.rank}});
      }
      json order = json::array();
      for (std::size_t i : r.order()) order.push_back(r.alternatives[i].name);
      doc["ranking"] = std::move(order);
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Parameter sweep over two-summand ordinal sums <0,l,A>, <l,1,B>.

inline TNormSpec split_ordinal_sum(const GeneratorFamily& lower,
                                   const GeneratorFamily& upper, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw ValidationError("sweep parameter must lie in (0,1), got " +
                          format_number(lambda));
  }
  return TNormSpec::ordinal_sum({{0.0, lambda, lower}, {lambda, 1.0, upper}});
}

/// L-values of every alternative for each lambda; row i belongs to lambdas[i].
inline std::vector<std::vector<double>> lambda_sweep(
    const DecisionProblem& input, const GeneratorFamily& lower,
    const GeneratorFamily& upper, std::span<const double> lambdas) {
  const DecisionProblem problem = normalize(input);
  const std::vector<double> weights = solve_weights(problem).weights;
  std::vector<std::vector<double>> out;
  out.reserve(lambdas.size());
  for (double lambda : lambdas) {
    const TNormSpec spec = split_ordinal_sum(lower, upper, lambda);
    std::vector<double> row;
    for (const auto& cells : problem.matrix) {
      row.push_back(l_value(aggregate_row(spec, weights, cells)));
    }
    out.push_back(std::move(row));
  }
  return out;
}

/// lambda = k * step for k = 1, 2, ... while lambda < 1, rounded to 12
/// decimals so that 0.3 prints as 0.3.
inline std::vector<double> lambda_grid(double step) {
  if (!(step > 0.0 && step < 1.0)) {
    throw ValidationError("sweep step must lie in (0,1)");
  }
  std::vector<double> out;
  for (int k = 1;; ++k) {
    const double lambda = std::round(k * step * 1e12) / 1e12;
    if (lambda >= 1.0 - 1e-12) break;
    out.push_back(lambda);
  }
  return out;
}

inline std::string format_sweep_csv(const DecisionProblem& problem,
                                    std::span<const double> lambdas,
                                    const std::vector<std::vector<double>>& values,
                                    int precision = 6) {
  std::ostringstream out;
  out << "lambda";
  for (const auto& name : problem.alternatives) out << ',' << name;
  out << '\n';
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    out << format_number(lambdas[i]);
    for (double v : values[i]) out << ',' << format_fixed(v, precision);
    out << '\n';
  }
  return out.str();
}

}  // namespace tnorm::io
