#pragma once

// Text format, one item per line ('#' starts a comment):
//
//   vars: x y z w t
//   bin: x^2*y - z^3
//   mono: x^4
//   dim: 3
//   order: lex x>y>z>w>t
//
// `bin` lines must be a difference of exactly two distinct monomials with
// implicit unit coefficients.

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hkmult/binomial_engine.hpp"
#include "hkmult/errors.hpp"
#include "hkmult/monomial.hpp"

namespace hkmult {

struct PresentedQuotient {
  std::vector<std::string> variables;
  std::vector<PureDifferenceBinomial> binomials;
  std::vector<ExponentVector> monomials;
  int dimension = 1;
  std::optional<MonomialOrder> order;

  std::size_t nvars() const { return variables.size(); }

  void validate() const {
    if (variables.empty()) throw ParameterError("presentation needs at least one variable");
    if (dimension < 1) throw ParameterError("presentation dimension must be >= 1");
    for (const auto& b : binomials) {
      if (b.plus.size() != nvars() || b.minus.size() != nvars())
        throw ParameterError("binomial does not match the variable list");
      if (b.plus == b.minus) throw ParameterError("binomial with equal terms is zero");
    }
    for (const auto& m : monomials)
      if (m.size() != nvars()) throw ParameterError("monomial does not match the variable list");
  }

  MonomialOrder effective_order() const { return order ? *order : MonomialOrder::lex(nvars()); }

  /// Relations as engine elements, sign-normalized for `ord`.
  std::vector<BasisElement> relations(const MonomialOrder& ord) const {
    std::vector<BasisElement> out;
    for (const auto& b : binomials) out.push_back(*BasisElement::difference(b.plus, b.minus, ord));
    for (const auto& m : monomials) out.push_back(BasisElement::monomial(m));
    return out;
  }
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

inline int parse_exponent(const std::string& text, const std::string& context) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    throw ParseError("bad exponent in '" + context + "'");
  if (text.size() > 9) throw ParseError("exponent too large in '" + context + "'");
  return std::stoi(text);
}

inline std::size_t variable_index(const std::vector<std::string>& vars, const std::string& name,
                                  const std::string& context) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw ParseError("unknown variable '" + name + "' in '" + context + "'");
  return static_cast<std::size_t>(it - vars.begin());
}

// Factors joined by `sep`, each `name` or `name^k`; a lone "1" is the unit.
inline ExponentVector parse_monomial_factors(const std::vector<std::string>& factors,
                                             const std::vector<std::string>& vars, const std::string& context) {
  std::vector<int> exps(vars.size(), 0);
  if (factors.size() == 1 && factors[0] == "1") return ExponentVector(exps);
  if (factors.empty()) throw ParseError("empty monomial in '" + context + "'");
  for (const auto& f : factors) {
    const auto caret = f.find('^');
    const std::string name = trim(f.substr(0, caret));
    if (!valid_identifier(name)) throw ParseError("expected a variable name in '" + context + "', got '" + name + "'");
    const int e = caret == std::string::npos ? 1 : parse_exponent(trim(f.substr(caret + 1)), context);
    exps[variable_index(vars, name, context)] += e;
  }
  return ExponentVector(exps);
}

}  // namespace detail

/// Parses `x^2*y*z^3` (or `1`) over the given variables.
inline ExponentVector parse_monomial(std::string_view text, const std::vector<std::string>& vars) {
  const std::string s = detail::trim(text);
  std::vector<std::string> factors;
  std::size_t start = 0;
  for (;;) {
    auto star = s.find('*', start);
    factors.push_back(detail::trim(s.substr(start, star == std::string::npos ? std::string::npos : star - start)));
    if (star == std::string::npos) break;
    start = star + 1;
  }
  for (const auto& f : factors)
    if (f.empty()) throw ParseError("empty factor in monomial '" + s + "'");
  return detail::parse_monomial_factors(factors, vars, s);
}

inline MonomialOrder parse_order(std::string_view text, const std::vector<std::string>& vars) {
  const auto tokens = detail::split_ws(text);
  if (tokens.empty()) throw ParseError("empty order specification");
  MonomialOrder::Kind kind;
  if (tokens[0] == "lex") kind = MonomialOrder::Kind::Lex;
  else if (tokens[0] == "grevlex") kind = MonomialOrder::Kind::GrevLex;
  else throw ParseError("unknown monomial order '" + tokens[0] + "' (expected lex or grevlex)");
  if (tokens.size() == 1) return kind == MonomialOrder::Kind::Lex ? MonomialOrder::lex(vars.size()) : MonomialOrder::grevlex(vars.size());
  if (tokens.size() != 2) throw ParseError("order ranking must be written as a>b>c");

  std::vector<std::size_t> ranking;
  std::string rest = tokens[1];
  std::size_t start = 0;
  for (;;) {
    auto gt = rest.find('>', start);
    const std::string name = rest.substr(start, gt == std::string::npos ? std::string::npos : gt - start);
    ranking.push_back(detail::variable_index(vars, name, std::string(text)));
    if (gt == std::string::npos) break;
    start = gt + 1;
  }
  if (ranking.size() != vars.size()) throw ParseError("order ranking must list every variable exactly once");
  try {
    return MonomialOrder(kind, ranking);
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
}

inline PresentedQuotient parse_presentation(std::string_view text) {
  PresentedQuotient p;
  bool have_vars = false;
  bool have_dim = false;
  std::optional<std::string> order_text;
  std::vector<std::pair<std::string, std::string>> items;

  std::istringstream in{std::string(text)};
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = detail::trim(line);
    if (body.empty()) continue;
    const auto colon = body.find(':');
    if (colon == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected 'key: value'");
    std::string key = detail::trim(body.substr(0, colon));
    std::string value = detail::trim(body.substr(colon + 1));
    if (key == "vars") {
      if (have_vars) throw ParseError("line " + std::to_string(lineno) + ": duplicate vars line");
      p.variables = detail::split_ws(value);
      for (const auto& v : p.variables)
        if (!detail::valid_identifier(v)) throw ParseError("line " + std::to_string(lineno) + ": bad variable name '" + v + "'");
      auto sorted = p.variables;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError("line " + std::to_string(lineno) + ": repeated variable name");
      have_vars = true;
    } else if (key == "dim") {
      try {
        std::size_t used = 0;
        p.dimension = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad dimension '" + value + "'");
      }
      have_dim = true;
    } else if (key == "order") {
      order_text = value;
    } else if (key == "bin" || key == "mono") {
      items.emplace_back(key, value + "\n" + std::to_string(lineno));
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!have_vars) throw ParseError("presentation is missing a 'vars:' line");
  if (!have_dim) throw ParseError("presentation is missing a 'dim:' line");
  if (p.dimension < 1) throw ParseError("dimension must be >= 1");

  for (const auto& [key, payload] : items) {
    const auto nl = payload.rfind('\n');
    const std::string value = payload.substr(0, nl);
    const std::string where = "line " + payload.substr(nl + 1) + ": ";
    if (key == "mono") {
      p.monomials.push_back(parse_monomial(value, p.variables));
      continue;
    }
    if (value.find('+') != std::string::npos)
      throw ParseError(where + "only pure differences m1 - m2 are accepted");
    const auto minus = value.find('-');
    if (minus == std::string::npos || value.find('-', minus + 1) != std::string::npos)
      throw ParseError(where + "binomial must have exactly one '-' between two monomials");
    const std::string lhs = detail::trim(value.substr(0, minus));
    const std::string rhs = detail::trim(value.substr(minus + 1));
    if (lhs.empty() || rhs.empty()) throw ParseError(where + "binomial must have exactly two monomials");
    for (const auto* side : {&lhs, &rhs}) {
      if (std::isdigit(static_cast<unsigned char>((*side)[0])) && *side != "1")
        throw ParseError(where + "coefficients are implicit; got '" + *side + "'");
    }
    PureDifferenceBinomial b{parse_monomial(lhs, p.variables), parse_monomial(rhs, p.variables)};
    if (b.plus == b.minus) throw ParseError(where + "binomial with identical terms");
    p.binomials.push_back(std::move(b));
  }
  if (order_text) p.order = parse_order(*order_text, p.variables);
  return p;
}

inline std::string render_order(const MonomialOrder& order, const std::vector<std::string>& vars) {
  std::string out = order.kind() == MonomialOrder::Kind::Lex ? "lex " : "grevlex ";
  for (std::size_t i = 0; i < order.ranking().size(); ++i) {
    if (i) out += '>';
    out += vars.at(order.ranking()[i]);
  }
  return out;
}

/// Canonical text: same content always renders to the same bytes.
inline std::string render_presentation(const PresentedQuotient& p) {
  std::string out = "vars:";
  for (const auto& v : p.variables) out += " " + v;
  out += "\n";
  for (const auto& b : p.binomials) out += "bin: " + b.plus.render(p.variables) + " - " + b.minus.render(p.variables) + "\n";
  for (const auto& m : p.monomials) out += "mono: " + m.render(p.variables) + "\n";
  out += "dim: " + std::to_string(p.dimension) + "\n";
  if (p.order) out += "order: " + render_order(*p.order, p.variables) + "\n";
  return out;
}

/// Reduced Groebner basis of the presentation's relations.
inline GroebnerBasis buchberger(const PresentedQuotient& p, const MonomialOrder& order) {
  p.validate();
  return buchberger(p.relations(order), order);
}

/// Reduced Groebner basis of the relations together with x_i^q for every variable.
inline GroebnerBasis frobenius_basis(const PresentedQuotient& p, long q, const MonomialOrder& order) {
  p.validate();
  if (q < 1) throw ParameterError("frobenius power requires q >= 1");
  if (q > 1'000'000) throw ParameterError("q too large");
  auto gens = p.relations(order);
  for (std::size_t v = 0; v < p.nvars(); ++v)
    gens.push_back(BasisElement::monomial(ExponentVector::pure_power(p.nvars(), v, static_cast<int>(q))));
  return buchberger(gens, order);
}

/// Length of A / m^[q] for A = k[vars]/(relations), counted as the standard
/// monomials of the initial ideal of frobenius_basis.
inline BigInt frobenius_colength(const PresentedQuotient& p, long q, const MonomialOrder& order,
                                 EngineStats* stats = nullptr) {
  GroebnerBasis gb = frobenius_basis(p, q, order);
  if (stats) {
    stats->pairs_created += gb.stats.pairs_created;
    stats->pairs_skipped_coprime += gb.stats.pairs_skipped_coprime;
    stats->reductions += gb.stats.reductions;
    stats->closure_checks += gb.stats.closure_checks;
  }
  return count_standard_monomials(initial_ideal(gb, order), p.nvars());
}

}  // namespace hkmult
