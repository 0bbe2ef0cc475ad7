#pragma once

// Check suites over the closed forms and oracles, plus their serialization.

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hkmult/closed_forms.hpp"
#include "hkmult/oracle.hpp"

namespace hkmult {

enum class CheckStatus { Pass, Fail, ReportOnly };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::ReportOnly: return "report-only";
  }
  return "?";
}

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::string lhs;
  std::string rhs;
  std::string citation;
};

inline CheckResult verdict(std::string id, bool ok, std::string lhs, std::string rhs, std::string citation) {
  return {std::move(id), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(lhs), std::move(rhs), std::move(citation)};
}

inline CheckResult note(std::string id, std::string lhs, std::string rhs, std::string citation) {
  return {std::move(id), CheckStatus::ReportOnly, std::move(lhs), std::move(rhs), std::move(citation)};
}

inline std::string bracket_str(const HKEstimate& e) {
  return "[" + e.lower.to_string() + ", " + e.upper.to_string() + "]";
}

inline std::string p2(long a, long b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

/// A ring with known e_HK, multiplicity and Krull dimension.
struct CorpusEntry {
  std::string name;
  Rational ehk;
  Rational e;
  int dimension = 1;
};

inline std::vector<CorpusEntry> closed_form_corpus() {
  std::vector<CorpusEntry> out;
  for (long n = 1; n <= 10; ++n) {
    out.push_back({"xy-z^" + std::to_string(n), conca_ehk({1, 1}, {n}), 2, 2});
    if (n >= 2) {
      const Rational ext = n == 2 ? conca_ehk({1, 1}, {2}) : conca_ehk({1, 1}, {n, n - 2});
      out.push_back({"extended Rees of xy-z^" + std::to_string(n), ext, 2, 3});
    }
  }
  for (long m = 1; m <= 8; ++m) {
    for (long n = 1; n <= m; ++n) {
      const auto v = ci_rees_values(m, n);
      out.push_back({"Rees of (x^m,y^n) " + p2(m, n), v.ehk_rees, v.e_rees, 3});
      out.push_back({"extended Rees of (x^m,y^n) " + p2(m, n), v.ehk_extrees, v.e_extrees, 3});
    }
  }
  for (long c = 1; c <= 6; ++c) {
    for (long d = 2; d <= 5; ++d) {
      const VeroneseParams p{c, d};
      const BigInt e = veronese_multiplicity(p);
      out.push_back({"Veronese " + p2(c, d), veronese_ehk(p), e, static_cast<int>(d)});
      out.push_back({"Rees of Veronese " + p2(c, d), veronese_rees_ehk_general(p), Rational(BigInt(d) * e),
                     static_cast<int>(d + 1)});
    }
  }
  for (long c = 1; c <= 6; ++c)
    for (long d = c; d <= 6; ++d)
      out.push_back({"Segre " + p2(c, d), segre_ehk({c, d}), binomial(c + d - 2, c - 1), static_cast<int>(c + d - 1)});
  return out;
}

inline std::vector<CheckResult> check_lemma13() {
  std::vector<CheckResult> out;
  for (const auto& entry : closed_form_corpus()) {
    const Rational lo = entry.e / Rational(factorial(entry.dimension));
    const bool ok = lo <= entry.ehk && entry.ehk <= entry.e;
    out.push_back(verdict("lemma13 " + entry.name, ok, entry.ehk.to_string(),
                          "[" + lo.to_string() + ", " + entry.e.to_string() + "]", "e/dim! <= e_HK <= e"));
  }
  return out;
}

/// Semigroup of type A_n: <(n+1,0), (1,1), (0,n+1)>.
inline Semigroup2D an_semigroup(long n) { return Semigroup2D({{n + 1, 0}, {1, 1}, {0, n + 1}}); }

/// Veronese semigroup <(c,0), (c-1,1), ..., (0,c)>.
inline Semigroup2D veronese_semigroup(long c) {
  std::vector<Semigroup2D::Point> gens;
  for (long i = 0; i <= c; ++i) gens.emplace_back(i, c - i);
  return Semigroup2D(std::move(gens));
}

inline const std::vector<long>& semigroup_check_grid() {
  static const std::vector<long> grid{8, 16, 32};
  return grid;
}

inline std::vector<CheckResult> check_theorem1() {
  std::vector<CheckResult> out;
  const Rational two(2);
  for (long n = 2; n <= 10; ++n) {
    const Rational base = conca_ehk({1, 1}, {n});
    const Rational ext = n == 2 ? conca_ehk({1, 1}, {2}) : conca_ehk({1, 1}, {n, n - 2});
    const std::string id = "theorem1 xy-z^" + std::to_string(n);
    if (n == 2) {
      out.push_back(verdict(id + " equality", base == ext && base == Rational(3, 2), base.to_string(), ext.to_string(),
                            "e_HK(A) = e_HK(R'(m)) = 3/2"));
    } else {
      out.push_back(verdict(id + " chain", base <= ext && ext <= two, base.to_string() + " <= " + ext.to_string(),
                            "<= 2", "e_HK(A) <= e_HK(R'(m)) <= e_HK(G(m)) = 2"));
    }
  }
  for (long n = 2; n <= 6; ++n) {
    const auto S = an_semigroup(n);
    const auto a = run_oracle(semigroup_job(S, SemigroupRing::Base), semigroup_check_grid()).estimate;
    const auto r = run_oracle(semigroup_job(S, SemigroupRing::ExtendedRees), semigroup_check_grid()).estimate;
    const bool ok = a.lower <= r.upper && r.lower <= two;
    out.push_back(note("theorem1 estimate A_" + std::to_string(n) + (ok ? " consistent" : " inconsistent"),
                       bracket_str(a), bracket_str(r) + " <= 2", "estimated e_HK(A) <= e_HK(R'(m)) <= 2"));
  }
  return out;
}

inline std::vector<CheckResult> check_theorem2() {
  std::vector<CheckResult> out;
  for (long d = 2; d <= 12; ++d) {
    const Rational s = segre_ehk({2, d});
    out.push_back(verdict("theorem2 segre(2," + std::to_string(d) + ") = c(d)", s == c_of_d(d), s.to_string(),
                          c_of_d(d).to_string(), "e_HK(R(m)) = c(d) over a polynomial ring"));
  }
  for (long c = 1; c <= 10; ++c) {
    const Rational v = veronese_rees_ehk_general({c, 2});
    const Rational bound = c_of_d(2) * Rational(c);
    const bool ok = v <= bound && ((v == bound) == (c == 1));
    out.push_back(verdict("theorem2 veronese c=" + std::to_string(c), ok, v.to_string(), bound.to_string(),
                          "e_HK(R(m)) <= c(2) e(A), equality iff c = 1"));
  }
  return out;
}

inline std::vector<CheckResult> check_cor54() {
  std::vector<CheckResult> out;
  for (long d = 3; d <= 4; ++d) {
    for (long c = d * (d - 1) / 2; c <= 50; ++c) {
      const Rational v = veronese_rees_ehk_general({c, d});
      const Rational e(veronese_multiplicity({c, d}));
      out.push_back(verdict("cor54 " + p2(c, d), v < e, v.to_string(), e.to_string(), "e_HK(R(m)) < e(A)"));
    }
    const long c = 1000;
    const Rational ratio = veronese_rees_ehk_general({c, d}) / Rational(veronese_multiplicity({c, d}));
    const Rational limit(pow(BigInt(2), d + 1) - 2, factorial(d + 1));
    const bool ok = abs(ratio - limit) <= limit / Rational(10);
    out.push_back(verdict("cor54 ratio d=" + std::to_string(d) + " c=1000", ok, std::to_string(ratio.to_double()),
                          limit.to_string(), "e_HK(R(m))/e(A) -> (2^{d+1}-2)/(d+1)!"));
  }
  return out;
}

inline std::vector<CheckResult> check_prop412() {
  std::vector<CheckResult> out;
  for (long c = 1; c <= 10; ++c) {
    const Rational v = veronese_rees_ehk_general({c, 2});
    const Rational e(c);
    out.push_back(verdict("prop412 veronese c=" + std::to_string(c), v >= e, v.to_string(), e.to_string(),
                          "e_HK(R(m)) >= e(A) in dimension 2"));
  }
  for (long m = 1; m <= 8; ++m) {
    for (long n = 1; n <= m; ++n) {
      const auto v = ci_rees_values(m, n);
      const Rational half = v.e_rees / Rational(2);
      out.push_back(verdict("prop412 (x^m,y^n) " + p2(m, n), v.ehk_rees >= half, v.ehk_rees.to_string(),
                            half.to_string(), "e_HK(R(I)) >= e(R(I))/2 in dimension 2"));
    }
  }
  const std::vector<long> grid{4, 8, 16};
  {
    const auto est = run_oracle(rees_monomial_job(MonomialIdeal2D::maximal(), ReesMode::MaximalIdeal), grid).estimate;
    out.push_back(note("prop412 estimate R(m) over k[x,y]", bracket_str(est), ">= 1", "estimated e_HK(R(m)) >= e(A)"));
  }
  for (long c = 1; c <= 3; ++c) {
    const auto est = run_oracle(veronese_rees_job(c, 2), grid).estimate;
    out.push_back(note("prop412 estimate Veronese c=" + std::to_string(c), bracket_str(est), ">= " + std::to_string(c),
                       "estimated e_HK(R(m)) >= e(A)"));
  }
  return out;
}

struct CriterionComparison {
  HKEstimate base;
  HKEstimate extrees;
  bool overlap = false;
};

inline CriterionComparison compare_semigroup_estimates(const Semigroup2D& S, const std::vector<long>& grid) {
  CriterionComparison out;
  out.base = run_oracle(semigroup_job(S, SemigroupRing::Base), grid).estimate;
  out.extrees = run_oracle(semigroup_job(S, SemigroupRing::ExtendedRees), grid).estimate;
  out.overlap = out.base.lower <= out.extrees.upper && out.extrees.lower <= out.base.upper;
  return out;
}

inline const std::vector<long>& criterion_grid() {
  static const std::vector<long> grid{6, 12, 24, 48};
  return grid;
}

inline std::vector<CheckResult> check_prop57() {
  std::vector<CheckResult> out;
  for (long c = 2; c <= 5; ++c)
    out.push_back(verdict("prop57 Veronese c=" + std::to_string(c), equality_criterion(veronese_semigroup(c)), "true",
                          "true", "a_i/a + b_i/b = 1 for all i"));
  for (long n = 2; n <= 5; ++n)
    out.push_back(verdict("prop57 A_" + std::to_string(n), !equality_criterion(an_semigroup(n)), "false", "false",
                          "a_i/a + b_i/b = 1 fails"));
  const auto ver = compare_semigroup_estimates(veronese_semigroup(2), criterion_grid());
  out.push_back(note(std::string("prop57 estimates Veronese c=2 ") + (ver.overlap ? "overlap" : "disjoint"),
                     bracket_str(ver.base), bracket_str(ver.extrees), "e_HK(A) = e_HK(R'(m)) when the criterion holds"));
  const auto an = compare_semigroup_estimates(an_semigroup(2), criterion_grid());
  out.push_back(note(std::string("prop57 estimates A_2 ") + (an.overlap ? "overlap" : "disjoint"), bracket_str(an.base),
                     bracket_str(an.extrees), "e_HK(A) < e_HK(R'(m)) when the criterion fails"));
  return out;
}

/// e(A) 2^{d+1}/(d+1)! + I_1(inf) - 2 I_0(2c) + I_1(2c).
inline Rational veronese_assembly(long c, long d) {
  const VeroneseParams p{c, d};
  Rational value(pow(BigInt(2), d + 1) * veronese_multiplicity(p), factorial(d + 1));
  value += veronese_I_limits(p, c + d, 1);
  value -= Rational(2) * veronese_I_limits(p, 2 * c, 0);
  value += veronese_I_limits(p, 2 * c, 1);
  return value;
}

inline std::vector<CheckResult> check_assembly() {
  std::vector<CheckResult> out;
  for (long c = 2; c <= 6; ++c) {
    for (long d = 2; d <= c; ++d) {
      const Rational lhs = veronese_assembly(c, d);
      const Rational rhs = veronese_rees_ehk({c, d});
      out.push_back(verdict("assembly " + p2(c, d), lhs == rhs, lhs.to_string(), rhs.to_string(),
                            "integral assembly equals the closed form"));
    }
  }
  return out;
}

inline std::vector<CheckResult> check_bcp_compare() {
  std::vector<CheckResult> out;
  for (long c = 1; c <= 6; ++c) {
    for (long d = c; d <= 6; ++d) {
      const Rational s = segre_ehk({c, d});
      const Rational shifted = bcp_segre_ehk({c, d});
      const Rational literal = bcp_segre_literal({c, d});
      out.push_back(note("bcp-compare " + p2(c, d) + (s == shifted ? " agree" : " differ"), s.to_string(),
                         shifted.to_string() + " (literal index reading: " + literal.to_string() + ")",
                         "Stirling closed form vs integral formula"));
    }
  }
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem1", "theorem2", "cor54",      "prop412", "prop57",
                                              "lemma13",  "assembly", "bcp-compare", "all"};
  return names;
}

inline std::vector<CheckResult> run_suite(const std::string& suite) {
  static const std::map<std::string, std::function<std::vector<CheckResult>()>> suites{
      {"theorem1", check_theorem1}, {"theorem2", check_theorem2}, {"cor54", check_cor54},
      {"prop412", check_prop412},   {"prop57", check_prop57},     {"lemma13", check_lemma13},
      {"assembly", check_assembly}, {"bcp-compare", check_bcp_compare}};
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const auto& name : suite_names()) {
      if (name == "all") continue;
      auto part = suites.at(name)();
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  auto it = suites.find(suite);
  if (it == suites.end()) throw ParameterError("unknown suite '" + suite + "'");
  return it->second();
}

inline bool any_failed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.status == CheckStatus::Fail) return true;
  return false;
}

inline nlohmann::json to_json(const CheckResult& r) {
  return {{"id", r.id}, {"status", to_string(r.status)}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"citation", r.citation}};
}

inline std::vector<std::string> rationals_to_strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

inline nlohmann::json to_json(const OracleResult& r) {
  nlohmann::json samples = nlohmann::json::array();
  const auto& e = r.estimate;
  for (std::size_t i = 0; i < e.samples.size(); ++i) {
    samples.push_back({{"q", e.samples[i].q},
                       {"count", e.samples[i].length.get_str()},
                       {"normalized", e.normalized[i].to_string()},
                       {"normalized_approx", e.normalized[i].to_double()}});
  }
  nlohmann::json j{{"name", r.name},
                   {"description", r.description},
                   {"dimension", r.dimension},
                   {"samples", samples},
                   {"fits", rationals_to_strings(e.fits)},
                   {"leading", e.estimate.to_string()},
                   {"bracket", {e.lower.to_string(), e.upper.to_string()}},
                   {"approx", {{"leading", e.estimate.to_double()},
                               {"bracket", {e.lower.to_double(), e.upper.to_double()}}}}};
  if (r.target) {
    j["target"] = r.target->to_string();
    j["target_contained"] = *r.target_contained;
    j["approx"]["target"] = r.target->to_double();
  }
  return j;
}

inline std::string format_check(const CheckResult& r) {
  std::ostringstream out;
  out << "[" << to_string(r.status) << "] " << r.id << ": " << r.lhs << " vs " << r.rhs << "  (" << r.citation << ")";
  return out.str();
}

inline std::string format_oracle(const OracleResult& r) {
  std::ostringstream out;
  const auto& e = r.estimate;
  std::string desc = r.description;
  while (!desc.empty() && desc.back() == '\n') desc.pop_back();
  for (std::size_t pos = desc.find('\n'); pos != std::string::npos; pos = desc.find('\n', pos + 3)) desc.replace(pos, 1, "\n    ");
  out << r.name << "\n    " << desc << "\n  dimension " << r.dimension << "\n";
  for (std::size_t i = 0; i < e.samples.size(); ++i) {
    out << "  q=" << e.samples[i].q << "  count=" << e.samples[i].length.get_str()
        << "  normalized=" << e.normalized[i].to_string() << " (~" << e.normalized[i].to_double() << ")\n";
  }
  out << "  leading " << e.estimate.to_string() << " (~" << e.estimate.to_double() << ")\n";
  out << "  bracket " << bracket_str(e) << " (~[" << e.lower.to_double() << ", " << e.upper.to_double() << "])\n";
  if (r.target) {
    out << "  target " << r.target->to_string() << " (~" << r.target->to_double() << ") "
        << (*r.target_contained ? "inside" : "outside") << " bracket\n";
  }
  return out.str();
}

}  // namespace hkmult
