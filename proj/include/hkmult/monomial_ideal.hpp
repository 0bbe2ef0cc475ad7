#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hkmult/errors.hpp"
#include "hkmult/presentation.hpp"
#include "hkmult/rational.hpp"

namespace hkmult {

/// Monomial ideal of k[x,y], stored as exponent pairs (x-exponent, y-exponent).
class MonomialIdeal2D {
 public:
  using Point = std::pair<long, long>;

  MonomialIdeal2D() = default;
  explicit MonomialIdeal2D(std::vector<Point> gens) : gens_(minimalize(std::move(gens))) {
    for (const auto& [a, b] : gens_)
      if (a < 0 || b < 0) throw ParameterError("monomial exponents must be nonnegative");
  }

  /// Minimal generators sorted by increasing x-exponent (hence decreasing y).
  const std::vector<Point>& generators() const { return gens_; }

  bool is_primary() const {
    bool x = false;
    bool y = false;
    for (const auto& [a, b] : gens_) {
      if (b == 0) x = true;
      if (a == 0) y = true;
    }
    return x && y;
  }

  void require_primary() const {
    if (!is_primary()) throw DimensionError("monomial ideal is not primary to (x, y): needs pure x- and y-powers");
  }

  /// l(k[x,y]/I): number of monomials below the staircase.
  std::int64_t colength() const {
    require_primary();
    std::int64_t total = 0;
    // gens_ sorted by x ascending, y strictly descending; the staircase height
    // on [a_i, a_{i+1}) is b_i.
    for (std::size_t i = 0; i + 1 < gens_.size(); ++i)
      total += (gens_[i + 1].first - gens_[i].first) * gens_[i].second;
    return total;
  }

  /// Multiplicity e(I) = 2 * area under the Newton polygon.
  BigInt multiplicity() const {
    require_primary();
    // Lower convex hull of the generators; endpoints (0, b_0) and (a_s, 0).
    std::vector<Point> hull;
    for (const auto& p : gens_) {
      while (hull.size() >= 2) {
        const auto& o = hull[hull.size() - 2];
        const auto& a = hull.back();
        const long cross = (a.first - o.first) * (p.second - o.second) - (a.second - o.second) * (p.first - o.first);
        if (cross <= 0) hull.pop_back(); else break;
      }
      hull.push_back(p);
    }
    BigInt twice_area = 0;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i)
      twice_area += BigInt(hull[i + 1].first - hull[i].first) * (hull[i].second + hull[i + 1].second);
    return twice_area;
  }

  friend MonomialIdeal2D operator*(const MonomialIdeal2D& I, const MonomialIdeal2D& J) {
    std::vector<Point> out;
    out.reserve(I.gens_.size() * J.gens_.size());
    for (const auto& [a, b] : I.gens_)
      for (const auto& [c, d] : J.gens_) out.emplace_back(a + c, b + d);
    return MonomialIdeal2D(std::move(out));
  }

  friend MonomialIdeal2D operator+(const MonomialIdeal2D& I, const MonomialIdeal2D& J) {
    std::vector<Point> out = I.gens_;
    out.insert(out.end(), J.gens_.begin(), J.gens_.end());
    return MonomialIdeal2D(std::move(out));
  }

  /// Ideal generated by the q-th powers of the minimal generators.
  MonomialIdeal2D frobenius_power(long q) const {
    std::vector<Point> out;
    for (const auto& [a, b] : gens_) out.emplace_back(a * q, b * q);
    return MonomialIdeal2D(std::move(out));
  }

  static MonomialIdeal2D unit() { return MonomialIdeal2D({{0, 0}}); }
  static MonomialIdeal2D maximal() { return MonomialIdeal2D({{1, 0}, {0, 1}}); }

  friend bool operator==(const MonomialIdeal2D&, const MonomialIdeal2D&) = default;

 private:
  static std::vector<Point> minimalize(std::vector<Point> gens) {
    std::sort(gens.begin(), gens.end());
    std::vector<Point> out;
    for (const auto& p : gens) {
      if (!out.empty() && out.back().second <= p.second) continue;
      out.push_back(p);
    }
    return out;
  }

  std::vector<Point> gens_;
};

/// Parses lines of the form `mi: x^2 y^3` (one generator per line).
inline MonomialIdeal2D parse_monomial_ideal(std::string_view text) {
  const std::vector<std::string> vars{"x", "y"};
  std::vector<MonomialIdeal2D::Point> gens;
  std::istringstream in{std::string(text)};
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = detail::trim(line);
    if (body.empty()) continue;
    const auto colon = body.find(':');
    if (colon == std::string::npos || detail::trim(body.substr(0, colon)) != "mi")
      throw ParseError("line " + std::to_string(lineno) + ": expected 'mi: <monomial>'");
    const auto factors = detail::split_ws(body.substr(colon + 1));
    const auto e = detail::parse_monomial_factors(factors, vars, body);
    gens.emplace_back(e[0], e[1]);
  }
  if (gens.empty()) throw ParseError("monomial ideal has no generators");
  return MonomialIdeal2D(std::move(gens));
}

enum class ReesMode { MaximalIdeal, IdealPower };

/// l(R/(m, It)^[q]) (MaximalIdeal) or l(R/(I, It)^[q]) (IdealPower) for the
/// Rees algebra R = R(I) over k[x,y], summed over graded pieces.
///
/// Pieces with n > r(q-1), r the number of minimal generators of I, vanish:
/// any product of n generators then repeats one generator q times, so
/// I^n = I^[q] I^{n-q}.
inline BigInt rees_monomial_colength(const MonomialIdeal2D& I, long q, ReesMode mode) {
  I.require_primary();
  if (q < 1) throw ParameterError("rees_monomial_colength requires q >= 1");
  const long r = static_cast<long>(I.generators().size());
  const long top = r * (q - 1);

  const MonomialIdeal2D frob_m = MonomialIdeal2D::maximal().frobenius_power(q);
  const MonomialIdeal2D frob_I = I.frobenius_power(q);

  std::vector<MonomialIdeal2D> powers;
  powers.reserve(static_cast<std::size_t>(top + 1));
  powers.push_back(MonomialIdeal2D::unit());
  BigInt total = 0;
  for (long n = 0; n <= top; ++n) {
    if (n > 0) powers.push_back(powers.back() * I);
    const auto& In = powers[static_cast<std::size_t>(n)];
    MonomialIdeal2D piece_ideal;
    if (n < q) {
      piece_ideal = mode == ReesMode::MaximalIdeal ? frob_m * In : frob_I * In;
    } else {
      piece_ideal = frob_I * powers[static_cast<std::size_t>(n - q)];
      if (mode == ReesMode::MaximalIdeal) piece_ideal = piece_ideal + frob_m * In;
    }
    total += piece_ideal.colength() - In.colength();
  }
  return total;
}

}  // namespace hkmult
