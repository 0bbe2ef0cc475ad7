#pragma once

// Affine semigroups S in N^2 with generators (a_0,b_0), ..., (a_s,b_s),
// normalized so 0 = a_0 < ... < a_s = a and b = b_0 > ... > b_s = 0.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <regex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hkmult/errors.hpp"
#include "hkmult/rational.hpp"

namespace hkmult {

class Semigroup2D {
 public:
  using Point = std::pair<long, long>;

  explicit Semigroup2D(std::vector<Point> gens) : gens_(std::move(gens)) {
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    if (gens_.size() < 2) throw RankError("semigroup needs at least two generators to have rank 2");
    for (const auto& [a, b] : gens_)
      if (a < 0 || b < 0 || (a == 0 && b == 0)) throw ParameterError("semigroup generators must be nonzero points of N^2");
    long g = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (std::size_t j = i + 1; j < gens_.size(); ++j)
        g = std::gcd(g, gens_[i].first * gens_[j].second - gens_[i].second * gens_[j].first);
    if (g == 0) throw RankError("semigroup generators are collinear; Z^2/ZS is infinite");
    index_ = std::abs(g);
    if (gens_.front().first != 0 || gens_.back().second != 0)
      throw ParameterError("semigroup must contain generators (0, b) and (a, 0)");
    for (std::size_t i = 1; i < gens_.size(); ++i)
      if (!(gens_[i].first > gens_[i - 1].first && gens_[i].second < gens_[i - 1].second))
        throw ParameterError("semigroup generators must have a strictly increasing and b strictly decreasing");
  }

  const std::vector<Point>& generators() const { return gens_; }
  /// |Z^2 / ZS|.
  long index() const { return index_; }
  long a() const { return gens_.back().first; }
  long b() const { return gens_.front().second; }

  /// Order table over [0,U] x [0,V]: largest number of generators summing to
  /// the point, or -1 when the point is not in S.
  class OrderTable {
   public:
    OrderTable(const Semigroup2D& S, long U, long V) : U_(U), V_(V), ord_((U + 1) * (V + 1), -1) {
      ord_[0] = 0;
      for (long u = 0; u <= U; ++u) {
        for (long v = 0; v <= V; ++v) {
          if (u == 0 && v == 0) continue;
          int best = -1;
          for (const auto& [ga, gb] : S.generators()) {
            if (u < ga || v < gb) continue;
            const int o = ord_[idx(u - ga, v - gb)];
            if (o >= 0 && o + 1 > best) best = o + 1;
          }
          ord_[idx(u, v)] = best;
        }
      }
    }
    int order(long u, long v) const {
      if (u < 0 || v < 0 || u > U_ || v > V_) return -1;
      return ord_[idx(u, v)];
    }
    bool contains(long u, long v) const { return order(u, v) >= 0; }
    long width() const { return U_; }
    long height() const { return V_; }

   private:
    std::size_t idx(long u, long v) const { return static_cast<std::size_t>(u * (V_ + 1) + v); }
    long U_;
    long V_;
    std::vector<int> ord_;
  };

  /// Box containing every point written with all generator multiplicities < q.
  OrderTable table_for(long q) const {
    long U = 0;
    long V = 0;
    for (const auto& [ga, gb] : gens_) {
      U += ga * (q - 1);
      V += gb * (q - 1);
    }
    return OrderTable(*this, U, V);
  }

  friend bool operator==(const Semigroup2D&, const Semigroup2D&) = default;

 private:
  std::vector<Point> gens_;
  long index_ = 0;
};

/// Parses `sg: (3,0) (1,1) (0,3)`; extra lines and '#' comments are ignored
/// except that exactly one `sg:` line must be present.
inline Semigroup2D parse_semigroup(std::string_view text) {
  static const std::regex line_re(R"(^\s*sg\s*:(.*)$)");
  static const std::regex point_re(R"(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
  std::string s(text);
  std::vector<Semigroup2D::Point> gens;
  int found = 0;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto nl = s.find('\n', start);
    std::string line = s.substr(start, nl == std::string::npos ? std::string::npos : nl - start);
    start = nl == std::string::npos ? s.size() + 1 : nl + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::smatch m;
    if (!std::regex_match(line, m, line_re)) throw ParseError("expected 'sg: (a,b) (c,d) ...', got '" + line + "'");
    ++found;
    std::string body = m[1].str();
    std::string leftover = std::regex_replace(body, point_re, "");
    if (leftover.find_first_not_of(" \t\r") != std::string::npos)
      throw ParseError("unexpected text in semigroup line: '" + body + "'");
    for (auto it = std::sregex_iterator(body.begin(), body.end(), point_re); it != std::sregex_iterator(); ++it)
      gens.emplace_back(std::stol((*it)[1].str()), std::stol((*it)[2].str()));
  }
  if (found != 1) throw ParseError("semigroup input needs exactly one 'sg:' line");
  return Semigroup2D(std::move(gens));
}

inline std::string render_semigroup(const Semigroup2D& S) {
  std::string out = "sg:";
  for (const auto& [a, b] : S.generators()) out += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
  return out;
}

/// #{ s in S : s - q g_i not in S for every generator g_i } = l(k[S]/m^[q]).
inline BigInt semigroup_ehk_colength(const Semigroup2D& S, long q) {
  if (q < 1) throw ParameterError("semigroup_ehk_colength requires q >= 1");
  const auto table = S.table_for(q);
  std::int64_t count = 0;
  for (long u = 0; u <= table.width(); ++u) {
    for (long v = 0; v <= table.height(); ++v) {
      if (!table.contains(u, v)) continue;
      bool in_frobenius = false;
      for (const auto& [ga, gb] : S.generators()) {
        if (table.contains(u - q * ga, v - q * gb)) { in_frobenius = true; break; }
      }
      if (!in_frobenius) ++count;
    }
  }
  return BigInt(std::to_string(count));
}

/// Graded pieces l([R'/N^[q]]_n) of the extended Rees algebra R' = R'(m) of
/// k[S], N = (mt, t^{-1}). Degree-n parts of N^[q]:
///   n <= -q        : A
///   -q < n < 0     : m^{n+q}
///   0 <= n <= q-1  : m^[q] + m^{n+q}
///   n >= q         : m^[q] m^{n-q} + m^{n+q}
/// and R'_n = m^n for n >= 0, A for n < 0. Only nonzero pieces are returned.
inline std::map<long, BigInt> semigroup_extrees_pieces(const Semigroup2D& S, long q) {
  if (q < 1) throw ParameterError("semigroup_extrees_colength requires q >= 1");
  // Every surviving point has a longest representation with all generator
  // multiplicities < q, so the box of table_for(q) suffices.
  const auto table = S.table_for(q);
  std::map<long, std::int64_t> diff;  // difference array over degrees
  auto add_range = [&](long lo, long hi) {
    if (lo > hi) return;
    diff[lo] += 1;
    diff[hi + 1] -= 1;
  };
  for (long u = 0; u <= table.width(); ++u) {
    for (long v = 0; v <= table.height(); ++v) {
      const int o = table.order(u, v);
      if (o < 0) continue;
      // Largest n - q with s in m^[q] m^{n-q}: max over i of ord(s - q g_i).
      int frob = -1;
      for (const auto& [ga, gb] : S.generators()) frob = std::max(frob, table.order(u - q * ga, v - q * gb));
      // -q < n < 0: survives iff ord(s) < n + q.
      add_range(std::max(-q + 1, static_cast<long>(o) - q + 1), -1);
      // 0 <= n <= min(q-1, ord): survives iff s not in m^[q] and ord < n + q.
      if (frob < 0) add_range(std::max(0L, static_cast<long>(o) - q + 1), std::min(q - 1, static_cast<long>(o)));
      // q <= n <= ord: survives iff ord < n + q and ord(s - q g_i) < n - q.
      add_range(std::max({q, static_cast<long>(frob) + q + 1, static_cast<long>(o) - q + 1}), o);
    }
  }
  std::map<long, BigInt> pieces;
  std::int64_t running = 0;
  long prev = 0;
  bool first = true;
  for (const auto& [deg, delta] : diff) {
    if (!first && running != 0)
      for (long n = prev; n < deg; ++n) pieces[n] = BigInt(std::to_string(running));
    running += delta;
    prev = deg;
    first = false;
  }
  return pieces;
}

/// l(R'(m) / N^[q]) for the extended Rees algebra of k[S].
inline BigInt semigroup_extrees_colength(const Semigroup2D& S, long q) {
  BigInt total = 0;
  for (const auto& [deg, len] : semigroup_extrees_pieces(S, q)) total += len;
  return total;
}

/// True iff a_i/a + b_i/b = 1 for every generator, i.e. all generators lie on
/// the segment joining (0, b) and (a, 0).
inline bool equality_criterion(const Semigroup2D& S) {
  const Rational a(S.a());
  const Rational b(S.b());
  for (const auto& [ai, bi] : S.generators())
    if (Rational(ai) / a + Rational(bi) / b != Rational(1)) return false;
  return true;
}

}  // namespace hkmult
