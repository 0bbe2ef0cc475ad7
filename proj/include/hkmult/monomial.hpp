#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "hkmult/errors.hpp"

namespace hkmult {

/// Exponents of a monomial in a fixed, ordered list of variables.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t nvars) : exps_(nvars, 0) {}
  ExponentVector(std::initializer_list<int> e) : exps_(e) { check(); }
  explicit ExponentVector(std::vector<int> e) : exps_(std::move(e)) { check(); }

  static ExponentVector pure_power(std::size_t nvars, std::size_t var, int exponent) {
    ExponentVector v(nvars);
    v.exps_[var] = exponent;
    v.check();
    return v;
  }

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  long degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0L); }

  bool divides(const ExponentVector& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  bool coprime(const ExponentVector& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0 && o.exps_[i] > 0) return false;
    return true;
  }

  /// Index of the variable if this is x_i^e with e > 0, else -1.
  int pure_power_variable() const {
    int var = -1;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (var >= 0) return -1;
      var = static_cast<int>(i);
    }
    return var;
  }

  friend ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
  }

  friend ExponentVector operator*(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
    return r;
  }

  /// a / b; b must divide a.
  friend ExponentVector operator/(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      r.exps_[i] = a.exps_[i] - b.exps_[i];
      if (r.exps_[i] < 0) throw InternalInvariantError("monomial quotient with negative exponent");
    }
    return r;
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

  /// x^2*y*z^3 style rendering; "1" for the empty monomial.
  std::string render(const std::vector<std::string>& names) const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += names.at(i);
      if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  void check() const {
    for (int e : exps_)
      if (e < 0) throw ParameterError("exponent vectors must be nonnegative");
  }

  std::vector<int> exps_;
};

/// Lex or graded reverse lex with respect to a variable ranking.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex };

  MonomialOrder() = default;
  /// `ranking` lists variable indices from largest to smallest.
  MonomialOrder(Kind kind, std::vector<std::size_t> ranking) : kind_(kind), ranking_(std::move(ranking)) {
    std::vector<std::size_t> sorted = ranking_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i) throw ParameterError("monomial order ranking must be a permutation");
  }

  static MonomialOrder lex(std::size_t nvars) { return {Kind::Lex, identity(nvars)}; }
  static MonomialOrder grevlex(std::size_t nvars) { return {Kind::GrevLex, identity(nvars)}; }

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& ranking() const { return ranking_; }

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const ExponentVector& a, const ExponentVector& b) const {
    if (kind_ == Kind::GrevLex) {
      const long da = a.degree();
      const long db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      for (auto it = ranking_.rbegin(); it != ranking_.rend(); ++it) {
        if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
      }
      return 0;
    }
    for (std::size_t v : ranking_) {
      if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    }
    return 0;
  }

  bool greater(const ExponentVector& a, const ExponentVector& b) const { return compare(a, b) > 0; }

 private:
  static std::vector<std::size_t> identity(std::size_t n) {
    std::vector<std::size_t> r(n);
    std::iota(r.begin(), r.end(), 0);
    return r;
  }

  Kind kind_ = Kind::Lex;
  std::vector<std::size_t> ranking_;
};

}  // namespace hkmult
