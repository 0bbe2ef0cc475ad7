#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "hkmult/rational.hpp"

namespace hkmult {

/// Dense univariate polynomial with exact rational coefficients,
/// coefficients_[i] multiplying t^i.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  /// t + shift
  static Polynomial linear(const Rational& shift) { return Polynomial({shift, Rational(1)}); }

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }

  Rational operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coefficients_.size() > coefficients_.size()) coefficients_.resize(o.coefficients_.size());
    for (std::size_t i = 0; i < o.coefficients_.size(); ++i) coefficients_[i] += o.coefficients_[i];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.coefficients_.empty() || b.coefficients_.empty()) return {};
    std::vector<Rational> out(a.coefficients_.size() + b.coefficients_.size() - 1);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
      for (std::size_t j = 0; j < b.coefficients_.size(); ++j) out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Rational& s, Polynomial p) {
    for (auto& c : p.coefficients_) c *= s;
    p.trim();
    return p;
  }

  Polynomial power(unsigned long e) const {
    Polynomial r = constant(1);
    for (unsigned long i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// Antiderivative vanishing at 0.
  Polynomial antiderivative() const {
    std::vector<Rational> out(coefficients_.size() + 1);
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
      out[i + 1] = coefficients_[i] / Rational(static_cast<long>(i + 1));
    return Polynomial(std::move(out));
  }

  Rational integrate(const Rational& lo, const Rational& hi) const {
    Polynomial F = antiderivative();
    return F(hi) - F(lo);
  }

 private:
  void trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
  }

  std::vector<Rational> coefficients_;
};

}  // namespace hkmult
