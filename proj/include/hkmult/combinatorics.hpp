#pragma once

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "hkmult/errors.hpp"
#include "hkmult/rational.hpp"

namespace hkmult {

/// Binomial coefficient; zero outside 0 <= k <= n.
inline BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline BigInt factorial(long n) {
  if (n < 0) throw ParameterError("factorial of a negative integer");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

namespace detail {

// Triangular memo of S(n, k), rows grown on demand under a write lock.
class StirlingTable {
 public:
  BigInt get(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    {
      std::shared_lock lock(mutex_);
      if (n < rows_.size()) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    if (rows_.empty()) rows_.push_back({BigInt(1)});
    while (rows_.size() <= n) {
      const std::size_t m = rows_.size();
      const auto& prev = rows_.back();
      std::vector<BigInt> row(m + 1);
      row[0] = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        BigInt left = j < prev.size() ? prev[j] : BigInt(0);
        row[j] = BigInt(static_cast<unsigned long>(j)) * left + prev[j - 1];
      }
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

inline StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

}  // namespace detail

/// Stirling number of the second kind via the recurrence
/// S(n,k) = k S(n-1,k) + S(n-1,k-1). Memoized; safe to call concurrently.
inline BigInt stirling2(long n, long k) {
  if (n < 0 || k < 0) throw ParameterError("stirling2 requires n, k >= 0");
  return detail::stirling_table().get(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
}

/// S(n,k) = (1/k!) sum_{i=0}^{k} (-1)^{k-i} C(k,i) i^n, evaluated directly.
inline BigInt stirling2_alternating(long n, long k) {
  if (n < 0 || k < 0) throw ParameterError("stirling2 requires n, k >= 0");
  BigInt sum = 0;
  for (long i = 0; i <= k; ++i) {
    BigInt term = binomial(k, i) * pow(BigInt(i), static_cast<unsigned long>(n));
    if ((k - i) % 2 == 0) sum += term; else sum -= term;
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), sum.get_mpz_t(), factorial(k).get_mpz_t());
  return q;
}

/// sum_{i=0}^{c} (-1)^i C(c,i) i^n. Vanishes for 0 <= n < c.
inline BigInt alternating_power_sum(long c, long n) {
  BigInt sum = 0;
  for (long i = 0; i <= c; ++i) {
    BigInt term = binomial(c, i) * pow(BigInt(i), static_cast<unsigned long>(n));
    if (i % 2 == 0) sum += term; else sum -= term;
  }
  return sum;
}

/// Beta function at positive integers: (c-1)!(d-1)!/(c+d-1)!.
inline Rational beta_value(long c, long d) {
  if (c < 1 || d < 1) throw ParameterError("beta_value requires c, d >= 1");
  return Rational(factorial(c - 1) * factorial(d - 1), factorial(c + d - 1));
}

/// Elementary symmetric polynomials e_0..e_n of the given values.
inline std::vector<BigInt> elementary_symmetric(const std::vector<long>& values) {
  std::vector<BigInt> e(values.size() + 1, BigInt(0));
  e[0] = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j >= 1; --j) e[j] += e[j - 1] * values[i];
  }
  return e;
}

}  // namespace hkmult
