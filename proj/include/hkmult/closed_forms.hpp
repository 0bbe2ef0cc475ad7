#pragma once

// Exact evaluators for the closed-form Hilbert-Kunz and multiplicity values of
// binomial hypersurfaces, Segre products of polynomial rings, Veronese
// subrings and the Rees algebras over them.

#include <algorithm>
#include <string>
#include <vector>

#include "hkmult/combinatorics.hpp"
#include "hkmult/errors.hpp"
#include "hkmult/polynomial.hpp"
#include "hkmult/rational.hpp"

namespace hkmult {

/// Segre product k[x_1..x_c] # k[y_1..y_d].
struct SegreParams {
  long c = 1;
  long d = 1;

  void validate() const {
    if (c < 1 || d < 1) throw ParameterError("Segre parameters require c, d >= 1");
  }
  /// Same product with c <= d.
  SegreParams normalized() const { return c <= d ? *this : SegreParams{d, c}; }
};

/// Veronese subring k[x_1..x_d]^(c).
struct VeroneseParams {
  long c = 1;
  long d = 2;
};

/// Number of monomials of degree n in d variables, C(n+d-1, d-1); 0 for n < 0.
inline BigInt alpha(long d, long n) {
  if (d < 1) throw ParameterError("alpha requires d >= 1");
  if (n < 0) return 0;
  return binomial(n + d - 1, d - 1);
}

/// Number of degree-n monomials in d variables with every exponent below q.
inline BigInt alpha_q(long d, long n, long q) {
  if (d < 1 || q < 1) throw ParameterError("alpha_q requires d, q >= 1");
  BigInt sum = 0;
  for (long i = 0; i <= d; ++i) {
    BigInt term = binomial(d, i) * alpha(d, n - i * q);
    if (i % 2 == 0) sum += term; else sum -= term;
  }
  return sum;
}

/// e_HK of k[[x,y]]/(x_1^{d_1}...x_s^{d_s} - y_1^{e_1}...y_t^{e_t}).
inline Rational conca_ehk(const std::vector<long>& ds, const std::vector<long>& es) {
  if (ds.empty() || es.empty()) throw ParameterError("conca_ehk requires two nonempty exponent lists");
  auto positive = [](long v) { return v >= 1; };
  if (!std::all_of(ds.begin(), ds.end(), positive) || !std::all_of(es.begin(), es.end(), positive))
    throw ParameterError("conca_ehk requires exponents >= 1");

  const long u = std::max(*std::max_element(ds.begin(), ds.end()), *std::max_element(es.begin(), es.end()));
  const auto s = elementary_symmetric(ds);
  const auto t = elementary_symmetric(es);
  Rational sum = 0;
  for (long j = 1; j <= static_cast<long>(ds.size()); ++j) {
    for (long l = 1; l <= static_cast<long>(es.size()); ++l) {
      Rational term(s[j] * t[l] * (j * l), BigInt(j + l - 1) * pow(BigInt(u), j + l - 1));
      if ((j + l) % 2 == 0) sum += term; else sum -= term;
    }
  }
  return sum;
}

/// d (1/2 + 1/(d+1)!): e_HK of the Rees algebra of the maximal ideal of a
/// d-variable polynomial ring.
inline Rational c_of_d(long d) {
  if (d < 1) throw ParameterError("c_of_d requires d >= 1");
  return Rational(d) * (Rational(1, 2) + Rational(BigInt(1), factorial(d + 1)));
}

/// e_HK of the Segre product of polynomial rings in c and d variables.
inline Rational segre_ehk(SegreParams p) {
  p.validate();
  const auto [c, d] = p.normalized();
  const long n = c + d - 1;
  const BigInt nfact = factorial(n);
  Rational result(factorial(d) * stirling2(n, d), nfact);
  BigInt corr = 0;
  for (long i = 1; i <= c; ++i) {
    for (long j = 1; j < i; ++j) {
      BigInt term = binomial(c, i) * binomial(d, j) * pow(BigInt(i - j), n);
      if ((c - i + j) % 2 == 0) corr += term; else corr -= term;
    }
  }
  return result - Rational(corr, nfact);
}

/// lim q^{-(c+d-1)} sum_n alpha_q(c,n,q) alpha(d,n) = c! S(c+d-1, c)/(c+d-1)!.
inline Rational mixed_power_limit(long c, long d) {
  if (c < 1 || d < 1) throw ParameterError("mixed_power_limit requires c, d >= 1");
  return Rational(factorial(c) * stirling2(c + d - 1, c), factorial(c + d - 1));
}

/// lim q^{-(c+d-1)} sum_n alpha_q(c,n,q) alpha_q(d,n,q) for c <= d.
inline Rational double_power_limit(long c, long d) {
  if (c < 1 || d < 1) throw ParameterError("double_power_limit requires c, d >= 1");
  if (c > d) throw ParameterError("double_power_limit requires c <= d");
  const long n = c + d - 1;
  BigInt corr = 0;
  for (long i = 1; i <= c; ++i) {
    for (long j = 1; j < i; ++j) {
      BigInt term = binomial(c, i) * binomial(d, j) * pow(BigInt(i - j), n);
      if ((c - i + j) % 2 == 0) corr += term; else corr -= term;
    }
  }
  return mixed_power_limit(c, d) + Rational(corr, factorial(n));
}

namespace detail {

// Integral over [0,1] of (u+i)^a (u+k)^b, by exact antidifferentiation.
inline Rational shifted_power_integral(long i, long a, long k, long b) {
  Polynomial p = Polynomial::linear(i).power(a) * Polynomial::linear(k).power(b);
  return p.integrate(0, 1);
}

// The closed form of Buchweitz-Chen-Pardue, indexed by the projective
// dimensions (c, d) of the two factors. The sum ranges over j in (0, c] with
// i and k independently in [0, j).
inline Rational bcp_formula(long c, long d) {
  Rational value(pow(BigInt(c + 1), c + d + 1), factorial(c + d + 1));
  const BigInt denom = factorial(c + d);
  for (long j = 1; j <= c; ++j) {
    for (long i = 0; i < j; ++i) {
      for (long k = 0; k < j; ++k) {
        Rational term = Rational(binomial(d + 1, j - i) * binomial(c + 1, j - k), denom) *
                        shifted_power_integral(i, d, k, c);
        if ((i + k) % 2 == 0) value -= term; else value += term;
      }
    }
  }
  return value * Rational(binomial(c + d, c));
}

}  // namespace detail

/// Segre e_HK through the integral formula of Buchweitz-Chen-Pardue.
///
/// That formula is stated for P^a x P^b with a >= b, so the variable counts
/// are converted to projective dimensions (count - 1) and ordered before
/// evaluation.
inline Rational bcp_segre_ehk(SegreParams p) {
  p.validate();
  const auto [small, large] = p.normalized();
  return detail::bcp_formula(large - 1, small - 1);
}

/// The same integral formula read literally, with (c, d) plugged in as given.
/// Only used for the comparison report.
inline Rational bcp_segre_literal(SegreParams p) {
  p.validate();
  return detail::bcp_formula(p.c, p.d);
}

/// e_HK of the Veronese subring itself: C(c+d-1, d)/c.
inline Rational veronese_ehk(VeroneseParams p) {
  if (p.c < 1 || p.d < 1) throw ParameterError("Veronese parameters require c, d >= 1");
  return Rational(binomial(p.c + p.d - 1, p.d), BigInt(p.c));
}

/// Multiplicity of the Veronese subring, c^{d-1}.
inline BigInt veronese_multiplicity(VeroneseParams p) {
  if (p.c < 1 || p.d < 1) throw ParameterError("Veronese parameters require c, d >= 1");
  return pow(BigInt(p.c), p.d - 1);
}

/// e_HK(R(m)) over k[x_1..x_d]^(c), valid for c >= d >= 2.
inline Rational veronese_rees_ehk(VeroneseParams p) {
  const auto [c, d] = p;
  if (d < 2 || c < d)
    throw ParameterError("veronese_rees_ehk requires c >= d >= 2; use veronese_rees_ehk_general");
  BigInt prod = 1;
  for (long i = 1; i <= d - 1; ++i) prod *= (c + i);
  Rational lead(pow(BigInt(2), d + 1) * pow(BigInt(c), d - 1), factorial(d + 1));
  Rational corr(BigInt(2 * c - d * (d - 1)) * prod, BigInt(c) * factorial(d + 1));
  return lead - corr;
}

/// Limits I_0(a), I_1(a) of the normalized partial sums of n^k beta_{n,cq}.
inline Rational veronese_I_limits(VeroneseParams p, long a, int k) {
  const auto [c, d] = p;
  if (c < 1 || d < 2) throw ParameterError("veronese_I_limits requires c >= 1, d >= 2");
  if (a < 0) throw ParameterError("veronese_I_limits requires a >= 0");
  if (k != 0 && k != 1) throw ParameterError("veronese_I_limits requires k in {0, 1}");

  BigInt sum = 0;
  for (long l = 0; l <= std::min(c - 1, a); ++l) {
    const BigInt weight = alpha(d, l);
    for (long i = 0; i <= std::min(d, a - l); ++i) {
      const BigInt r = a - l - i;
      BigInt term = weight * binomial(d, i) * pow(r, d);
      if (k == 1) term *= (a * d + l + i);
      if (i % 2 == 0) sum += term; else sum -= term;
    }
  }
  if (k == 0) return Rational(sum, BigInt(c) * factorial(d));
  return Rational(sum, BigInt(c) * BigInt(c) * factorial(d + 1));
}

/// e_HK(R(m)) over k[x_1..x_d]^(c) for any c >= 1, d >= 2:
///   c^{d-1} 2^{d+1}/(d+1)! + I_1(inf)
///     - 1/(c^2 (d+1)!) sum_{l<c} alpha(d,l) sum_{i<=N_l} (-1)^i C(d,i) (2c-l-i)^{d+1}
/// with N_l = min(d, 2c-l-1) and I_1(inf) = ((d+2c) alpha(d+1,c-1) - 2 alpha(d+2,c-1))/(2c^2).
inline Rational veronese_rees_ehk_general(VeroneseParams p) {
  const auto [c, d] = p;
  if (d < 2) throw ParameterError("veronese_rees_ehk_general requires d >= 2");
  if (c < 1) throw ParameterError("veronese_rees_ehk_general requires c >= 1");

  Rational value(pow(BigInt(c), d - 1) * pow(BigInt(2), d + 1), factorial(d + 1));
  value += Rational((d + 2 * c) * alpha(d + 1, c - 1) - 2 * alpha(d + 2, c - 1), BigInt(2 * c * c));

  BigInt tail = 0;
  for (long l = 0; l <= c - 1; ++l) {
    const long top = std::min(d, 2 * c - l - 1);
    BigInt inner = 0;
    for (long i = 0; i <= top; ++i) {
      BigInt term = binomial(d, i) * pow(BigInt(2 * c - l - i), d + 1);
      if (i % 2 == 0) inner += term; else inner -= term;
    }
    tail += alpha(d, l) * inner;
  }
  value -= Rational(tail, BigInt(c * c) * factorial(d + 1));
  return value;
}

/// Density f_c on [0, inf) whose moments give the limits I_k(a).
inline Rational fc_density(VeroneseParams p, const Rational& t) {
  const auto [c, d] = p;
  if (c < 1 || d < 2) throw ParameterError("fc_density requires c >= 1, d >= 2");
  if (t.sign() < 0) return 0;
  const BigInt fl = t.floor();
  if (!fl.fits_slong_p()) return 0;
  const long tf = fl.get_si();
  Rational sum = 0;
  for (long l = 0; l <= std::min(c - 1, tf); ++l) {
    const BigInt weight = alpha(d, l);
    for (long i = 0; i <= std::min(d, tf - l); ++i) {
      Rational term = Rational(weight * binomial(d, i)) * pow(t - Rational(l + i), d - 1);
      if (i % 2 == 0) sum += term; else sum -= term;
    }
  }
  return sum / Rational(BigInt(c) * factorial(d - 1));
}

/// Multiplicities of the Rees and extended Rees algebras of (x^m, y^n) in k[x,y].
struct CiReesValues {
  Rational e_rees;
  Rational ehk_rees;
  Rational e_extrees;
  Rational ehk_extrees;
};

inline CiReesValues ci_rees_values(long m, long n) {
  if (m < 1 || n < 1) throw ParameterError("ci_rees_values requires m, n >= 1");
  if (m < n) std::swap(m, n);
  CiReesValues v;
  v.e_rees = Rational(n + 1);
  v.ehk_rees = Rational(n + 1) - Rational(n, m) + Rational(n, 3 * m * m);
  v.e_extrees = n >= 2 ? Rational(n + 2) : Rational(2);
  v.ehk_extrees = Rational(n + 2) - Rational(n, m) - Rational(1, n);
  return v;
}

}  // namespace hkmult
