#pragma once

// Closed counting formulas for Frobenius colengths of Segre products and of
// Rees algebras over Veronese subrings. Each graded piece is a count of
// monomials, so everything here is exact integer arithmetic.

#include <algorithm>

#include "hkmult/closed_forms.hpp"
#include "hkmult/errors.hpp"
#include "hkmult/rational.hpp"

namespace hkmult {

/// l(R / M^[q]) for the Segre product of polynomial rings in c and d variables.
///
/// A pair (u, v) of degree-n monomials survives unless both u and v have a
/// q-th power of some variable, so the degree-n piece contributes
/// alpha_q(c) alpha(d) + alpha(c) alpha_q(d) - alpha_q(c) alpha_q(d).
inline BigInt segre_colength(long c, long d, long q) {
  if (c < 1 || d < 1) throw ParameterError("segre_colength requires c, d >= 1");
  if (q < 1) throw ParameterError("segre_colength requires q >= 1");
  BigInt total = 0;
  const long top = std::max(c, d) * (q - 1);
  for (long n = 0; n <= top; ++n) {
    const BigInt ac = alpha(c, n);
    const BigInt ad = alpha(d, n);
    const BigInt acq = alpha_q(c, n, q);
    const BigInt adq = alpha_q(d, n, q);
    total += acq * ad + ac * adq - acq * adq;
  }
  return total;
}

/// dim_k [A / m^[cq]]_n for A = k[x_1..x_d]^(c) graded by degree / c:
///   sum_{l<c} alpha(d,l) sum_{i<=d} (-1)^i C(d,i) alpha(d, c(n - lq - iq)).
inline BigInt veronese_beta(long c, long d, long n, long q) {
  BigInt sum = 0;
  for (long l = 0; l < c; ++l) {
    BigInt inner = 0;
    for (long i = 0; i <= d; ++i) {
      BigInt term = binomial(d, i) * alpha(d, c * (n - l * q - i * q));
      if (i % 2 == 0) inner += term; else inner -= term;
    }
    sum += alpha(d, l) * inner;
  }
  return sum;
}

/// l(R / M^[cq]) for R = R(m) over k[x_1..x_d]^(c). Normalize by (cq)^{d+1}.
inline BigInt veronese_rees_colength(long c, long d, long q) {
  if (c < 1 || d < 1) throw ParameterError("veronese_rees_colength requires c, d >= 1");
  if (q < 1) throw ParameterError("veronese_rees_colength requires q >= 1");
  const long cq = c * q;
  BigInt total = 0;
  // The first and last sums share the range 0 <= n <= 2(cq-1) and the
  // weight alpha_q(2, n, cq).
  for (long n = 0; n <= 2 * (cq - 1); ++n) {
    const BigInt w = alpha_q(2, n, cq);
    if (w == 0) continue;
    total += w * (alpha(d, c * n) - veronese_beta(c, d, n, q));
  }
  // beta_{n,cq} vanishes once every standard block is exhausted: n >= (c+d)q.
  for (long n = 0; n <= (c + d) * q; ++n) total += alpha(2, n) * veronese_beta(c, d, n, q);
  return total;
}

}  // namespace hkmult
