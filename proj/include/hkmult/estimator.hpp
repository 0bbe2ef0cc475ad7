#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hkmult/errors.hpp"
#include "hkmult/rational.hpp"

namespace hkmult {

struct ColengthSample {
  long q = 0;
  BigInt length;
};

struct HKEstimate {
  int dimension = 0;
  std::vector<ColengthSample> samples;
  /// l_k / q_k^dim for each sample.
  std::vector<Rational> normalized;
  /// Two-point leading-coefficient fits, one per consecutive pair.
  std::vector<Rational> fits;
  Rational estimate;
  Rational lower;
  Rational upper;

  bool contains(const Rational& x) const { return lower <= x && x <= upper; }
  Rational width() const { return upper - lower; }
};

inline void validate_samples(const std::vector<ColengthSample>& samples, int dim) {
  if (dim < 1) throw ParameterError("estimator needs dimension >= 1");
  if (samples.size() < 2) throw ParameterError("estimator needs at least two samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].q < 1) throw ParameterError("sample q must be positive");
    if (i > 0 && samples[i].q <= samples[i - 1].q) throw ParameterError("sample q values must be strictly increasing");
  }
}

inline std::vector<Rational> normalized_sequence(const std::vector<ColengthSample>& samples, int dim) {
  std::vector<Rational> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.emplace_back(s.length, pow(BigInt(s.q), static_cast<unsigned long>(dim)));
  return out;
}

/// Fits l(q) = A q^d + B q^{d-1} through consecutive samples. The bracket is
/// the range of the last three fits widened by the last step |A_k - A_{k-1}|.
inline HKEstimate estimate(const std::vector<ColengthSample>& samples, int dim) {
  validate_samples(samples, dim);
  HKEstimate out;
  out.dimension = dim;
  out.samples = samples;
  out.normalized = normalized_sequence(samples, dim);
  const auto d1 = static_cast<unsigned long>(dim - 1);
  for (std::size_t k = 1; k < samples.size(); ++k) {
    const auto& s1 = samples[k - 1];
    const auto& s2 = samples[k];
    const Rational r1(s1.length, pow(BigInt(s1.q), d1));
    const Rational r2(s2.length, pow(BigInt(s2.q), d1));
    out.fits.push_back((r2 - r1) / Rational(s2.q - s1.q));
  }
  out.estimate = out.fits.back();
  const std::size_t first = out.fits.size() >= 3 ? out.fits.size() - 3 : 0;
  auto lo = out.fits[first];
  auto hi = out.fits[first];
  for (std::size_t k = first; k < out.fits.size(); ++k) {
    lo = std::min(lo, out.fits[k]);
    hi = std::max(hi, out.fits[k]);
  }
  Rational step(0);
  if (out.fits.size() >= 2) step = abs(out.fits.back() - out.fits[out.fits.size() - 2]);
  out.lower = lo - step;
  out.upper = hi + step;
  return out;
}

/// Sample grid: powers of `base` (2, or a prime p) from base up to qmax.
inline std::vector<long> power_grid(long base, long qmax) {
  if (base < 2) throw ParameterError("grid base must be at least 2");
  if (qmax < base) throw ParameterError("qmax must be at least the grid base");
  std::vector<long> out;
  for (long q = base; q <= qmax; q *= base) {
    out.push_back(q);
    if (q > qmax / base) break;
  }
  return out;
}

}  // namespace hkmult
