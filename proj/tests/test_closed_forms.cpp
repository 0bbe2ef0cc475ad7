#include <gtest/gtest.h>

#include <functional>
#include <vector>

#include "golden.hpp"
#include "hkmult/closed_forms.hpp"
#include "hkmult/estimator.hpp"
#include "hkmult/lattice.hpp"
#include "hkmult/polynomial.hpp"

using namespace hkmult;

namespace {

// Degree-n monomials in d variables with exponents < bound, by enumeration.
long enumerate_monomials(int d, int n, int bound) {
  std::function<long(int, int)> go = [&](int vars, int left) -> long {
    if (vars == 1) return left < bound ? 1 : 0;
    long total = 0;
    for (int e = 0; e <= left && e < bound; ++e) total += go(vars - 1, left - e);
    return total;
  };
  return go(d, n);
}

// Exact integral of t^k f_c(t) over [0, a]: f_c is a polynomial of degree
// d-1 on each [j, j+1], recovered by Lagrange interpolation at d points.
Rational fc_moment(VeroneseParams p, long a, int k) {
  Rational total = 0;
  const long deg = p.d - 1;
  for (long j = 0; j < a; ++j) {
    std::vector<Rational> xs;
    for (long m = 0; m <= deg; ++m) xs.push_back(Rational(j) + Rational(m + 1, deg + 2));
    Polynomial interp;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      Polynomial basis = Polynomial::constant(1);
      for (std::size_t m = 0; m < xs.size(); ++m) {
        if (m == i) continue;
        basis = basis * (Rational(1) / (xs[i] - xs[m]) * Polynomial::linear(-xs[m]));
      }
      interp += fc_density(p, xs[i]) * basis;
    }
    const Polynomial integrand = k == 0 ? interp : interp * Polynomial::linear(0);
    total += integrand.integrate(Rational(j), Rational(j + 1));
  }
  return total / pow(Rational(p.c), static_cast<unsigned long>(k));
}

Rational partial_sum(long c, long d, long q, bool both_truncated) {
  BigInt sum = 0;
  for (long n = 0; n <= c * (q - 1); ++n)
    sum += alpha_q(c, n, q) * (both_truncated ? alpha_q(d, n, q) : alpha(d, n));
  return Rational(sum, pow(BigInt(q), static_cast<unsigned long>(c + d - 1)));
}

}  // namespace

TEST(Alpha, Values) {
  EXPECT_EQ(alpha(2, 5), 6);
  for (long d = 1; d <= 8; ++d) EXPECT_EQ(alpha(d, 0), 1);
  EXPECT_EQ(alpha(3, 4), enumerate_monomials(3, 4, 1000));
  EXPECT_EQ(alpha(3, 4), 15);
  for (long n = -5; n < 0; ++n) EXPECT_EQ(alpha(2, n), 0);
  for (long n = 0; n < 20; ++n) EXPECT_EQ(alpha(2, n), n + 1);
}

TEST(AlphaQ, MatchesEnumeration) {
  for (int d = 1; d <= 4; ++d)
    for (int q = 1; q <= 5; ++q)
      for (int n = 0; n <= d * q + 2; ++n) EXPECT_EQ(alpha_q(d, n, q), enumerate_monomials(d, n, q)) << d << n << q;
  EXPECT_EQ(alpha_q(3, 4, 3), enumerate_monomials(3, 4, 3));
}

TEST(AlphaQ, TwoVariableCaseSplit) {
  for (long q = 1; q <= 12; ++q) {
    for (long n = 0; n <= 3 * q; ++n) {
      const long expected = n < q ? n + 1 : (n <= 2 * q - 2 ? 2 * q - n - 1 : 0);
      EXPECT_EQ(alpha_q(2, n, q), expected);
    }
  }
}

TEST(Conca, AnHypersurface) {
  for (long n = 1; n <= 12; ++n) EXPECT_EQ(conca_ehk({1, 1}, {n}), Rational(2) - Rational(1, n));
  EXPECT_EQ(conca_ehk({1}, {1}), Rational(1));
}

TEST(Conca, ReesOfCompleteIntersection) {
  for (long m = 1; m <= 8; ++m)
    for (long n = 1; n <= m; ++n)
      EXPECT_EQ(conca_ehk({m, 1}, {n, 1}), Rational(n + 1) - Rational(n, m) + Rational(n, 3 * m * m));
}

TEST(Conca, ExtendedReesOfAn) {
  for (long n = 3; n <= 12; ++n)
    EXPECT_EQ(conca_ehk({1, 1}, {n, n - 2}), Rational(2) - Rational(2 * (n + 1), 3 * n * n));
}

TEST(Conca, RejectsBadInput) {
  EXPECT_THROW(conca_ehk({}, {1}), ParameterError);
  EXPECT_THROW(conca_ehk({1, 0}, {1}), ParameterError);
}

TEST(Segre, PublishedValuesThatHold) {
  for (const auto& g : golden::kPublishedSegre) {
    if (g.c == 3 && g.d == 4) continue;
    EXPECT_EQ(segre_ehk({g.c, g.d}), Rational::parse(g.value)) << g.c << "," << g.d;
  }
}

// The printed 889/360 for (3,4) disagrees with the closed form, the integral
// formula and the finite-q counts; all three give 899/360.
TEST(Segre, ThreeFourIs899Over360) {
  const Rational v = segre_ehk({3, 4});
  EXPECT_EQ(v, Rational(899, 360));
  EXPECT_EQ(bcp_segre_ehk({3, 4}), v);
  std::vector<ColengthSample> samples;
  for (long q : {64, 128, 256}) samples.push_back({q, segre_colength(3, 4, q)});
  const auto est = estimate(samples, 6);
  EXPECT_TRUE(est.contains(Rational(899, 360)));
  EXPECT_FALSE(est.contains(Rational(889, 360)));
}

TEST(Segre, SymmetryAndTrivialCases) {
  for (long c = 1; c <= 7; ++c)
    for (long d = 1; d <= 7; ++d) EXPECT_EQ(segre_ehk({c, d}), segre_ehk({d, c}));
  for (long d = 1; d <= 10; ++d) EXPECT_EQ(segre_ehk({1, d}), Rational(1));
  for (long d = 2; d <= 12; ++d) EXPECT_EQ(segre_ehk({2, d}), c_of_d(d));
}

TEST(CofD, Values) {
  EXPECT_EQ(c_of_d(1), Rational(1));
  EXPECT_EQ(c_of_d(2), Rational(4, 3));
  EXPECT_EQ(c_of_d(3), Rational(13, 8));
}

TEST(Bcp, ShiftedReadingMatchesClosedForm) {
  EXPECT_EQ(bcp_segre_ehk({1, 1}), Rational(1));
  EXPECT_EQ(bcp_segre_ehk({2, 2}), Rational(4, 3));
  EXPECT_EQ(bcp_segre_ehk({4, 4}), Rational(899, 315));
  for (long c = 1; c <= 8; ++c)
    for (long d = 1; d <= 8; ++d) EXPECT_EQ(bcp_segre_ehk({c, d}), segre_ehk({c, d})) << c << "," << d;
}

TEST(Bcp, LiteralReadingDiffers) {
  EXPECT_EQ(bcp_segre_literal({1, 2}), Rational(5, 4));
  EXPECT_NE(bcp_segre_literal({2, 2}), segre_ehk({2, 2}));
}

TEST(MixedPowerLimit, Values) {
  EXPECT_EQ(mixed_power_limit(2, 2), Rational(1));
  for (long d = 1; d <= 6; ++d) EXPECT_EQ(mixed_power_limit(1, d), Rational(1, factorial(d)));
}

TEST(MixedPowerLimit, PartialSumsConverge) {
  for (long c = 1; c <= 3; ++c) {
    for (long d = 1; d <= 3; ++d) {
      const double limit = mixed_power_limit(c, d).to_double();
      const double approx = partial_sum(c, d, 256, false).to_double();
      EXPECT_NEAR(approx, limit, 0.02 * limit) << c << "," << d;
    }
  }
}

TEST(DoublePowerLimit, PartialSumsConverge) {
  for (long c = 1; c <= 3; ++c) {
    for (long d = c; d <= 3; ++d) {
      const double limit = double_power_limit(c, d).to_double();
      const double approx = partial_sum(c, d, 256, true).to_double();
      EXPECT_NEAR(approx, limit, 0.02 * limit) << c << "," << d;
    }
  }
  EXPECT_THROW(double_power_limit(3, 2), ParameterError);
}

TEST(DoublePowerLimit, SegreFromLimits) {
  // e_HK(S_{c,d}) = M(c,d) + M(d,c) - D(c,d).
  for (long c = 1; c <= 6; ++c)
    for (long d = c; d <= 6; ++d)
      EXPECT_EQ(mixed_power_limit(c, d) + mixed_power_limit(d, c) - double_power_limit(c, d), segre_ehk({c, d}));
}

TEST(Veronese, ReesDimensionTwo) {
  for (long c = 2; c <= 10; ++c) EXPECT_EQ(veronese_rees_ehk({c, 2}), Rational(c) + Rational(1, 3 * c));
  EXPECT_EQ(veronese_rees_ehk({2, 2}), Rational(13, 6));
  EXPECT_EQ(veronese_rees_ehk({3, 3}), Rational(6));
}

TEST(Veronese, ReesRejectsOutsideRange) {
  EXPECT_THROW(veronese_rees_ehk({2, 3}), ParameterError);
  EXPECT_THROW(veronese_rees_ehk({3, 1}), ParameterError);
  EXPECT_THROW(veronese_rees_ehk_general({3, 1}), ParameterError);
}

TEST(Veronese, GeneralMatchesRestricted) {
  for (long c = 2; c <= 8; ++c)
    for (long d = 2; d <= c; ++d) EXPECT_EQ(veronese_rees_ehk_general({c, d}), veronese_rees_ehk({c, d})) << c << d;
}

TEST(Veronese, GeneralAtCEqualsOne) {
  for (long d = 2; d <= 6; ++d) EXPECT_EQ(veronese_rees_ehk_general({1, d}), c_of_d(d));
}

TEST(Veronese, GeneralMatchesCounterBelowDiagonal) {
  const Rational target = veronese_rees_ehk_general({2, 3});
  const Rational approx(veronese_rees_colength(2, 3, 64), pow(BigInt(128), 4));
  EXPECT_LT(abs(approx - target), target * Rational(3, 100));
}

TEST(Veronese, ILimits) {
  EXPECT_EQ(veronese_I_limits({2, 2}, 4, 0), Rational(3, 2));
  for (int k = 0; k <= 1; ++k) EXPECT_EQ(veronese_I_limits({3, 2}, 0, k), Rational(0));
  EXPECT_THROW(veronese_I_limits({2, 2}, 1, 2), ParameterError);
  for (long c = 1; c <= 6; ++c) {
    for (long d = 2; d <= 5; ++d) {
      const VeroneseParams p{c, d};
      EXPECT_EQ(veronese_I_limits(p, c + d, 0), veronese_ehk(p));
      EXPECT_EQ(veronese_I_limits(p, c + d + 3, 0), veronese_ehk(p));
    }
    EXPECT_EQ(veronese_ehk({c, 2}), Rational(c + 1, 2));
  }
  for (long c = 2; c <= 6; ++c) {
    for (long d = 2; d <= c; ++d) {
      const VeroneseParams p{c, d};
      EXPECT_EQ(veronese_I_limits(p, c + d, 0), Rational(alpha(d + 1, c - 1), BigInt(c)));
      EXPECT_EQ(veronese_I_limits(p, c + d, 1),
                Rational((d + 2 * c) * alpha(d + 1, c - 1) - 2 * alpha(d + 2, c - 1), BigInt(2 * c * c)));
    }
  }
}

TEST(Veronese, DensityIntegratesToILimits) {
  for (const VeroneseParams p : {VeroneseParams{2, 2}, VeroneseParams{3, 2}, VeroneseParams{3, 3}}) {
    for (long a = 0; a <= p.c + p.d; ++a)
      for (int k = 0; k <= 1; ++k) EXPECT_EQ(fc_moment(p, a, k), veronese_I_limits(p, a, k)) << p.c << p.d << a << k;
    EXPECT_EQ(fc_moment(p, p.c + p.d, 0), veronese_ehk(p));
    for (long t = p.c + p.d - 1; t <= p.c + p.d + 3; ++t) EXPECT_EQ(fc_density(p, Rational(t)), Rational(0));
  }
}

TEST(CiRees, Values) {
  const auto v = ci_rees_values(2, 2);
  EXPECT_EQ(v.ehk_rees, Rational(13, 6));
  EXPECT_EQ(v.ehk_extrees, Rational(5, 2));
  EXPECT_EQ(ci_rees_values(1, 1).ehk_extrees, Rational(1));
  EXPECT_EQ(ci_rees_values(2, 3).ehk_rees, ci_rees_values(3, 2).ehk_rees);
  for (long m = 1; m <= 8; ++m)
    for (long n = 1; n <= m; ++n) EXPECT_EQ(ci_rees_values(m, n).ehk_rees, conca_ehk({m, 1}, {n, 1}));
}

TEST(Bounds, VeroneseDimensionTwoBelowCofD) {
  for (long c = 1; c <= 10; ++c) {
    const Rational v = veronese_rees_ehk_general({c, 2});
    const Rational bound = c_of_d(2) * Rational(c);
    EXPECT_LE(v, bound);
    EXPECT_EQ(v == bound, c == 1);
  }
}

TEST(Bounds, ReesBelowMultiplicityForLargeC) {
  for (long d = 3; d <= 4; ++d) {
    for (long c = d * (d - 1) / 2; c <= 50; ++c)
      EXPECT_LT(veronese_rees_ehk_general({c, d}), Rational(veronese_multiplicity({c, d})));
    const Rational ratio = veronese_rees_ehk_general({1000, d}) / Rational(veronese_multiplicity({1000, d}));
    const Rational limit(pow(BigInt(2), d + 1) - 2, factorial(d + 1));
    EXPECT_LT(abs(ratio - limit), limit / Rational(10));
  }
}
