#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "hkmult/estimator.hpp"
#include "hkmult/lattice.hpp"
#include "hkmult/monomial_ideal.hpp"
#include "hkmult/oracle.hpp"
#include "hkmult/report.hpp"
#include "hkmult/semigroup.hpp"

using namespace hkmult;

namespace {

HKEstimate estimate_over(const std::function<BigInt(long)>& count, const std::vector<long>& qs, int dim, long scale = 1) {
  std::vector<ColengthSample> samples;
  for (long q : qs) samples.push_back({scale * q, count(q)});
  return estimate(samples, dim);
}

// Extended Rees algebra of k[S] as the semigroup {(s, n) : s in S, n <= 0 or
// s in m^n} in Z^3; counts the points outside the ideal generated by
// (q g_i, q) and (0, -q). Membership is decided by a fresh order table over
// an enlarged box.
long brute_extrees(const Semigroup2D& S, long q) {
  long U = 0, V = 0;
  for (const auto& [a, b] : S.generators()) {
    U += 2 * a * q;
    V += 2 * b * q;
  }
  const Semigroup2D::OrderTable table(S, U, V);
  auto in_rees = [&](long u, long v, long n) {
    const int o = table.order(u, v);
    return o >= 0 && (n <= 0 || o >= n);
  };
  long count = 0;
  for (long u = 0; u <= U; ++u) {
    for (long v = 0; v <= V; ++v) {
      const int o = table.order(u, v);
      if (o < 0) continue;
      for (long n = -3 * q; n <= o; ++n) {
        bool dead = in_rees(u, v, n + q);
        for (const auto& [a, b] : S.generators()) dead = dead || in_rees(u - q * a, v - q * b, n - q);
        if (!dead) ++count;
      }
    }
  }
  return count;
}

PresentedQuotient veronese_rees_presentation() {
  // R(m) over k[x,y]^(2): 2x2 minors of [[a, b, A, B], [b, c, B, C]].
  return parse_presentation(
      "vars: a b c A B C\n"
      "bin: a*c - b^2\nbin: a*B - b*A\nbin: a*C - b*B\nbin: b*B - c*A\nbin: b*C - c*B\nbin: A*C - B^2\n"
      "dim: 3\n");
}

}  // namespace

TEST(SegreCounter, Trivial) {
  for (long q = 1; q <= 20; ++q) EXPECT_EQ(segre_colength(1, 1, q), q);
  for (long q = 1; q <= 20; ++q) EXPECT_EQ(segre_colength(1, 3, q), q * q * q);
}

TEST(SegreCounter, TwoByTwoClosedForm) {
  for (long q = 1; q <= 64; ++q) EXPECT_EQ(segre_colength(2, 2, q), BigInt((4 * q * q * q - q) / 3));
}

TEST(SegreCounter, Symmetric) {
  for (long q : {2, 5, 8})
    for (long c = 1; c <= 4; ++c)
      for (long d = 1; d <= 4; ++d) EXPECT_EQ(segre_colength(c, d, q), segre_colength(d, c, q));
}

TEST(SegreCounter, ApproachesClosedForm) {
  const auto est = estimate_over([](long q) { return segre_colength(2, 2, q); }, {8, 16, 32, 64}, 3);
  EXPECT_TRUE(est.contains(Rational(4, 3)));
  for (long c = 2; c <= 4; ++c) {
    for (long d = c; d <= 4; ++d) {
      const auto e = estimate_over([c, d](long q) { return segre_colength(c, d, q); }, {32, 64, 128}, static_cast<int>(c + d - 1));
      EXPECT_TRUE(e.contains(segre_ehk({c, d}))) << c << d;
    }
  }
}

TEST(VeroneseCounter, BetaBelowThreshold) {
  for (long c = 1; c <= 4; ++c)
    for (long d = 2; d <= 4; ++d)
      for (long q : {1, 2, 3})
        for (long n = 0; n < c * q; ++n) EXPECT_EQ(veronese_beta(c, d, n, q), alpha(d, c * n));
}

TEST(VeroneseCounter, BetaVanishesEventually) {
  for (long c = 1; c <= 4; ++c)
    for (long d = 2; d <= 4; ++d)
      for (long q : {1, 2, 3})
        for (long n = (c + d) * q; n <= (c + d) * q + 5; ++n) EXPECT_EQ(veronese_beta(c, d, n, q), 0);
}

TEST(VeroneseCounter, DegreeOneIsSegre) {
  for (long d = 2; d <= 4; ++d)
    for (long q : {1, 2, 3, 4, 8}) EXPECT_EQ(veronese_rees_colength(1, d, q), segre_colength(2, d, q));
}

TEST(VeroneseCounter, MatchesEngineOnScroll) {
  const auto p = veronese_rees_presentation();
  for (long q : {1, 2, 3, 4}) EXPECT_EQ(veronese_rees_colength(2, 2, q), frobenius_colength(p, 2 * q, p.effective_order()));
}

TEST(VeroneseCounter, ApproachesClosedForm) {
  const auto est = estimate_over([](long q) { return veronese_rees_colength(2, 2, q); }, {8, 16, 32}, 3, 2);
  EXPECT_TRUE(est.contains(Rational(13, 6)));
  for (long d = 2; d <= 3; ++d) {
    const auto e = estimate_over([d](long q) { return veronese_rees_colength(1, d, q); }, {16, 32, 64}, static_cast<int>(d + 1));
    EXPECT_TRUE(e.contains(c_of_d(d)));
  }
}

TEST(MonomialIdeal, Basics) {
  const MonomialIdeal2D I({{2, 0}, {1, 1}, {3, 0}, {0, 3}, {1, 2}});
  EXPECT_EQ(I.generators(), (std::vector<MonomialIdeal2D::Point>{{0, 3}, {1, 1}, {2, 0}}));
  EXPECT_EQ(I.colength(), 4);
  EXPECT_EQ(MonomialIdeal2D::maximal().colength(), 1);
  EXPECT_EQ(MonomialIdeal2D({{3, 0}, {0, 5}}).colength(), 15);
  EXPECT_EQ(MonomialIdeal2D::unit().colength(), 0);
  EXPECT_THROW(MonomialIdeal2D({{2, 0}, {1, 1}}).colength(), DimensionError);
  EXPECT_THROW(MonomialIdeal2D({{-1, 2}}), ParameterError);
}

TEST(MonomialIdeal, Multiplicity) {
  EXPECT_EQ(MonomialIdeal2D::maximal().multiplicity(), 1);
  for (long m = 1; m <= 5; ++m)
    for (long n = 1; n <= 5; ++n) EXPECT_EQ(MonomialIdeal2D({{m, 0}, {0, n}}).multiplicity(), m * n);
  // (x^2, xy, y^2) = m^2.
  EXPECT_EQ(MonomialIdeal2D({{2, 0}, {1, 1}, {0, 2}}).multiplicity(), 4);
  // Integral closure of (x^4, y^4, x y^3) is not larger in multiplicity than (x^4, y^4).
  EXPECT_EQ(MonomialIdeal2D({{4, 0}, {1, 3}, {0, 4}}).multiplicity(), 16);
  // Multiplicity is the leading term of 2 l(A/I^n)/n^2.
  const MonomialIdeal2D J({{3, 0}, {1, 1}, {0, 2}});
  MonomialIdeal2D Jn = MonomialIdeal2D::unit();
  for (int n = 0; n < 40; ++n) Jn = Jn * J;
  const Rational approx(BigInt(2 * Jn.colength()), BigInt(1600));
  EXPECT_LT(abs(approx - Rational(J.multiplicity())), Rational(1, 5));
}

TEST(MonomialIdeal, ProductAndSum) {
  const auto m = MonomialIdeal2D::maximal();
  EXPECT_EQ((m * m).generators(), (std::vector<MonomialIdeal2D::Point>{{0, 2}, {1, 1}, {2, 0}}));
  EXPECT_EQ((m * m + m.frobenius_power(1)).generators(), m.generators());
  EXPECT_EQ(m.frobenius_power(3).colength(), 9);
}

TEST(MonomialIdeal, Parse) {
  const auto I = parse_monomial_ideal("# ideal\nmi: x^2 y^3\nmi: x^4\nmi: y^5\n");
  EXPECT_EQ(I.generators(), (std::vector<MonomialIdeal2D::Point>{{0, 5}, {2, 3}, {4, 0}}));
  EXPECT_THROW(parse_monomial_ideal("mi: z\n"), ParseError);
  EXPECT_THROW(parse_monomial_ideal("x^2\n"), ParseError);
  EXPECT_THROW(parse_monomial_ideal("# nothing\n"), ParseError);
}

TEST(ReesMonomial, MaximalIdealIsSegre) {
  for (long q : {1, 2, 3, 4, 8, 16})
    EXPECT_EQ(rees_monomial_colength(MonomialIdeal2D::maximal(), q, ReesMode::MaximalIdeal), segre_colength(2, 2, q));
}

TEST(ReesMonomial, CompleteIntersectionMatchesEngine) {
  for (auto [m, n] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}}) {
    const MonomialIdeal2D I({{m, 0}, {0, n}});
    const auto p = ci_rees(m, n);
    for (long q : {1, 2, 3, 4, 8})
      EXPECT_EQ(rees_monomial_colength(I, q, ReesMode::MaximalIdeal), frobenius_colength(p, q, p.effective_order()))
          << m << n << q;
  }
}

TEST(ReesMonomial, IdealPowerMatchesEngine) {
  // (I, It)^[q] in k[x,y,u,v]/(x^m v - y^n u) is (x^{mq}, y^{nq}, u^q, v^q).
  for (auto [m, n] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
    const MonomialIdeal2D I({{m, 0}, {0, n}});
    for (long q : {1, 2, 3, 4}) {
      const std::string text = "vars: x y u v\nbin: x^" + std::to_string(m) + "*v - y^" + std::to_string(n) +
                               "*u\nmono: x^" + std::to_string(m * q) + "\nmono: y^" + std::to_string(n * q) +
                               "\nmono: u^" + std::to_string(q) + "\nmono: v^" + std::to_string(q) + "\ndim: 3\n";
      const auto p = parse_presentation(text);
      const auto ord = p.effective_order();
      EXPECT_EQ(rees_monomial_colength(I, q, ReesMode::IdealPower),
                count_standard_monomials(initial_ideal(buchberger(p, ord), ord), p.nvars()))
          << m << n << q;
    }
  }
}

TEST(ReesMonomial, Limits) {
  const auto m = MonomialIdeal2D::maximal();
  const auto est_m = estimate_over([&](long q) { return rees_monomial_colength(m, q, ReesMode::MaximalIdeal); }, {8, 16, 32}, 3);
  EXPECT_TRUE(est_m.contains(c_of_d(2)));
  for (auto [mm, n] : std::vector<std::pair<long, long>>{{2, 2}, {3, 2}}) {
    const MonomialIdeal2D I({{mm, 0}, {0, n}});
    const auto est = estimate_over([&](long q) { return rees_monomial_colength(I, q, ReesMode::MaximalIdeal); }, {8, 16, 32}, 3);
    EXPECT_TRUE(est.contains(ci_rees_values(mm, n).ehk_rees)) << mm << n;
  }
  const MonomialIdeal2D I({{2, 0}, {0, 1}});
  const auto est = estimate_over([&](long q) { return rees_monomial_colength(I, q, ReesMode::IdealPower); }, {8, 16, 32}, 3);
  EXPECT_TRUE(est.contains(Rational(8, 3)));
  EXPECT_EQ(rees_monomial_job(I, ReesMode::IdealPower).target, Rational(8, 3));
}

TEST(ReesMonomial, RejectsNonPrimary) {
  EXPECT_THROW(rees_monomial_colength(MonomialIdeal2D({{1, 1}, {2, 0}}), 2, ReesMode::MaximalIdeal), DimensionError);
}

TEST(Semigroup, Validation) {
  EXPECT_THROW(Semigroup2D({{1, 1}, {2, 2}}), RankError);
  EXPECT_THROW(Semigroup2D({{1, 1}}), RankError);
  EXPECT_THROW(Semigroup2D({{1, 0}, {1, 1}}), ParameterError);
  EXPECT_THROW(Semigroup2D({{3, 0}, {1, 2}, {2, 2}, {0, 3}}), ParameterError);
  EXPECT_THROW(Semigroup2D({{0, 0}, {1, 0}, {0, 1}}), ParameterError);
  const Semigroup2D S({{0, 3}, {3, 0}, {1, 1}});
  EXPECT_EQ(S.generators(), (std::vector<Semigroup2D::Point>{{0, 3}, {1, 1}, {3, 0}}));
  EXPECT_EQ(S.index(), 3);
  EXPECT_EQ(veronese_semigroup(2).index(), 2);
  EXPECT_EQ(Semigroup2D({{1, 0}, {0, 1}}).index(), 1);
}

TEST(Semigroup, Parse) {
  const auto S = parse_semigroup("# A_2\nsg: (3,0) (1,1) (0,3)\n");
  EXPECT_EQ(S, an_semigroup(2));
  EXPECT_EQ(parse_semigroup(render_semigroup(S)), S);
  EXPECT_THROW(parse_semigroup("sg: (3,0) (1,1) junk\n"), ParseError);
  EXPECT_THROW(parse_semigroup("(3,0)\n"), ParseError);
  EXPECT_THROW(parse_semigroup("sg: (1,0) (0,1)\nsg: (1,0) (0,1)\n"), ParseError);
  EXPECT_THROW(parse_semigroup("sg: (1,1) (2,2)\n"), RankError);
}

TEST(Semigroup, OrderTable) {
  const auto S = an_semigroup(2);
  const Semigroup2D::OrderTable t(S, 12, 12);
  EXPECT_EQ(t.order(0, 0), 0);
  EXPECT_EQ(t.order(1, 1), 1);
  EXPECT_EQ(t.order(3, 3), 3);
  EXPECT_EQ(t.order(1, 0), -1);
  EXPECT_EQ(t.order(2, 2), 2);
  EXPECT_EQ(t.order(4, 1), 2);
  EXPECT_FALSE(t.contains(2, 0));
}

TEST(Semigroup, PolynomialRing) {
  const Semigroup2D S({{1, 0}, {0, 1}});
  for (long q = 1; q <= 12; ++q) {
    EXPECT_EQ(semigroup_ehk_colength(S, q), BigInt(q * q));
    EXPECT_EQ(semigroup_extrees_colength(S, q), BigInt(q * q * q));
  }
}

TEST(Semigroup, VeroneseTwoIsQuadric) {
  const auto S = veronese_semigroup(2);
  for (long q = 1; q <= 16; ++q) EXPECT_EQ(semigroup_ehk_colength(S, q), frobenius_colength(an_hypersurface(2), q, MonomialOrder::lex(3)));
  for (long q = 2; q <= 32; q *= 2) {
    EXPECT_EQ(Rational(semigroup_ehk_colength(S, q), BigInt(q * q)), Rational(3, 2));
    EXPECT_EQ(semigroup_extrees_colength(S, q), frobenius_colength(an_extrees(2), q, MonomialOrder::lex(4)));
  }
}

TEST(Semigroup, ExtendedReesMatchesBruteForce) {
  for (const auto& S : {Semigroup2D({{1, 0}, {0, 1}}), veronese_semigroup(2), veronese_semigroup(3), an_semigroup(2),
                        an_semigroup(3), Semigroup2D({{0, 3}, {1, 2}, {3, 0}}), Semigroup2D({{0, 2}, {3, 1}, {4, 0}})}) {
    for (long q : {1, 2, 3, 4, 5}) EXPECT_EQ(semigroup_extrees_colength(S, q), brute_extrees(S, q)) << render_semigroup(S) << q;
  }
}

TEST(Semigroup, ExtendedReesPiecesAreGradedLengths) {
  const auto S = an_semigroup(2);
  const long q = 4;
  const auto pieces = semigroup_extrees_pieces(S, q);
  ASSERT_FALSE(pieces.empty());
  EXPECT_GT(pieces.begin()->first, -q);
  // Negative degrees: l(A/m^{n+q}).
  for (long n = -q + 1; n < 0; ++n) {
    const auto table = S.table_for(q);
    long expected = 0;
    for (long u = 0; u <= table.width(); ++u)
      for (long v = 0; v <= table.height(); ++v) {
        const int o = table.order(u, v);
        if (o >= 0 && o < n + q) ++expected;
      }
    EXPECT_EQ(pieces.at(n), expected) << n;
  }
}

TEST(Semigroup, AnValues) {
  const std::vector<long> grid{6, 12, 24, 48};
  for (long n = 1; n <= 3; ++n) {
    const auto S = an_semigroup(n);
    const auto base = run_oracle(semigroup_job(S, SemigroupRing::Base), grid).estimate;
    const auto ext = run_oracle(semigroup_job(S, SemigroupRing::ExtendedRees), grid).estimate;
    const Rational N(n + 1);
    EXPECT_TRUE(base.contains(Rational(2) - Rational(1) / N)) << n;
    EXPECT_TRUE(ext.contains(Rational(2) - Rational(2 * (n + 2), 3 * (n + 1) * (n + 1)))) << n;
  }
}

TEST(Semigroup, ExtendedReesOfQuadric) {
  const auto est = run_oracle(semigroup_job(veronese_semigroup(2), SemigroupRing::ExtendedRees), {12, 24, 48}).estimate;
  EXPECT_EQ(est.lower, Rational(3, 2));
  EXPECT_EQ(est.upper, Rational(3, 2));
}

TEST(Criterion, Cases) {
  for (long c = 2; c <= 5; ++c) EXPECT_TRUE(equality_criterion(veronese_semigroup(c)));
  for (long n = 2; n <= 5; ++n) EXPECT_FALSE(equality_criterion(an_semigroup(n)));
  EXPECT_TRUE(equality_criterion(an_semigroup(1)));
  EXPECT_TRUE(equality_criterion(Semigroup2D({{1, 0}, {0, 1}})));
  EXPECT_TRUE(equality_criterion(Semigroup2D({{0, 2}, {3, 0}})));
  EXPECT_FALSE(equality_criterion(Semigroup2D({{0, 2}, {3, 1}, {4, 0}})));
}

TEST(Criterion, EstimatesFollowCriterion) {
  EXPECT_TRUE(compare_semigroup_estimates(veronese_semigroup(2), criterion_grid()).overlap);
  EXPECT_TRUE(compare_semigroup_estimates(veronese_semigroup(3), criterion_grid()).overlap);
  EXPECT_FALSE(compare_semigroup_estimates(an_semigroup(2), criterion_grid()).overlap);
  EXPECT_FALSE(compare_semigroup_estimates(an_semigroup(3), criterion_grid()).overlap);
}

TEST(Chain, AnEstimatesBelowTwo) {
  for (long n = 2; n <= 6; ++n) {
    const auto cmp = compare_semigroup_estimates(an_semigroup(n), {8, 16, 32});
    EXPECT_LE(cmp.base.lower, cmp.extrees.upper) << n;
    EXPECT_LE(cmp.extrees.lower, Rational(2)) << n;
  }
}

TEST(ReesBound, ReesAboveBaseMultiplicity) {
  const auto est = run_oracle(rees_monomial_job(MonomialIdeal2D::maximal(), ReesMode::MaximalIdeal), {8, 16, 32}).estimate;
  EXPECT_GE(est.upper, Rational(1));
  for (long c = 1; c <= 3; ++c) EXPECT_GE(run_oracle(veronese_rees_job(c, 2), {4, 8, 16}).estimate.upper, Rational(c));
}
