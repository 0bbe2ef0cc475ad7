#pragma once

// Named colength samplers ("presets") and the driver that turns them into
// estimates, optionally backed by the colength cache.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hkmult/cache.hpp"
#include "hkmult/closed_forms.hpp"
#include "hkmult/estimator.hpp"
#include "hkmult/lattice.hpp"
#include "hkmult/monomial_ideal.hpp"
#include "hkmult/presentation.hpp"
#include "hkmult/semigroup.hpp"

namespace hkmult {

struct OracleJob {
  std::string name;
  std::string description;
  int dimension = 1;
  /// Samples are taken at Q = scale * q.
  long scale = 1;
  std::string cache_key;
  std::function<BigInt(long q)> count;
  std::optional<Rational> target;
};

struct OracleResult {
  std::string name;
  std::string description;
  int dimension = 1;
  HKEstimate estimate;
  std::optional<Rational> target;
  std::optional<bool> target_contained;
  std::size_t cache_hits = 0;
};

inline OracleResult run_oracle(const OracleJob& job, const std::vector<long>& qs, ColengthCache* cache = nullptr) {
  const std::string hash = content_hash(job.cache_key);
  std::vector<ColengthSample> samples;
  OracleResult out;
  for (long q : qs) {
    if (q < 1) throw ParameterError("q values must be positive");
    std::optional<BigInt> count;
    if (cache) count = cache->lookup(hash, q);
    if (count) {
      ++out.cache_hits;
    } else {
      count = job.count(q);
      if (cache) cache->store(hash, q, *count);
    }
    samples.push_back({job.scale * q, *count});
  }
  out.name = job.name;
  out.description = job.description;
  out.dimension = job.dimension;
  if (samples.size() == 1) {
    // A single sample still gets an exact normalized value.
    const Rational v = normalized_sequence(samples, job.dimension).front();
    out.estimate.dimension = job.dimension;
    out.estimate.samples = samples;
    out.estimate.normalized = {v};
    out.estimate.estimate = out.estimate.lower = out.estimate.upper = v;
  } else {
    out.estimate = estimate(samples, job.dimension);
  }
  out.target = job.target;
  if (job.target) out.target_contained = out.estimate.contains(*job.target);
  return out;
}

inline OracleJob presentation_job(PresentedQuotient p, std::optional<MonomialOrder> order, std::string name,
                                  std::optional<Rational> target = std::nullopt) {
  p.validate();
  const MonomialOrder ord = order ? *order : p.effective_order();
  p.order = ord;
  OracleJob job;
  job.name = std::move(name);
  job.description = render_presentation(p);
  job.dimension = p.dimension;
  job.cache_key = "engine\n" + job.description;
  job.count = [p, ord](long q) { return frobenius_colength(p, q, ord); };
  job.target = std::move(target);
  return job;
}

inline std::string int_str(long v) { return std::to_string(v); }

/// k[x,y,z]/(xy - z^n); e_HK = 2 - 1/n.
inline PresentedQuotient an_hypersurface(long n) {
  if (n < 1) throw ParameterError("an-hypersurface needs n >= 1");
  return parse_presentation("vars: x y z\nbin: x*y - z^" + int_str(n) + "\ndim: 2\n");
}

/// k[x,y,z,w]/(xy - z^n w^{n-2}), the extended Rees algebra of the maximal ideal of xy - z^n.
inline PresentedQuotient an_extrees(long n) {
  if (n < 2) throw ParameterError("an-extrees needs n >= 2");
  std::string rhs = "z^" + int_str(n);
  if (n > 2) rhs += "*w^" + int_str(n - 2);
  return parse_presentation("vars: x y z w\nbin: x*y - " + rhs + "\ndim: 3\n");
}

/// Rees algebra of (x^m, y^n): k[x,y,u,v]/(x^m v - y^n u).
inline PresentedQuotient ci_rees(long m, long n) {
  if (m < 1 || n < 1) throw ParameterError("ci-rees needs m, n >= 1");
  return parse_presentation("vars: x y u v\nbin: x^" + int_str(m) + "*v - y^" + int_str(n) + "*u\ndim: 3\n");
}

/// Extended Rees algebra of (x^m, y^n): k[x,y,z,w,t]/(x^m - zt, y^n - wt).
inline PresentedQuotient ci_extrees(long m, long n) {
  if (m < 1 || n < 1) throw ParameterError("ci-extrees needs m, n >= 1");
  return parse_presentation("vars: x y z w t\nbin: x^" + int_str(m) + " - z*t\nbin: y^" + int_str(n) +
                            " - w*t\ndim: 3\norder: lex x>y>z>w>t\n");
}

inline OracleJob an_hypersurface_job(long n, std::optional<MonomialOrder> order = std::nullopt) {
  return presentation_job(an_hypersurface(n), order, "an-hypersurface n=" + int_str(n), conca_ehk({1, 1}, {n}));
}

inline OracleJob an_extrees_job(long n, std::optional<MonomialOrder> order = std::nullopt) {
  const Rational target = n == 2 ? conca_ehk({1, 1}, {2}) : conca_ehk({1, 1}, {n, n - 2});
  return presentation_job(an_extrees(n), order, "an-extrees n=" + int_str(n), target);
}

inline OracleJob ci_rees_job(long m, long n, std::optional<MonomialOrder> order = std::nullopt) {
  return presentation_job(ci_rees(m, n), order, "ci-rees m=" + int_str(m) + " n=" + int_str(n),
                          ci_rees_values(m, n).ehk_rees);
}

inline OracleJob ci_extrees_job(long m, long n, std::optional<MonomialOrder> order = std::nullopt) {
  return presentation_job(ci_extrees(m, n), order, "ci-extrees m=" + int_str(m) + " n=" + int_str(n),
                          ci_rees_values(m, n).ehk_extrees);
}

inline OracleJob segre_job(long c, long d) {
  SegreParams{c, d}.validate();
  OracleJob job;
  job.name = "segre c=" + int_str(c) + " d=" + int_str(d);
  job.description = "Segre product of polynomial rings in " + int_str(c) + " and " + int_str(d) + " variables";
  job.dimension = static_cast<int>(c + d - 1);
  job.cache_key = "segre " + int_str(c) + " " + int_str(d);
  job.count = [c, d](long q) { return segre_colength(c, d, q); };
  job.target = segre_ehk({c, d});
  return job;
}

inline OracleJob veronese_rees_job(long c, long d) {
  if (c < 1 || d < 2) throw ParameterError("veronese-rees needs c >= 1, d >= 2");
  OracleJob job;
  job.name = "veronese-rees c=" + int_str(c) + " d=" + int_str(d);
  job.description = "Rees algebra of the maximal ideal of the degree-" + int_str(c) + " Veronese subring of k[x_1..x_" +
                    int_str(d) + "], sampled at Q = " + int_str(c) + "q";
  job.dimension = static_cast<int>(d + 1);
  job.scale = c;
  job.cache_key = "veronese-rees " + int_str(c) + " " + int_str(d);
  job.count = [c, d](long q) { return veronese_rees_colength(c, d, q); };
  job.target = veronese_rees_ehk_general({c, d});
  return job;
}

enum class SemigroupRing { Base, ExtendedRees };

inline OracleJob semigroup_job(const Semigroup2D& S, SemigroupRing ring, std::optional<Rational> target = std::nullopt) {
  OracleJob job;
  const bool ext = ring == SemigroupRing::ExtendedRees;
  job.name = ext ? "semigroup extrees" : "semigroup base";
  job.description = render_semigroup(S);
  job.dimension = ext ? 3 : 2;
  job.cache_key = (ext ? "semigroup-extrees\n" : "semigroup\n") + job.description;
  if (ext)
    job.count = [S](long q) { return semigroup_extrees_colength(S, q); };
  else
    job.count = [S](long q) { return semigroup_ehk_colength(S, q); };
  job.target = std::move(target);
  return job;
}

inline std::string render_monomial_ideal(const MonomialIdeal2D& I) {
  std::string out;
  for (const auto& [a, b] : I.generators()) {
    if (!out.empty()) out += ", ";
    out += ExponentVector(std::vector<int>{static_cast<int>(a), static_cast<int>(b)}).render({"x", "y"});
  }
  return "(" + out + ")";
}

/// Ideal-power mode has the known limit c(2) e(I).
inline OracleJob rees_monomial_job(const MonomialIdeal2D& I, ReesMode mode) {
  I.require_primary();
  OracleJob job;
  const bool power = mode == ReesMode::IdealPower;
  job.name = power ? "rees-monomial ideal-power" : "rees-monomial maximal-ideal";
  job.description = "Rees algebra of " + render_monomial_ideal(I) + " over k[x,y]";
  job.dimension = 3;
  job.cache_key = job.name + "\n" + render_monomial_ideal(I);
  job.count = [I, mode](long q) { return rees_monomial_colength(I, q, mode); };
  if (power) job.target = c_of_d(2) * Rational(I.multiplicity());
  return job;
}

/// Leading terms of the basis displayed for the extended Rees algebra of
/// (x^m, y^n) with lex x>y>z>w>t, minimalized. The last generator is
/// (wt)^{c+1} or (wt)^{d+1} depending on `use_d`.
inline std::vector<ExponentVector> ci_extrees_displayed_leads(long m, long n, long q, bool use_d) {
  const long c = q / m;
  const long d = q / n;
  auto mono = [](int x, int y, int z, int w, int t) { return ExponentVector(std::vector<int>{x, y, z, w, t}); };
  const auto Q = static_cast<int>(q);
  const auto C = static_cast<int>(c);
  const auto D = static_cast<int>(d);
  const auto last = static_cast<int>((use_d ? d : c) + 1);
  std::vector<ExponentVector> gens{
      mono(static_cast<int>(m), 0, 0, 0, 0), mono(0, static_cast<int>(n), 0, 0, 0),
      mono(0, 0, Q, 0, 0),                  mono(0, 0, 0, Q, 0),
      mono(0, 0, 0, 0, Q),                  mono(static_cast<int>(q - c * m), 0, C, 0, C),
      mono(0, static_cast<int>(q - d * n), 0, D, D), mono(0, 0, C + 1, 0, C + 1),
      mono(0, 0, 0, last, last)};
  std::vector<ExponentVector> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j || !gens[j].divides(gens[i])) continue;
      redundant = gens[j] != gens[i] || j < i;
    }
    if (!redundant) minimal.push_back(gens[i]);
  }
  std::sort(minimal.begin(), minimal.end(), std::greater<>());
  return minimal;
}

struct DisplayedBasisComparison {
  long m = 0, n = 0, q = 0;
  std::vector<ExponentVector> computed;
  std::vector<ExponentVector> reading_c;
  std::vector<ExponentVector> reading_d;
  bool matches_c = false;
  bool matches_d = false;
};

inline DisplayedBasisComparison compare_ci_extrees_basis(long m, long n, long q) {
  DisplayedBasisComparison out{m, n, q, {}, {}, {}, false, false};
  const auto p = ci_extrees(m, n);
  const auto ord = p.effective_order();
  out.computed = initial_ideal(frobenius_basis(p, q, ord), ord);
  std::sort(out.computed.begin(), out.computed.end(), std::greater<>());
  out.reading_c = ci_extrees_displayed_leads(m, n, q, false);
  out.reading_d = ci_extrees_displayed_leads(m, n, q, true);
  out.matches_c = out.computed == out.reading_c;
  out.matches_d = out.computed == out.reading_d;
  return out;
}

}  // namespace hkmult
