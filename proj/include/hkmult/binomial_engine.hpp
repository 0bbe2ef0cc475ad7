#pragma once

// Buchberger's algorithm restricted to pure-difference binomials and
// monomials. Every S-pair and every reduction step of such a system produces
// again a monomial or a pure difference, so coefficients never leave {+1, -1}
// and no coefficient field is materialized. Counts of standard monomials are
// therefore the same in every characteristic.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hkmult/errors.hpp"
#include "hkmult/monomial.hpp"
#include "hkmult/rational.hpp"

namespace hkmult {

/// plus - minus, both coefficients implicit.
struct PureDifferenceBinomial {
  ExponentVector plus;
  ExponentVector minus;
};

/// A monomial, or a pure-difference binomial written lead - tail with
/// lead > tail in the order it was built for.
class BasisElement {
 public:
  static BasisElement monomial(ExponentVector m) { return BasisElement(std::move(m), std::nullopt); }

  /// a - b (or b - a), sign-normalized so the larger term leads.
  /// Returns nullopt when a == b, i.e. the difference is zero.
  static std::optional<BasisElement> difference(ExponentVector a, ExponentVector b, const MonomialOrder& order) {
    const int cmp = order.compare(a, b);
    if (cmp == 0) return std::nullopt;
    if (cmp < 0) std::swap(a, b);
    return BasisElement(std::move(a), std::move(b));
  }

  const ExponentVector& lead() const { return lead_; }
  const std::optional<ExponentVector>& tail() const { return tail_; }
  bool is_monomial() const { return !tail_.has_value(); }

  std::string render(const std::vector<std::string>& names) const {
    if (is_monomial()) return lead_.render(names);
    return lead_.render(names) + " - " + tail_->render(names);
  }

  friend bool operator==(const BasisElement&, const BasisElement&) = default;

 private:
  BasisElement(ExponentVector lead, std::optional<ExponentVector> tail)
      : lead_(std::move(lead)), tail_(std::move(tail)) {}

  ExponentVector lead_;
  std::optional<ExponentVector> tail_;
};

struct EngineStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t reductions = 0;
  std::size_t closure_checks = 0;
};

struct GroebnerBasis {
  MonomialOrder order;
  std::vector<BasisElement> elements;
  EngineStats stats;
};

namespace detail {

inline void check_closure(const BasisElement& e, const MonomialOrder& order, EngineStats* stats) {
  if (stats) ++stats->closure_checks;
  if (e.is_monomial()) return;
  const auto& tail = *e.tail();
  if (tail.size() != e.lead().size())
    throw InternalInvariantError("binomial terms live in different polynomial rings");
  if (!order.greater(e.lead(), tail))
    throw InternalInvariantError("pure difference is not sign-normalized: " +
                                 std::to_string(order.compare(e.lead(), tail)));
}

inline const BasisElement* find_reducer(const ExponentVector& term, const std::vector<BasisElement>& basis,
                                        const BasisElement* skip = nullptr) {
  for (const auto& g : basis) {
    if (&g == skip) continue;
    if (g.lead().divides(term)) return &g;
  }
  return nullptr;
}

// Rewrites `term` by g: deleted (nullopt) when g is a monomial, otherwise
// replaced by (term / lead(g)) * tail(g).
inline std::optional<ExponentVector> rewrite(const ExponentVector& term, const BasisElement& g) {
  if (g.is_monomial()) return std::nullopt;
  return (term / g.lead()) * *g.tail();
}

}  // namespace detail

/// Full normal form of `element` modulo `basis`: no term of the result is
/// divisible by any leading term of `basis`. nullopt stands for zero.
inline std::optional<BasisElement> reduce(const BasisElement& element, const std::vector<BasisElement>& basis,
                                          const MonomialOrder& order, EngineStats* stats = nullptr) {
  std::optional<ExponentVector> first = element.lead();
  std::optional<ExponentVector> second = element.tail();
  for (;;) {
    bool changed = false;
    for (auto* term : {&first, &second}) {
      if (!term->has_value()) continue;
      const BasisElement* g = detail::find_reducer(**term, basis);
      if (!g) continue;
      if (stats) ++stats->reductions;
      *term = detail::rewrite(**term, *g);
      changed = true;
      break;
    }
    if (!first && !second) return std::nullopt;
    if (first && second && *first == *second) return std::nullopt;
    if (!changed) break;
  }
  std::optional<BasisElement> out;
  if (first && second) {
    out = BasisElement::difference(*first, *second, order);
  } else {
    out = BasisElement::monomial(first ? *first : *second);
  }
  detail::check_closure(*out, order, stats);
  return out;
}

/// S-pair of two basis elements; nullopt when it vanishes identically.
inline std::optional<BasisElement> s_pair(const BasisElement& f, const BasisElement& g, const MonomialOrder& order) {
  if (f.is_monomial() && g.is_monomial()) return std::nullopt;
  const ExponentVector l = lcm(f.lead(), g.lead());
  if (f.is_monomial()) return BasisElement::monomial((l / g.lead()) * *g.tail());
  if (g.is_monomial()) return BasisElement::monomial((l / f.lead()) * *f.tail());
  return BasisElement::difference((l / f.lead()) * *f.tail(), (l / g.lead()) * *g.tail(), order);
}

namespace detail {

// Minimalizes leading terms and tail-reduces, giving the unique reduced basis.
inline std::vector<BasisElement> auto_reduce(std::vector<BasisElement> basis, const MonomialOrder& order,
                                             EngineStats* stats) {
  std::stable_sort(basis.begin(), basis.end(), [&](const BasisElement& a, const BasisElement& b) {
    return order.compare(a.lead(), b.lead()) < 0;
  });
  std::vector<BasisElement> minimal;
  for (const auto& g : basis) {
    bool redundant = false;
    for (const auto& k : minimal) {
      if (k.lead().divides(g.lead())) { redundant = true; break; }
    }
    if (!redundant) minimal.push_back(g);
  }

  std::vector<BasisElement> reduced;
  reduced.reserve(minimal.size());
  for (const auto& g : minimal) {
    if (g.is_monomial()) { reduced.push_back(g); continue; }
    std::optional<ExponentVector> tail = *g.tail();
    while (tail) {
      const BasisElement* r = find_reducer(*tail, minimal, &g);
      if (!r) break;
      if (stats) ++stats->reductions;
      tail = rewrite(*tail, *r);
    }
    if (!tail) {
      reduced.push_back(BasisElement::monomial(g.lead()));
    } else {
      auto e = BasisElement::difference(g.lead(), *tail, order);
      if (!e || !(e->lead() == g.lead())) throw InternalInvariantError("tail reduction changed the leading term");
      check_closure(*e, order, stats);
      reduced.push_back(*e);
    }
  }
  std::sort(reduced.begin(), reduced.end(), [&](const BasisElement& a, const BasisElement& b) {
    return order.compare(a.lead(), b.lead()) > 0;
  });
  return reduced;
}

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `generators`.
///
/// Pairs are processed in order of increasing lcm degree; pairs with coprime
/// leading terms are discarded (Buchberger's first criterion).
inline GroebnerBasis buchberger(const std::vector<BasisElement>& generators, const MonomialOrder& order) {
  GroebnerBasis out;
  out.order = order;
  EngineStats& stats = out.stats;
  std::vector<BasisElement> basis;

  using Pair = std::tuple<long, std::size_t, std::size_t>;
  std::set<Pair> queue;

  auto add = [&](BasisElement h) {
    detail::check_closure(h, order, &stats);
    const std::size_t idx = basis.size();
    basis.push_back(std::move(h));
    const auto& nh = basis.back();
    for (std::size_t i = 0; i < idx; ++i) {
      const auto& gi = basis[i];
      if (gi.is_monomial() && nh.is_monomial()) continue;
      if (gi.lead().coprime(nh.lead())) { ++stats.pairs_skipped_coprime; continue; }
      ++stats.pairs_created;
      queue.emplace(lcm(gi.lead(), nh.lead()).degree(), i, idx);
    }
  };

  for (const auto& g : generators) {
    if (auto r = reduce(g, basis, order, &stats)) add(std::move(*r));
  }
  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    auto s = s_pair(basis[i], basis[j], order);
    if (!s) continue;
    detail::check_closure(*s, order, &stats);
    if (auto r = reduce(*s, basis, order, &stats)) add(std::move(*r));
  }
  out.elements = detail::auto_reduce(std::move(basis), order, &stats);
  return out;
}

/// Minimal generators of the initial ideal of a Groebner basis, sorted
/// decreasingly in the order.
inline std::vector<ExponentVector> initial_ideal(const GroebnerBasis& gb, const MonomialOrder& order) {
  std::vector<ExponentVector> leads;
  leads.reserve(gb.elements.size());
  for (const auto& e : gb.elements) {
    if (e.is_monomial() || order.greater(e.lead(), *e.tail())) leads.push_back(e.lead());
    else leads.push_back(*e.tail());
  }
  std::vector<ExponentVector> minimal;
  for (std::size_t i = 0; i < leads.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < leads.size() && !redundant; ++j) {
      if (i == j || !leads[j].divides(leads[i])) continue;
      // Equal generators: keep the first copy only.
      redundant = !(leads[j] == leads[i]) || j < i;
    }
    if (!redundant) minimal.push_back(leads[i]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const ExponentVector& a, const ExponentVector& b) { return order.greater(a, b); });
  return minimal;
}

namespace detail {

inline std::uint64_t count_box(const std::vector<const ExponentVector*>& active, std::size_t var,
                               const std::vector<int>& bounds) {
  const std::size_t n = bounds.size();
  for (const auto* g : active) {
    bool rest_zero = true;
    for (std::size_t k = var; k < n && rest_zero; ++k) rest_zero = (*g)[k] == 0;
    if (rest_zero) return 0;
  }
  if (var + 1 == n) {
    int bound = bounds[var];
    for (const auto* g : active) bound = std::min(bound, (*g)[var]);
    return static_cast<std::uint64_t>(bound);
  }
  std::uint64_t total = 0;
  std::vector<const ExponentVector*> next;
  next.reserve(active.size());
  for (int e = 0; e < bounds[var]; ++e) {
    next.clear();
    for (const auto* g : active)
      if ((*g)[var] <= e) next.push_back(g);
    total += count_box(next, var + 1, bounds);
  }
  return total;
}

}  // namespace detail

/// Number of monomials in `nvars` variables divisible by none of `gens`.
///
/// Requires a pure power of every variable among the generators; traverses
/// the bounding box they define, pruning by divisibility.
inline BigInt count_standard_monomials(const std::vector<ExponentVector>& gens, std::size_t nvars) {
  for (const auto& g : gens) {
    if (g.size() != nvars) throw ParameterError("generator has the wrong number of variables");
    if (g.degree() == 0) return 0;
  }
  std::vector<int> bounds(nvars, -1);
  for (const auto& g : gens) {
    const int v = g.pure_power_variable();
    if (v < 0) continue;
    const int e = g[static_cast<std::size_t>(v)];
    if (bounds[v] < 0 || e < bounds[v]) bounds[v] = e;
  }
  long double box = 1;
  for (std::size_t v = 0; v < nvars; ++v) {
    if (bounds[v] < 0)
      throw DimensionError("quotient is not Artinian: no pure power of variable " + std::to_string(v));
    box *= bounds[v];
  }
  if (box > 9.0e18L) throw ParameterError("standard-monomial box too large to enumerate");
  if (nvars == 0) return 1;
  std::vector<const ExponentVector*> active;
  active.reserve(gens.size());
  for (const auto& g : gens) active.push_back(&g);
  const std::uint64_t n = detail::count_box(active, 0, bounds);
  return BigInt(std::to_string(n));
}

}  // namespace hkmult
