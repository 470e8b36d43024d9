#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mvg/mv_sets.hpp"

namespace mvg {

/// A formal A-context (A, X, I): objects, attributes and an A-valued incidence.
class APolarity {
 public:
  explicit APolarity(ARelation incidence) : incidence_(std::move(incidence)) {}

  const ARelation& incidence() const noexcept { return incidence_; }
  const AlgebraPtr& algebra() const noexcept { return incidence_.algebra(); }
  const DomainPtr& objects() const noexcept { return incidence_.row_domain(); }
  const DomainPtr& attributes() const noexcept { return incidence_.col_domain(); }

  bool same_as(const APolarity& o) const { return this == &o || incidence_ == o.incidence_; }

 private:
  ARelation incidence_;
};

/// f^up = I^(1)[f], over the attributes.
inline AValuedSet up(const APolarity& P, const AValuedSet& f) { return lift1(P.incidence(), f); }
/// u^down = I^(0)[u], over the objects.
inline AValuedSet down(const APolarity& P, const AValuedSet& u) { return lift0(P.incidence(), u); }

inline AValuedSet close_extent(const APolarity& P, const AValuedSet& f) { return down(P, up(P, f)); }
inline AValuedSet close_intent(const APolarity& P, const AValuedSet& u) { return up(P, down(P, u)); }

inline bool is_stable_extent(const APolarity& P, const AValuedSet& f) { return close_extent(P, f) == f; }
inline bool is_stable_intent(const APolarity& P, const AValuedSet& u) { return close_intent(P, u) == u; }

class Concept;
Concept concept_of_intent(const APolarity& P, const AValuedSet& u);
Concept concept_of_extent(const APolarity& P, const AValuedSet& f);

/// A Galois-stable pair (extent, intent). Only the factory functions below
/// can build one, so every Concept in circulation is stable. Equality is
/// intent equality.
class Concept {
 public:
  const AValuedSet& extent() const noexcept { return extent_; }
  const AValuedSet& intent() const noexcept { return intent_; }

  friend bool operator==(const Concept& a, const Concept& b) { return a.intent_ == b.intent_; }

  /// Builds (f, u) after verifying f^up = u and u^down = f.
  static Concept checked(const APolarity& P, AValuedSet f, AValuedSet u) {
    if (!(up(P, f) == u) || !(down(P, u) == f))
      throw Error(ErrorCode::Unstable, "pair is not a formal concept of the polarity");
    return Concept(std::move(f), std::move(u));
  }

  /// Pairs whose stability follows from a precondition the caller has
  /// already established (compatibility of the relations involved).
  static Concept assume_stable(AValuedSet f, AValuedSet u) { return Concept(std::move(f), std::move(u)); }

 private:
  Concept(AValuedSet f, AValuedSet u) : extent_(std::move(f)), intent_(std::move(u)) {}

  AValuedSet extent_;
  AValuedSet intent_;
};

inline Concept concept_of_intent(const APolarity& P, const AValuedSet& u) {
  AValuedSet closed = close_intent(P, u);
  AValuedSet ext = down(P, closed);
  return Concept::assume_stable(std::move(ext), std::move(closed));
}

inline Concept concept_of_extent(const APolarity& P, const AValuedSet& f) {
  AValuedSet closed = close_extent(P, f);
  AValuedSet in = up(P, closed);
  return Concept::assume_stable(std::move(closed), std::move(in));
}

inline Concept top_concept(const APolarity& P) {
  return concept_of_extent(P, AValuedSet::constant(P.algebra(), P.objects(), P.algebra()->top()));
}

inline Concept bottom_concept(const APolarity& P) {
  return concept_of_intent(P, AValuedSet::constant(P.algebra(), P.attributes(), P.algebra()->top()));
}

inline bool concept_leq(const Concept& c, const Concept& d) { return subseteq(c.extent(), d.extent()); }

namespace detail {
inline void require_same_polarity(const APolarity& P, const Concept& c) {
  if (!same_domain(P.objects(), c.extent().domain()) || !same_domain(P.attributes(), c.intent().domain()))
    throw Error(ErrorCode::IndexMismatch, "concept does not belong to this polarity");
}
}  // namespace detail

inline Concept concept_meet(const APolarity& P, const Concept& c, const Concept& d) {
  detail::require_same_polarity(P, c);
  detail::require_same_polarity(P, d);
  AValuedSet ext = pointwise_meet(c.extent(), d.extent());
  AValuedSet in = up(P, ext);
  return Concept::assume_stable(std::move(ext), std::move(in));
}

inline Concept concept_join(const APolarity& P, const Concept& c, const Concept& d) {
  detail::require_same_polarity(P, c);
  detail::require_same_polarity(P, d);
  AValuedSet in = pointwise_meet(c.intent(), d.intent());
  AValuedSet ext = down(P, in);
  return Concept::assume_stable(std::move(ext), std::move(in));
}

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// |base|^exponent, saturating at uint64 max.
inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

/// Calls fn on every A-subset of dom, in odometer order (last index fastest).
template <class Fn>
void for_each_subset(const AlgebraPtr& alg, const DomainPtr& dom, Fn&& fn) {
  const std::size_t n = alg->size(), m = dom->size();
  std::vector<std::size_t> digits(m, 0);
  std::vector<TruthValue> vals(m, TruthValue(0));
  while (true) {
    for (std::size_t i = 0; i < m; ++i) vals[i] = TruthValue(digits[i]);
    fn(AValuedSet(alg, dom, vals));
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (++digits[i] < n) break;
      digits[i] = 0;
      if (i == 0) return;
    }
    if (m == 0) return;
  }
}

/// All formal concepts, found by testing every A-subset of the attributes
/// for stability. Sorted along a linear extension of the concept order
/// (bottom first).
inline std::vector<Concept> enumerate_concepts(const APolarity& P, std::uint64_t budget = kDefaultBudget) {
  const std::uint64_t space = saturating_pow(P.algebra()->size(), P.attributes()->size());
  if (space > budget) throw BudgetError(space, budget, "concept enumeration");

  std::vector<Concept> out;
  for_each_subset(P.algebra(), P.attributes(), [&](const AValuedSet& u) {
    AValuedSet ext = down(P, u);
    if (up(P, ext) == u) out.push_back(Concept::assume_stable(std::move(ext), u));
  });

  const TruthAlgebra& A = *P.algebra();
  auto rank = [&](const Concept& c) {
    std::size_t r = 0;
    for (TruthValue v : c.extent().values()) r += A.height(v);
    return r;
  };
  std::vector<std::pair<std::size_t, std::size_t>> keys;
  for (std::size_t i = 0; i < out.size(); ++i) keys.emplace_back(rank(out[i]), i);
  std::stable_sort(keys.begin(), keys.end(), [&](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    auto ex = out[x.second].extent().values(), ey = out[y.second].extent().values();
    return std::lexicographical_compare(ex.begin(), ex.end(), ey.begin(), ey.end(),
                                        [](TruthValue a, TruthValue b) { return a.index() < b.index(); });
  });
  std::vector<Concept> sorted;
  sorted.reserve(out.size());
  for (const auto& k : keys) sorted.push_back(out[k.second]);
  return sorted;
}

// ---------------------------------------------------------------------------
// Compatibility reports, shared with the graph-level checks.

struct CompatibilityFailure {
  std::string family;          // which lifted singleton family
  std::vector<TruthValue> values;  // the singleton's value, then any value coordinate of its point
  std::string element;         // label of the singleton's point
  std::string point;           // label of a point where the inclusion/stability fails
};

struct CompatibilityReport {
  std::vector<CompatibilityFailure> failures;
  std::size_t instances = 0;

  bool ok() const noexcept { return failures.empty(); }
  void merge(CompatibilityReport other) {
    instances += other.instances;
    for (auto& f : other.failures) failures.push_back(std::move(f));
  }
};

class CompatibilityError : public Error {
 public:
  CompatibilityError(const std::string& context, CompatibilityReport report)
      : Error(ErrorCode::Incompatible, describe(context, report)), report_(std::move(report)) {}
  const CompatibilityReport& report() const noexcept { return report_; }

 private:
  static std::string describe(const std::string& context, const CompatibilityReport& r) {
    std::string msg = context + ": " + std::to_string(r.failures.size()) + " compatibility failure(s)";
    if (!r.failures.empty()) {
      const auto& f = r.failures.front();
      msg += ", first in " + f.family + " at singleton " + f.element + " (fails at " + f.point + ")";
    }
    return msg;
  }
  CompatibilityReport report_;
};

namespace detail {
// First index where g is not <= f, i.e. where the inclusion closure(f) <= f breaks.
inline std::optional<std::size_t> first_excess(const AValuedSet& closure, const AValuedSet& f) {
  const TruthAlgebra& A = *f.algebra();
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!A.leq(closure[i], f[i])) return i;
  return std::nullopt;
}
}  // namespace detail

/// I-compatibility of (Rbox : A x X, Rdia : X x A): all four lifted singleton
/// families must be Galois-stable.
inline CompatibilityReport check_I_compatibility(const APolarity& P, const ARelation& Rbox, const ARelation& Rdia) {
  const AlgebraPtr& alg = P.algebra();
  const DomainPtr& objs = P.objects();
  const DomainPtr& attrs = P.attributes();
  if (!same_domain(Rbox.row_domain(), objs) || !same_domain(Rbox.col_domain(), attrs))
    throw Error(ErrorCode::IndexMismatch, "Rbox must be a relation objects x attributes");
  if (!same_domain(Rdia.row_domain(), attrs) || !same_domain(Rdia.col_domain(), objs))
    throw Error(ErrorCode::IndexMismatch, "Rdia must be a relation attributes x objects");

  CompatibilityReport report;
  auto note = [&](const char* family, TruthValue alpha, const std::string& element, const AValuedSet& s,
                  bool extent_side) {
    ++report.instances;
    AValuedSet closed = extent_side ? close_extent(P, s) : close_intent(P, s);
    if (auto bad = detail::first_excess(closed, s))
      report.failures.push_back({family, {alpha}, element, s.domain()->label(*bad)});
  };
  for (std::size_t a = 0; a < alg->size(); ++a) {
    TruthValue alpha(a);
    for (std::size_t x = 0; x < attrs->size(); ++x) {
      note("Rbox(0)[{a/x}]", alpha, attrs->label(x), lift0(Rbox, singleton(alg, attrs, alpha, x)), true);
      note("Rdia(1)[{a/x}]", alpha, attrs->label(x), lift1(Rdia, singleton(alg, attrs, alpha, x)), true);
    }
    for (std::size_t o = 0; o < objs->size(); ++o) {
      note("Rbox(1)[{a/o}]", alpha, objs->label(o), lift1(Rbox, singleton(alg, objs, alpha, o)), false);
      note("Rdia(0)[{a/o}]", alpha, objs->label(o), lift0(Rdia, singleton(alg, objs, alpha, o)), false);
    }
  }
  return report;
}

enum class Checking { Enforce, Skip };

/// (P, Rbox, Rdia) with I-compatible relations. Construction runs
/// check_I_compatibility unless Checking::Skip is passed.
class EnrichedAPolarity {
 public:
  EnrichedAPolarity(APolarity base, ARelation rbox, ARelation rdia, Checking checking = Checking::Enforce)
      : base_(std::move(base)), rbox_(std::move(rbox)), rdia_(std::move(rdia)) {
    if (checking == Checking::Enforce) {
      auto report = check_I_compatibility(base_, rbox_, rdia_);
      if (!report.ok()) throw CompatibilityError("enriched A-polarity", std::move(report));
    }
  }

  const APolarity& base() const noexcept { return base_; }
  const ARelation& rbox() const noexcept { return rbox_; }
  const ARelation& rdia() const noexcept { return rdia_; }

 private:
  APolarity base_;
  ARelation rbox_, rdia_;
};

inline CompatibilityReport check_I_compatibility(const EnrichedAPolarity& EP) {
  return check_I_compatibility(EP.base(), EP.rbox(), EP.rdia());
}

/// [Rbox]c = (Rbox^(0)[intent], (Rbox^(0)[intent])^up).
inline Concept box_op(const EnrichedAPolarity& EP, const Concept& c) {
  detail::require_same_polarity(EP.base(), c);
  AValuedSet ext = lift0(EP.rbox(), c.intent());
  AValuedSet in = up(EP.base(), ext);
  return Concept::assume_stable(std::move(ext), std::move(in));
}

/// <Rdia>c = ((Rdia^(0)[extent])^down, Rdia^(0)[extent]).
inline Concept dia_op(const EnrichedAPolarity& EP, const Concept& c) {
  detail::require_same_polarity(EP.base(), c);
  AValuedSet in = lift0(EP.rdia(), c.extent());
  AValuedSet ext = down(EP.base(), in);
  return Concept::assume_stable(std::move(ext), std::move(in));
}

}  // namespace mvg
