#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mvg/error.hpp"

namespace mvg {

/// An element of a finite truth-value algebra, identified by its position in
/// the algebra's carrier. Positions carry no order of their own: compare
/// values through TruthAlgebra::leq.
class TruthValue {
 public:
  constexpr TruthValue() = default;
  constexpr explicit TruthValue(std::size_t index) : index_(static_cast<std::uint16_t>(index)) {}

  constexpr std::size_t index() const noexcept { return index_; }

  friend constexpr bool operator==(TruthValue, TruthValue) = default;

 private:
  std::uint16_t index_ = 0;
};

enum class AlgebraKind { Lukasiewicz, Goedel, Table };

/// A finite commutative residuated lattice (D, 1, 0, meet, join, otimes, ->).
///
/// All operations are precomputed into dense tables at construction, so every
/// operation is a lookup. Chain families store element k as the exact
/// fraction k/(n-1); no floating point is involved anywhere.
class TruthAlgebra {
 public:
  struct Tables {
    std::vector<std::string> carrier;
    std::vector<std::vector<bool>> leq;
    std::vector<std::vector<std::size_t>> otimes;
    std::vector<std::vector<std::size_t>> residuum;
  };

  /// Builds the algebra without running validate_algebra. The order must be a
  /// bounded lattice (meets and joins are derived from it); nothing else is
  /// checked. Use make_table_algebra for user input.
  static std::shared_ptr<const TruthAlgebra> from_tables_unchecked(Tables tables,
                                                                   AlgebraKind kind = AlgebraKind::Table,
                                                                   std::size_t denominator = 0);

  std::size_t size() const noexcept { return n_; }
  AlgebraKind kind() const noexcept { return kind_; }
  /// Denominator of the exact fractions for chain families, 0 for table algebras.
  std::size_t denominator() const noexcept { return denominator_; }
  bool is_chain() const noexcept { return chain_; }

  TruthValue bottom() const noexcept { return bottom_; }
  TruthValue top() const noexcept { return top_; }
  TruthValue value(std::size_t index) const;

  bool leq(TruthValue a, TruthValue b) const { return leq_[at(a, b)]; }
  TruthValue meet(TruthValue a, TruthValue b) const { return meet_[at(a, b)]; }
  TruthValue join(TruthValue a, TruthValue b) const { return join_[at(a, b)]; }
  TruthValue otimes(TruthValue a, TruthValue b) const { return otimes_[at(a, b)]; }
  TruthValue implies(TruthValue a, TruthValue b) const { return residuum_[at(a, b)]; }

  /// Length of the longest chain from bottom to v; strictly monotone in the
  /// lattice order, so sorting by it yields a linear extension.
  std::size_t height(TruthValue v) const { return height_[v.index()]; }

  std::string format(TruthValue v) const;
  std::optional<TruthValue> parse(std::string_view text) const;

  const std::vector<std::string>& carrier_names() const noexcept { return names_; }

  bool same_as(const TruthAlgebra& other) const;

 private:
  TruthAlgebra() = default;

  std::size_t at(TruthValue a, TruthValue b) const { return a.index() * n_ + b.index(); }

  std::size_t n_ = 0;
  AlgebraKind kind_ = AlgebraKind::Table;
  std::size_t denominator_ = 0;
  bool chain_ = false;
  TruthValue bottom_;
  TruthValue top_;
  std::vector<std::string> names_;
  std::vector<bool> leq_;
  std::vector<TruthValue> meet_, join_, otimes_, residuum_;
  std::vector<std::size_t> height_;
};

using AlgebraPtr = std::shared_ptr<const TruthAlgebra>;

inline bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

// ---------------------------------------------------------------------------
// Validation

struct LawCheck {
  std::string law;
  bool passed = true;
  std::vector<TruthValue> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<LawCheck> laws;

  bool ok() const {
    return std::all_of(laws.begin(), laws.end(), [](const LawCheck& l) { return l.passed; });
  }
  const LawCheck* first_failure() const {
    for (const auto& l : laws)
      if (!l.passed) return &l;
    return nullptr;
  }
};

class InvalidAlgebraError : public Error {
 public:
  explicit InvalidAlgebraError(ValidationReport report)
      : Error(ErrorCode::InvalidAlgebra, describe(report)), report_(std::move(report)) {}

  const ValidationReport& report() const noexcept { return report_; }

 private:
  static std::string describe(const ValidationReport& r) {
    const LawCheck* f = r.first_failure();
    return f ? "algebra violates " + f->law + ": " + f->detail : "algebra invalid";
  }
  ValidationReport report_;
};

ValidationReport validate_algebra(const TruthAlgebra& alg);

// ---------------------------------------------------------------------------
// Factories

AlgebraPtr make_lukasiewicz_chain(std::size_t n);
AlgebraPtr make_goedel_chain(std::size_t n);

/// order: pairs (lower, upper) of carrier names generating the partial order
/// (reflexive-transitive closure is taken). Tables are indexed by carrier
/// position and hold carrier names.
AlgebraPtr make_table_algebra(std::vector<std::string> carrier,
                              const std::vector<std::pair<std::string, std::string>>& order,
                              const std::vector<std::vector<std::string>>& otimes,
                              const std::vector<std::vector<std::string>>& residuum);

// ---------------------------------------------------------------------------
// Arbitrary meets and joins

/// Empty input yields top. Values whose index lies outside the carrier cannot
/// belong to this algebra and raise AlgebraMismatch.
inline TruthValue big_meet(const TruthAlgebra& alg, std::span<const TruthValue> values) {
  TruthValue acc = alg.top();
  for (TruthValue v : values) {
    if (v.index() >= alg.size())
      throw Error(ErrorCode::AlgebraMismatch, "value index " + std::to_string(v.index()) +
                                                  " outside carrier of size " + std::to_string(alg.size()));
    acc = alg.meet(acc, v);
  }
  return acc;
}

inline TruthValue big_join(const TruthAlgebra& alg, std::span<const TruthValue> values) {
  TruthValue acc = alg.bottom();
  for (TruthValue v : values) {
    if (v.index() >= alg.size())
      throw Error(ErrorCode::AlgebraMismatch, "value index " + std::to_string(v.index()) +
                                                  " outside carrier of size " + std::to_string(alg.size()));
    acc = alg.join(acc, v);
  }
  return acc;
}

// ===========================================================================
// Implementation

namespace detail {

inline std::string chain_label(std::size_t k, std::size_t d) {
  if (d == 10) {
    return std::to_string(k / 10) + "." + std::to_string(k % 10);
  }
  if (k == 0) return "0";
  if (k == d) return "1";
  return std::to_string(k) + "/" + std::to_string(d);
}

inline std::optional<std::uint64_t> parse_uint(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

// Exact rational parse of "k", "k/m" or "i.fff" into numerator/denominator.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> parse_fraction(std::string_view s) {
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = parse_uint(s.substr(0, slash));
    auto den = parse_uint(s.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return std::pair{*num, *den};
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = parse_uint(s.substr(0, dot));
    auto frac_text = s.substr(dot + 1);
    if (!whole || frac_text.empty() || frac_text.size() > 9) return std::nullopt;
    auto frac = parse_uint(frac_text);
    if (!frac) return std::nullopt;
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac_text.size(); ++i) den *= 10;
    return std::pair{*whole * den + *frac, den};
  }
  auto whole = parse_uint(s);
  if (!whole) return std::nullopt;
  return std::pair{*whole, std::uint64_t{1}};
}

inline std::vector<std::vector<std::size_t>> chain_table(std::size_t n, auto op) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = op(a, b);
  return t;
}

inline std::vector<std::string> chain_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back(chain_label(k, n - 1));
  return names;
}

inline std::vector<std::vector<bool>> chain_order(std::size_t n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = a <= b;
  return leq;
}

}  // namespace detail

inline TruthValue TruthAlgebra::value(std::size_t index) const {
  if (index >= n_)
    throw Error(ErrorCode::AlgebraMismatch,
                "value index " + std::to_string(index) + " outside carrier of size " + std::to_string(n_));
  return TruthValue(index);
}

inline std::string TruthAlgebra::format(TruthValue v) const { return names_.at(v.index()); }

inline std::optional<TruthValue> TruthAlgebra::parse(std::string_view text) const {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  for (std::size_t i = 0; i < n_; ++i)
    if (names_[i] == text) return TruthValue(i);
  if (denominator_ == 0) return std::nullopt;
  auto frac = detail::parse_fraction(text);
  if (!frac) return std::nullopt;
  auto [num, den] = *frac;
  // k/d' == m/denominator_  <=>  k * denominator_ == m * d'
  std::uint64_t scaled = num * denominator_;
  if (scaled % den != 0) return std::nullopt;
  std::uint64_t m = scaled / den;
  if (m > denominator_) return std::nullopt;
  return TruthValue(m);
}

inline bool TruthAlgebra::same_as(const TruthAlgebra& o) const {
  return n_ == o.n_ && leq_ == o.leq_ && otimes_ == o.otimes_ && residuum_ == o.residuum_ &&
         names_ == o.names_;
}

inline std::shared_ptr<const TruthAlgebra> TruthAlgebra::from_tables_unchecked(Tables t, AlgebraKind kind,
                                                                              std::size_t denominator) {
  const std::size_t n = t.carrier.size();
  if (n == 0) throw Error(ErrorCode::InvalidSize, "carrier must be nonempty");
  auto square = [n](const auto& table) {
    return table.size() == n &&
           std::all_of(table.begin(), table.end(), [n](const auto& row) { return row.size() == n; });
  };
  if (!square(t.leq) || !square(t.otimes) || !square(t.residuum))
    throw Error(ErrorCode::InvalidSize, "operation tables must be " + std::to_string(n) + "x" + std::to_string(n));

  auto failure = [&](std::string law, std::vector<std::size_t> w, std::string detail) {
    ValidationReport r;
    LawCheck c{std::move(law), false, {}, std::move(detail)};
    for (auto i : w) c.witness.emplace_back(i);
    r.laws.push_back(std::move(c));
    return InvalidAlgebraError(std::move(r));
  };

  // Partial order: reflexive, antisymmetric, transitive.
  for (std::size_t a = 0; a < n; ++a) {
    if (!t.leq[a][a]) throw failure("partial-order", {a}, t.carrier[a] + " is not <= itself");
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && t.leq[a][b] && t.leq[b][a])
        throw failure("partial-order", {a, b}, t.carrier[a] + " and " + t.carrier[b] + " are mutually <=");
      for (std::size_t c = 0; c < n; ++c)
        if (t.leq[a][b] && t.leq[b][c] && !t.leq[a][c])
          throw failure("partial-order", {a, b, c}, "order is not transitive");
    }
    for (std::size_t b = 0; b < n; ++b)
      if (t.otimes[a][b] >= n || t.residuum[a][b] >= n)
        throw failure("closure", {a, b}, "table entry outside the carrier");
  }

  auto alg = std::shared_ptr<TruthAlgebra>(new TruthAlgebra());
  alg->n_ = n;
  alg->kind_ = kind;
  alg->denominator_ = denominator;
  alg->names_ = std::move(t.carrier);
  alg->leq_.assign(n * n, false);
  alg->meet_.resize(n * n);
  alg->join_.resize(n * n);
  alg->otimes_.resize(n * n);
  alg->residuum_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      alg->leq_[a * n + b] = t.leq[a][b];
      alg->otimes_[a * n + b] = TruthValue(t.otimes[a][b]);
      alg->residuum_[a * n + b] = TruthValue(t.residuum[a][b]);
    }

  // Meets and joins from the order: the unique greatest lower / least upper bound.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::optional<std::size_t> glb, lub;
      for (std::size_t c = 0; c < n; ++c) {
        if (t.leq[c][a] && t.leq[c][b] && (!glb || t.leq[*glb][c])) glb = c;
        if (t.leq[a][c] && t.leq[b][c] && (!lub || t.leq[c][*lub])) lub = c;
      }
      bool glb_ok = glb.has_value(), lub_ok = lub.has_value();
      for (std::size_t c = 0; c < n && (glb_ok || lub_ok); ++c) {
        if (glb_ok && t.leq[c][a] && t.leq[c][b] && !t.leq[c][*glb]) glb_ok = false;
        if (lub_ok && t.leq[a][c] && t.leq[b][c] && !t.leq[*lub][c]) lub_ok = false;
      }
      if (!glb_ok) throw failure("lattice", {a, b}, alg->names_[a] + " and " + alg->names_[b] + " have no meet");
      if (!lub_ok) throw failure("lattice", {a, b}, alg->names_[a] + " and " + alg->names_[b] + " have no join");
      alg->meet_[a * n + b] = TruthValue(*glb);
      alg->join_[a * n + b] = TruthValue(*lub);
    }

  // Bounds: meet of everything is bottom, join of everything is top.
  std::size_t lo = 0, hi = 0;
  for (std::size_t a = 1; a < n; ++a) {
    lo = alg->meet_[lo * n + a].index();
    hi = alg->join_[hi * n + a].index();
  }
  alg->bottom_ = TruthValue(lo);
  alg->top_ = TruthValue(hi);

  alg->chain_ = true;
  for (std::size_t a = 0; a < n && alg->chain_; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!t.leq[a][b] && !t.leq[b][a]) {
        alg->chain_ = false;
        break;
      }

  // Heights by repeated relaxation; n rounds suffice for a chain of length n.
  alg->height_.assign(n, 0);
  for (std::size_t round = 0; round < n; ++round)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b && t.leq[b][a]) alg->height_[a] = std::max(alg->height_[a], alg->height_[b] + 1);

  return alg;
}

inline AlgebraPtr make_lukasiewicz_chain(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidSize, "Lukasiewicz chain needs n >= 2, got " + std::to_string(n));
  const std::size_t d = n - 1;
  TruthAlgebra::Tables t;
  t.carrier = detail::chain_names(n);
  t.leq = detail::chain_order(n);
  t.otimes = detail::chain_table(n, [d](std::size_t a, std::size_t b) { return a + b > d ? a + b - d : 0; });
  t.residuum = detail::chain_table(n, [d](std::size_t a, std::size_t b) { return std::min(d, d - a + b); });
  return TruthAlgebra::from_tables_unchecked(std::move(t), AlgebraKind::Lukasiewicz, d);
}

inline AlgebraPtr make_goedel_chain(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidSize, "Goedel chain needs n >= 2, got " + std::to_string(n));
  const std::size_t d = n - 1;
  TruthAlgebra::Tables t;
  t.carrier = detail::chain_names(n);
  t.leq = detail::chain_order(n);
  t.otimes = detail::chain_table(n, [](std::size_t a, std::size_t b) { return std::min(a, b); });
  t.residuum = detail::chain_table(n, [d](std::size_t a, std::size_t b) { return a <= b ? d : b; });
  return TruthAlgebra::from_tables_unchecked(std::move(t), AlgebraKind::Goedel, d);
}

inline AlgebraPtr make_table_algebra(std::vector<std::string> carrier,
                                     const std::vector<std::pair<std::string, std::string>>& order,
                                     const std::vector<std::vector<std::string>>& otimes,
                                     const std::vector<std::vector<std::string>>& residuum) {
  const std::size_t n = carrier.size();
  if (n == 0) throw Error(ErrorCode::InvalidSize, "carrier must be nonempty");
  auto index_of = [&](const std::string& name) -> std::size_t {
    auto it = std::find(carrier.begin(), carrier.end(), name);
    if (it == carrier.end()) throw Error(ErrorCode::InvalidAlgebra, "unknown carrier element '" + name + "'");
    return static_cast<std::size_t>(it - carrier.begin());
  };
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(carrier.begin(), carrier.begin() + static_cast<std::ptrdiff_t>(i), carrier[i]) !=
        carrier.begin() + static_cast<std::ptrdiff_t>(i))
      throw Error(ErrorCode::InvalidAlgebra, "duplicate carrier element '" + carrier[i] + "'");

  TruthAlgebra::Tables t;
  t.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) t.leq[i][i] = true;
  for (const auto& [lo, hi] : order) t.leq[index_of(lo)][index_of(hi)] = true;
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (t.leq[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (t.leq[k][j]) t.leq[i][j] = true;

  auto convert = [&](const std::vector<std::vector<std::string>>& table, const char* what) {
    if (table.size() != n)
      throw Error(ErrorCode::InvalidSize, std::string(what) + " table must have " + std::to_string(n) + " rows");
    std::vector<std::vector<std::size_t>> out(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n)
        throw Error(ErrorCode::InvalidSize, std::string(what) + " table row " + std::to_string(a) +
                                                " must have " + std::to_string(n) + " entries");
      for (std::size_t b = 0; b < n; ++b) out[a][b] = index_of(table[a][b]);
    }
    return out;
  };
  t.otimes = convert(otimes, "otimes");
  t.residuum = convert(residuum, "residuum");
  t.carrier = std::move(carrier);

  auto alg = TruthAlgebra::from_tables_unchecked(std::move(t));
  ValidationReport report = validate_algebra(*alg);
  if (!report.ok()) throw InvalidAlgebraError(std::move(report));
  return alg;
}

inline ValidationReport validate_algebra(const TruthAlgebra& A) {
  const std::size_t n = A.size();
  ValidationReport report;
  auto fmt = [&](TruthValue v) { return A.format(v); };

  // Each law is a predicate over k-tuples; the first failing tuple in
  // lexicographic index order is the witness.
  auto check = [&](std::string law, std::size_t arity, auto&& holds, auto&& describe) {
    LawCheck result{std::move(law), true, {}, {}};
    std::vector<TruthValue> tuple(arity);
    std::vector<std::size_t> idx(arity, 0);
    const std::size_t total = [&] {
      std::size_t t = 1;
      for (std::size_t i = 0; i < arity; ++i) t *= n;
      return t;
    }();
    for (std::size_t count = 0; count < total; ++count) {
      std::size_t rest = count;
      for (std::size_t i = arity; i-- > 0;) {
        tuple[i] = TruthValue(rest % n);
        rest /= n;
      }
      if (!holds(std::span<const TruthValue>(tuple))) {
        result.passed = false;
        result.witness = tuple;
        result.detail = describe(std::span<const TruthValue>(tuple));
        break;
      }
    }
    report.laws.push_back(std::move(result));
  };

  const TruthValue one = A.top(), zero = A.bottom();

  check(
      "bounded-lattice", 3,
      [&](auto t) {
        auto a = t[0], b = t[1], c = t[2];
        TruthValue m = A.meet(a, b), j = A.join(a, b);
        bool glb = A.leq(m, a) && A.leq(m, b) && (!(A.leq(c, a) && A.leq(c, b)) || A.leq(c, m));
        bool lub = A.leq(a, j) && A.leq(b, j) && (!(A.leq(a, c) && A.leq(b, c)) || A.leq(j, c));
        return glb && lub && A.leq(zero, a) && A.leq(a, one);
      },
      [&](auto t) { return "meet/join of (" + fmt(t[0]) + ", " + fmt(t[1]) + ") against " + fmt(t[2]); });

  check(
      "otimes-commutative", 2, [&](auto t) { return A.otimes(t[0], t[1]) == A.otimes(t[1], t[0]); },
      [&](auto t) {
        return fmt(t[0]) + "*" + fmt(t[1]) + " = " + fmt(A.otimes(t[0], t[1])) + " but " + fmt(t[1]) + "*" +
               fmt(t[0]) + " = " + fmt(A.otimes(t[1], t[0]));
      });

  check(
      "otimes-associative", 3,
      [&](auto t) { return A.otimes(A.otimes(t[0], t[1]), t[2]) == A.otimes(t[0], A.otimes(t[1], t[2])); },
      [&](auto t) { return "(" + fmt(t[0]) + "*" + fmt(t[1]) + ")*" + fmt(t[2]) + " differs from regrouping"; });

  check(
      "otimes-unit", 1, [&](auto t) { return A.otimes(t[0], one) == t[0] && A.otimes(one, t[0]) == t[0]; },
      [&](auto t) { return fmt(t[0]) + "*1 = " + fmt(A.otimes(t[0], one)); });

  check(
      "residuation", 3,
      [&](auto t) {
        auto a = t[0], b = t[1], c = t[2];
        return A.leq(A.otimes(a, b), c) == A.leq(a, A.implies(b, c));
      },
      [&](auto t) {
        auto a = t[0], b = t[1], c = t[2];
        return fmt(a) + "*" + fmt(b) + " = " + fmt(A.otimes(a, b)) + (A.leq(A.otimes(a, b), c) ? " <= " : " not <= ") +
               fmt(c) + " but " + fmt(a) + (A.leq(a, A.implies(b, c)) ? " <= " : " not <= ") + fmt(b) + "->" +
               fmt(c) + " = " + fmt(A.implies(b, c));
      });

  check(
      "residuum-top-unit", 1, [&](auto t) { return A.implies(one, t[0]) == t[0]; },
      [&](auto t) { return "1->" + fmt(t[0]) + " = " + fmt(A.implies(one, t[0])); });

  check(
      "otimes-distributes-over-joins", 3,
      [&](auto t) {
        auto a = t[0], b = t[1], c = t[2];
        return A.otimes(a, A.join(b, c)) == A.join(A.otimes(a, b), A.otimes(a, c)) &&
               A.otimes(A.join(b, c), a) == A.join(A.otimes(b, a), A.otimes(c, a)) &&
               A.otimes(a, zero) == zero && A.otimes(zero, a) == zero;
      },
      [&](auto t) { return fmt(t[0]) + "*(" + fmt(t[1]) + " v " + fmt(t[2]) + ") differs from the join of products"; });

  check(
      "residuum-joins-to-meets", 3,
      [&](auto t) {
        auto a = t[0], b = t[1], c = t[2];
        return A.implies(A.join(a, b), c) == A.meet(A.implies(a, c), A.implies(b, c)) && A.implies(zero, c) == one;
      },
      [&](auto t) { return "(" + fmt(t[0]) + " v " + fmt(t[1]) + ")->" + fmt(t[2]) + " differs from the meet"; });

  check(
      "residuum-preserves-meets", 3,
      [&](auto t) {
        auto a = t[0], b = t[1], c = t[2];
        return A.implies(a, A.meet(b, c)) == A.meet(A.implies(a, b), A.implies(a, c)) && A.implies(a, one) == one;
      },
      [&](auto t) { return fmt(t[0]) + "->(" + fmt(t[1]) + " ^ " + fmt(t[2]) + ") differs from the meet"; });

  return report;
}

}  // namespace mvg
