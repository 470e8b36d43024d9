#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mvg/truth_algebra.hpp"

namespace mvg {

/// A finite, ordered index set with opaque labels.
///
/// Product domains (truth value x node, written Z_A elsewhere) are laid out
/// lexicographically: value ascending in carrier order, then node order, so
/// element (v, z) sits at v * node_count + z.
class Domain {
 public:
  static std::shared_ptr<const Domain> make(std::vector<std::string> labels) {
    auto d = std::shared_ptr<Domain>(new Domain());
    d->labels_ = std::move(labels);
    return d;
  }

  static std::shared_ptr<const Domain> product(const TruthAlgebra& alg, const std::shared_ptr<const Domain>& nodes) {
    auto d = std::shared_ptr<Domain>(new Domain());
    d->value_count_ = alg.size();
    d->nodes_ = nodes;
    for (std::size_t v = 0; v < alg.size(); ++v)
      for (std::size_t z = 0; z < nodes->size(); ++z)
        d->labels_.push_back("(" + alg.format(TruthValue(v)) + "," + nodes->label(z) + ")");
    return d;
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<std::size_t> index_of(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }

  bool is_product() const noexcept { return nodes_ != nullptr; }
  const std::shared_ptr<const Domain>& nodes() const noexcept { return nodes_; }
  std::size_t node_count() const noexcept { return nodes_ ? nodes_->size() : 0; }

  std::size_t pair_index(TruthValue v, std::size_t node) const { return v.index() * node_count() + node; }
  TruthValue value_of(std::size_t i) const { return TruthValue(i / node_count()); }
  std::size_t node_of(std::size_t i) const { return i % node_count(); }

  bool same_as(const Domain& o) const {
    if (this == &o) return true;
    if (is_product() != o.is_product()) return false;
    return labels_ == o.labels_;
  }

 private:
  Domain() = default;
  std::vector<std::string> labels_;
  std::shared_ptr<const Domain> nodes_;
  std::size_t value_count_ = 0;
};

using DomainPtr = std::shared_ptr<const Domain>;

inline bool same_domain(const DomainPtr& a, const DomainPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

/// An A-valued subset u : W -> A.
class AValuedSet {
 public:
  AValuedSet(AlgebraPtr alg, DomainPtr dom, std::vector<TruthValue> values)
      : alg_(std::move(alg)), dom_(std::move(dom)), values_(std::move(values)) {
    if (values_.size() != dom_->size())
      throw Error(ErrorCode::IndexMismatch, "A-subset has " + std::to_string(values_.size()) +
                                                " values for an index set of size " + std::to_string(dom_->size()));
    for (TruthValue v : values_)
      if (v.index() >= alg_->size()) throw Error(ErrorCode::AlgebraMismatch, "A-subset value outside the carrier");
  }

  static AValuedSet constant(AlgebraPtr alg, DomainPtr dom, TruthValue v) {
    std::vector<TruthValue> vals(dom->size(), v);
    return AValuedSet(std::move(alg), std::move(dom), std::move(vals));
  }

  std::size_t size() const noexcept { return values_.size(); }
  TruthValue operator[](std::size_t i) const { return values_[i]; }
  TruthValue at(std::size_t i) const { return values_.at(i); }
  std::span<const TruthValue> values() const noexcept { return values_; }

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  const DomainPtr& domain() const noexcept { return dom_; }

  friend bool operator==(const AValuedSet& a, const AValuedSet& b) {
    return a.values_ == b.values_ && same_domain(a.dom_, b.dom_);
  }

 private:
  AlgebraPtr alg_;
  DomainPtr dom_;
  std::vector<TruthValue> values_;
};

/// An A-valued relation R : U x W -> A, stored row-major.
class ARelation {
 public:
  ARelation(AlgebraPtr alg, DomainPtr rows, DomainPtr cols, std::vector<TruthValue> values)
      : alg_(std::move(alg)), rows_(std::move(rows)), cols_(std::move(cols)), values_(std::move(values)) {
    if (values_.size() != rows_->size() * cols_->size())
      throw Error(ErrorCode::IndexMismatch, "A-relation needs " + std::to_string(rows_->size() * cols_->size()) +
                                                " entries, got " + std::to_string(values_.size()));
    for (TruthValue v : values_)
      if (v.index() >= alg_->size()) throw Error(ErrorCode::AlgebraMismatch, "A-relation value outside the carrier");
  }

  template <class Fn>
  static ARelation generate(AlgebraPtr alg, DomainPtr rows, DomainPtr cols, Fn&& fn) {
    std::vector<TruthValue> vals;
    vals.reserve(rows->size() * cols->size());
    for (std::size_t r = 0; r < rows->size(); ++r)
      for (std::size_t c = 0; c < cols->size(); ++c) vals.push_back(fn(r, c));
    return ARelation(std::move(alg), std::move(rows), std::move(cols), std::move(vals));
  }

  std::size_t rows() const noexcept { return rows_->size(); }
  std::size_t cols() const noexcept { return cols_->size(); }
  TruthValue operator()(std::size_t r, std::size_t c) const { return values_[r * cols_->size() + c]; }
  std::span<const TruthValue> values() const noexcept { return values_; }

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  const DomainPtr& row_domain() const noexcept { return rows_; }
  const DomainPtr& col_domain() const noexcept { return cols_; }
  bool is_square() const { return same_domain(rows_, cols_); }

  ARelation with(std::size_t r, std::size_t c, TruthValue v) const {
    ARelation copy = *this;
    copy.values_.at(r * cols_->size() + c) = v;
    return copy;
  }

  ARelation converse() const {
    return generate(alg_, cols_, rows_, [this](std::size_t r, std::size_t c) { return (*this)(c, r); });
  }

  friend bool operator==(const ARelation& a, const ARelation& b) {
    return a.values_ == b.values_ && same_domain(a.rows_, b.rows_) && same_domain(a.cols_, b.cols_);
  }

 private:
  AlgebraPtr alg_;
  DomainPtr rows_, cols_;
  std::vector<TruthValue> values_;
};

namespace detail {

inline void require_compatible(const AValuedSet& f, const AValuedSet& g, const char* op) {
  if (!same_algebra(f.algebra(), g.algebra()))
    throw Error(ErrorCode::AlgebraMismatch, std::string(op) + ": A-subsets over different algebras");
  if (!same_domain(f.domain(), g.domain()))
    throw Error(ErrorCode::IndexMismatch, std::string(op) + ": A-subsets over different index sets");
}

inline void require_index(const DomainPtr& expected, const AValuedSet& f, const AlgebraPtr& alg, const char* op) {
  if (!same_algebra(alg, f.algebra()))
    throw Error(ErrorCode::AlgebraMismatch, std::string(op) + ": algebra mismatch");
  if (!same_domain(expected, f.domain()))
    throw Error(ErrorCode::IndexMismatch, std::string(op) + ": index set mismatch");
}

}  // namespace detail

/// S_W(f, g) = meet over z of f(z) -> g(z).
inline TruthValue subsethood(const AValuedSet& f, const AValuedSet& g) {
  detail::require_compatible(f, g, "subsethood");
  const TruthAlgebra& A = *f.algebra();
  TruthValue acc = A.top();
  for (std::size_t i = 0; i < f.size(); ++i) acc = A.meet(acc, A.implies(f[i], g[i]));
  return acc;
}

/// Pointwise f <= g.
inline bool subseteq(const AValuedSet& f, const AValuedSet& g) {
  detail::require_compatible(f, g, "subseteq");
  const TruthAlgebra& A = *f.algebra();
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!A.leq(f[i], g[i])) return false;
  return true;
}

inline AValuedSet pointwise_meet(const AValuedSet& f, const AValuedSet& g) {
  detail::require_compatible(f, g, "meet");
  std::vector<TruthValue> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f.algebra()->meet(f[i], g[i]);
  return AValuedSet(f.algebra(), f.domain(), std::move(out));
}

inline AValuedSet pointwise_join(const AValuedSet& f, const AValuedSet& g) {
  detail::require_compatible(f, g, "join");
  std::vector<TruthValue> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f.algebra()->join(f[i], g[i]);
  return AValuedSet(f.algebra(), f.domain(), std::move(out));
}

/// {alpha / w}: alpha at w, bottom elsewhere.
inline AValuedSet singleton(const AlgebraPtr& alg, const DomainPtr& dom, TruthValue alpha, std::size_t w) {
  if (w >= dom->size())
    throw Error(ErrorCode::IndexMismatch, "singleton index " + std::to_string(w) + " not in index set");
  std::vector<TruthValue> vals(dom->size(), alg->bottom());
  vals[w] = alg->value(alpha.index());
  return AValuedSet(alg, dom, std::move(vals));
}

inline AValuedSet singleton(const AlgebraPtr& alg, const DomainPtr& dom, TruthValue alpha, std::string_view w) {
  auto i = dom->index_of(w);
  if (!i) throw Error(ErrorCode::IndexMismatch, "singleton label '" + std::string(w) + "' not in index set");
  return singleton(alg, dom, alpha, *i);
}

/// Crisp identity relation on Z.
inline ARelation delta(const AlgebraPtr& alg, const DomainPtr& dom) {
  return ARelation::generate(alg, dom, dom,
                             [&](std::size_t r, std::size_t c) { return r == c ? alg->top() : alg->bottom(); });
}

inline bool is_reflexive(const ARelation& R) {
  if (!R.is_square()) throw Error(ErrorCode::NotSquare, "reflexivity needs a square relation");
  for (std::size_t i = 0; i < R.rows(); ++i)
    if (R(i, i) != R.algebra()->top()) return false;
  return true;
}

/// Pointwise R <= S.
inline bool relation_leq(const ARelation& R, const ARelation& S) {
  if (!same_domain(R.row_domain(), S.row_domain()) || !same_domain(R.col_domain(), S.col_domain()))
    throw Error(ErrorCode::IndexMismatch, "relation comparison over different index sets");
  const TruthAlgebra& A = *R.algebra();
  for (std::size_t i = 0; i < R.values().size(); ++i)
    if (!A.leq(R.values()[i], S.values()[i])) return false;
  return true;
}

/// R^(0)[u](a) = meet over x in W of u(x) -> R(a, x).  u over W, result over U.
inline AValuedSet lift0(const ARelation& R, const AValuedSet& u) {
  detail::require_index(R.col_domain(), u, R.algebra(), "lift0");
  const TruthAlgebra& A = *R.algebra();
  std::vector<TruthValue> out(R.rows());
  for (std::size_t a = 0; a < R.rows(); ++a) {
    TruthValue acc = A.top();
    for (std::size_t x = 0; x < R.cols(); ++x) acc = A.meet(acc, A.implies(u[x], R(a, x)));
    out[a] = acc;
  }
  return AValuedSet(R.algebra(), R.row_domain(), std::move(out));
}

/// R^(1)[f](x) = meet over a in U of f(a) -> R(a, x).  f over U, result over W.
inline AValuedSet lift1(const ARelation& R, const AValuedSet& f) {
  detail::require_index(R.row_domain(), f, R.algebra(), "lift1");
  const TruthAlgebra& A = *R.algebra();
  std::vector<TruthValue> out(R.cols(), A.top());
  for (std::size_t a = 0; a < R.rows(); ++a)
    for (std::size_t x = 0; x < R.cols(); ++x) out[x] = A.meet(out[x], A.implies(f[a], R(a, x)));
  return AValuedSet(R.algebra(), R.col_domain(), std::move(out));
}

}  // namespace mvg
