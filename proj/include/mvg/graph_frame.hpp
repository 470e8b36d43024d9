#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mvg/polarity.hpp"

namespace mvg {

/// A reflexive A-graph (Z, E). Also owns the product index set Z_A = A x Z
/// shared by every A-subset and relation derived from it.
class AGraph {
 public:
  AGraph(AlgebraPtr alg, DomainPtr nodes, ARelation E)
      : alg_(std::move(alg)), nodes_(std::move(nodes)), E_(std::move(E)) {
    if (nodes_->size() == 0) throw Error(ErrorCode::InvalidSize, "graph needs at least one node");
    if (!same_domain(E_.row_domain(), nodes_) || !same_domain(E_.col_domain(), nodes_))
      throw Error(ErrorCode::NotSquare, "E must be a relation Z x Z");
    if (!same_algebra(alg_, E_.algebra())) throw Error(ErrorCode::AlgebraMismatch, "E uses another algebra");
    for (std::size_t z = 0; z < nodes_->size(); ++z)
      if (E_(z, z) != alg_->top())
        throw Error(ErrorCode::NotReflexive, "E is not reflexive: E(" + nodes_->label(z) + "," + nodes_->label(z) +
                                                 ") = " + alg_->format(E_(z, z)));
    value_nodes_ = Domain::product(*alg_, nodes_);
  }

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  const DomainPtr& nodes() const noexcept { return nodes_; }
  /// Z_A, the object side of the induced polarity.
  const DomainPtr& value_nodes() const noexcept { return value_nodes_; }
  const ARelation& E() const noexcept { return E_; }

 private:
  AlgebraPtr alg_;
  DomainPtr nodes_;
  ARelation E_;
  DomainPtr value_nodes_;
};

namespace detail {
inline void require_node_relation(const AGraph& G, const ARelation& R) {
  if (!same_domain(R.row_domain(), G.nodes()) || !same_domain(R.col_domain(), G.nodes()))
    throw Error(ErrorCode::NotSquare, "relation must be Z x Z over the graph's nodes");
}
}  // namespace detail

/// I_R((alpha, z), z') = R(z, z') -> alpha.
inline ARelation lift_IR(const AGraph& G, const ARelation& R) {
  detail::require_node_relation(G, R);
  const auto& A = *G.algebra();
  const auto& ZA = *G.value_nodes();
  return ARelation::generate(G.algebra(), G.value_nodes(), G.nodes(), [&](std::size_t p, std::size_t zp) {
    return A.implies(R(ZA.node_of(p), zp), ZA.value_of(p));
  });
}

/// J_R(z, (alpha, z')) = R(z, z') -> alpha.
inline ARelation lift_JR(const AGraph& G, const ARelation& R) {
  detail::require_node_relation(G, R);
  const auto& A = *G.algebra();
  const auto& ZA = *G.value_nodes();
  return ARelation::generate(G.algebra(), G.nodes(), G.value_nodes(), [&](std::size_t z, std::size_t p) {
    return A.implies(R(z, ZA.node_of(p)), ZA.value_of(p));
  });
}

/// P_X = (Z_A, Z, I_E). Its up/down maps are the [1]/[0] maps of the graph.
inline APolarity induced_polarity(const AGraph& G) { return APolarity(lift_IR(G, G.E())); }

/// Rbox^[0][u] over Z_A, for u over Z.
inline AValuedSet rbox0(const AGraph& G, const ARelation& R, const AValuedSet& u) { return lift0(lift_IR(G, R), u); }
/// Rbox^[1][f] over Z, for f over Z_A.
inline AValuedSet rbox1(const AGraph& G, const ARelation& R, const AValuedSet& f) { return lift1(lift_IR(G, R), f); }
/// Rdia^[0][f] over Z, for f over Z_A.
inline AValuedSet rdia0(const AGraph& G, const ARelation& R, const AValuedSet& f) { return lift0(lift_JR(G, R), f); }
/// Rdia^[1][u] over Z_A, for u over Z.
inline AValuedSet rdia1(const AGraph& G, const ARelation& R, const AValuedSet& u) { return lift1(lift_JR(G, R), u); }

/// The four E-compatibility inclusion families, exhaustively over every
/// z in Z and alpha, beta in A. Either relation may be absent.
inline CompatibilityReport check_E_compatibility(const AGraph& G, const std::optional<ARelation>& rbox,
                                                 const std::optional<ARelation>& rdia) {
  const APolarity P = induced_polarity(G);
  const AlgebraPtr& alg = G.algebra();
  const DomainPtr& Z = G.nodes();
  const DomainPtr& ZA = G.value_nodes();
  CompatibilityReport report;

  auto check = [&](const char* family, std::vector<TruthValue> values, const std::string& element,
                   const AValuedSet& s, bool extent_side) {
    ++report.instances;
    AValuedSet closed = extent_side ? close_extent(P, s) : close_intent(P, s);
    if (auto bad = detail::first_excess(closed, s))
      report.failures.push_back({family, std::move(values), element, s.domain()->label(*bad)});
  };

  if (rbox) {
    const ARelation IR = lift_IR(G, *rbox);
    for (std::size_t b = 0; b < alg->size(); ++b)
      for (std::size_t z = 0; z < Z->size(); ++z)
        check("box[0]{b/z}", {TruthValue(b)}, Z->label(z), lift0(IR, singleton(alg, Z, TruthValue(b), z)), true);
    for (std::size_t b = 0; b < alg->size(); ++b)
      for (std::size_t p = 0; p < ZA->size(); ++p)
        check("box[1]{b/(a,z)}", {TruthValue(b), ZA->value_of(p)}, ZA->label(p),
              lift1(IR, singleton(alg, ZA, TruthValue(b), p)), false);
  }
  if (rdia) {
    const ARelation JR = lift_JR(G, *rdia);
    for (std::size_t b = 0; b < alg->size(); ++b)
      for (std::size_t z = 0; z < Z->size(); ++z)
        check("dia[1]{b/z}", {TruthValue(b)}, Z->label(z), lift1(JR, singleton(alg, Z, TruthValue(b), z)), true);
    for (std::size_t b = 0; b < alg->size(); ++b)
      for (std::size_t p = 0; p < ZA->size(); ++p)
        check("dia[0]{b/(a,z)}", {TruthValue(b), ZA->value_of(p)}, ZA->label(p),
              lift0(JR, singleton(alg, ZA, TruthValue(b), p)), false);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Equivalent formulations of compatibility

struct EquivalenceItem {
  int item = 0;           // 1, 2 (box) or 3, 4 (diamond)
  bool singletons = true;  // (i): singleton families only
  bool all_sets = true;    // (ii): every A-subset
  bool adjoint = true;     // (iii): the adjoint formulation
  bool agree() const noexcept { return singletons == all_sets && all_sets == adjoint; }
};

struct EquivalenceReport {
  std::vector<EquivalenceItem> items;
  bool sampled = false;
  std::uint64_t u_checked = 0;
  std::uint64_t f_checked = 0;
  bool agree() const {
    return std::all_of(items.begin(), items.end(), [](const EquivalenceItem& i) { return i.agree(); });
  }
};

struct EquivalenceOptions {
  std::uint64_t budget = kDefaultBudget;  // largest search space enumerated exhaustively
  bool allow_sampling = false;            // over budget: sample `budget` draws instead of failing
  std::uint64_t seed = 0x5eed;
};

/// Evaluates conditions (i), (ii) and (iii) of each item of the compatibility
/// equivalence independently, so disagreements become visible.
inline EquivalenceReport check_compat_equivalences(const AGraph& G, const std::optional<ARelation>& rbox,
                                                   const std::optional<ARelation>& rdia,
                                                   const EquivalenceOptions& opt = {}) {
  const APolarity P = induced_polarity(G);
  const AlgebraPtr& alg = G.algebra();
  const DomainPtr& Z = G.nodes();
  const DomainPtr& ZA = G.value_nodes();
  const std::uint64_t u_space = saturating_pow(alg->size(), Z->size());
  const std::uint64_t f_space = saturating_pow(alg->size(), ZA->size());

  EquivalenceReport report;
  if ((u_space > opt.budget || f_space > opt.budget) && !opt.allow_sampling)
    throw BudgetError(std::max(u_space, f_space), opt.budget, "compatibility equivalence check");

  std::mt19937_64 rng(opt.seed);
  auto visit = [&](const DomainPtr& dom, std::uint64_t space, auto&& fn) {
    std::uint64_t count = 0;
    if (space <= opt.budget) {
      for_each_subset(alg, dom, [&](const AValuedSet& s) {
        fn(s);
        ++count;
      });
    } else {
      report.sampled = true;
      std::uniform_int_distribution<std::size_t> pick(0, alg->size() - 1);
      for (std::uint64_t k = 0; k < opt.budget; ++k) {
        std::vector<TruthValue> vals(dom->size());
        for (auto& v : vals) v = TruthValue(pick(rng));
        fn(AValuedSet(alg, dom, std::move(vals)));
        ++count;
      }
    }
    return count;
  };

  // (iii) compares a lift of the closure with the lift itself; the converse
  // inclusion always holds by antitonicity.
  auto included = [](const AValuedSet& a, const AValuedSet& b) { return subseteq(a, b); };
  std::vector<AValuedSet> us, fs;
  report.u_checked = visit(Z, u_space, [&](const AValuedSet& u) { us.push_back(u); });
  report.f_checked = visit(ZA, f_space, [&](const AValuedSet& f) { fs.push_back(f); });

  if (rbox) {
    const ARelation IR = lift_IR(G, *rbox);
    EquivalenceItem one{1}, two{2};
    for (std::size_t a = 0; a < alg->size(); ++a) {
      for (std::size_t z = 0; z < Z->size(); ++z) {
        AValuedSet s = lift0(IR, singleton(alg, Z, TruthValue(a), z));
        one.singletons = one.singletons && included(close_extent(P, s), s);
      }
      for (std::size_t p = 0; p < ZA->size(); ++p) {
        AValuedSet s = lift1(IR, singleton(alg, ZA, TruthValue(a), p));
        two.singletons = two.singletons && included(close_intent(P, s), s);
      }
    }
    for (const auto& u : us) {
      AValuedSet s = lift0(IR, u);
      one.all_sets = one.all_sets && included(close_extent(P, s), s);
      two.adjoint = two.adjoint && included(s, lift0(IR, close_intent(P, u)));
    }
    for (const auto& f : fs) {
      AValuedSet s = lift1(IR, f);
      two.all_sets = two.all_sets && included(close_intent(P, s), s);
      one.adjoint = one.adjoint && included(s, lift1(IR, close_extent(P, f)));
    }
    report.items.push_back(one);
    report.items.push_back(two);
  }
  if (rdia) {
    const ARelation JR = lift_JR(G, *rdia);
    EquivalenceItem three{3}, four{4};
    for (std::size_t a = 0; a < alg->size(); ++a) {
      for (std::size_t p = 0; p < ZA->size(); ++p) {
        AValuedSet s = lift0(JR, singleton(alg, ZA, TruthValue(a), p));
        three.singletons = three.singletons && included(close_intent(P, s), s);
      }
      for (std::size_t z = 0; z < Z->size(); ++z) {
        AValuedSet s = lift1(JR, singleton(alg, Z, TruthValue(a), z));
        four.singletons = four.singletons && included(close_extent(P, s), s);
      }
    }
    for (const auto& f : fs) {
      AValuedSet s = lift0(JR, f);
      three.all_sets = three.all_sets && included(close_intent(P, s), s);
      four.adjoint = four.adjoint && included(s, lift0(JR, close_extent(P, f)));
    }
    for (const auto& u : us) {
      AValuedSet s = lift1(JR, u);
      four.all_sets = four.all_sets && included(close_extent(P, s), s);
      three.adjoint = three.adjoint && included(s, lift1(JR, close_intent(P, u)));
    }
    report.items.push_back(three);
    report.items.push_back(four);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Labeled multi-modal frames

struct ModalPair {
  std::optional<ARelation> box;
  std::optional<ARelation> dia;
};

/// A reflexive A-graph plus a labeled family of (Rbox, Rdia) pairs, each
/// E-compatible. The induced polarity and the lifted relations are computed
/// once at construction.
class GraphFrame {
 public:
  GraphFrame(AGraph graph, std::vector<std::pair<std::string, ModalPair>> relations,
             Checking checking = Checking::Enforce)
      : graph_(std::move(graph)), polarity_(induced_polarity(graph_)) {
    for (auto& [label, pair] : relations) {
      for (const auto& existing : entries_)
        if (existing.label == label) throw Error(ErrorCode::UnknownLabel, "duplicate relation label '" + label + "'");
      if (pair.box) detail::require_node_relation(graph_, *pair.box);
      if (pair.dia) detail::require_node_relation(graph_, *pair.dia);
      if (checking == Checking::Enforce) {
        auto report = check_E_compatibility(graph_, pair.box, pair.dia);
        if (!report.ok()) throw CompatibilityError("relations of label '" + label + "'", std::move(report));
      }
      Entry e{label, pair, std::nullopt, std::nullopt};
      if (pair.box) e.box_lift = lift_IR(graph_, *pair.box);
      if (pair.dia) e.dia_lift = lift_JR(graph_, *pair.dia);
      entries_.push_back(std::move(e));
    }
  }

  const AGraph& graph() const noexcept { return graph_; }
  const APolarity& polarity() const noexcept { return polarity_; }
  const AlgebraPtr& algebra() const noexcept { return graph_.algebra(); }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& e : entries_) out.push_back(e.label);
    return out;
  }

  bool has_label(std::string_view label) const {
    return std::any_of(entries_.begin(), entries_.end(), [&](const Entry& e) { return e.label == label; });
  }

  /// The empty label names the sole relation pair of a mono-modal frame.
  std::string resolve_label(std::string_view label) const {
    if (label.empty()) {
      if (entries_.size() == 1) return entries_.front().label;
      throw Error(ErrorCode::UnknownLabel, "unlabeled modality needs exactly one relation label, frame has " +
                                               std::to_string(entries_.size()));
    }
    if (!has_label(label)) throw Error(ErrorCode::UnknownLabel, "unknown relation label '" + std::string(label) + "'");
    return std::string(label);
  }

  const ModalPair& relations(std::string_view label) const { return entry(label).pair; }

  const ARelation& box(std::string_view label) const {
    const Entry& e = entry(label);
    if (!e.pair.box) throw Error(ErrorCode::UnknownLabel, "label '" + e.label + "' has no box relation");
    return *e.pair.box;
  }
  const ARelation& dia(std::string_view label) const {
    const Entry& e = entry(label);
    if (!e.pair.dia) throw Error(ErrorCode::UnknownLabel, "label '" + e.label + "' has no diamond relation");
    return *e.pair.dia;
  }
  /// I_Rbox over Z_A x Z.
  const ARelation& box_lift(std::string_view label) const {
    box(label);
    return *entry(label).box_lift;
  }
  /// J_Rdia over Z x Z_A.
  const ARelation& dia_lift(std::string_view label) const {
    dia(label);
    return *entry(label).dia_lift;
  }

 private:
  struct Entry {
    std::string label;
    ModalPair pair;
    std::optional<ARelation> box_lift;
    std::optional<ARelation> dia_lift;
  };

  const Entry& entry(std::string_view label) const {
    std::string resolved = resolve_label(label);
    for (const auto& e : entries_)
      if (e.label == resolved) return e;
    throw Error(ErrorCode::UnknownLabel, "unknown relation label '" + std::string(label) + "'");
  }

  AGraph graph_;
  APolarity polarity_;
  std::vector<Entry> entries_;
};

/// [Rbox]c = (Rbox^[0][intent], (Rbox^[0][intent])^[1]).
inline Concept frame_box(const GraphFrame& F, std::string_view label, const Concept& c) {
  detail::require_same_polarity(F.polarity(), c);
  AValuedSet ext = lift0(F.box_lift(label), c.intent());
  AValuedSet in = up(F.polarity(), ext);
  return Concept::assume_stable(std::move(ext), std::move(in));
}

/// <Rdia>c = ((Rdia^[0][extent])^[0], Rdia^[0][extent]).
inline Concept frame_dia(const GraphFrame& F, std::string_view label, const Concept& c) {
  detail::require_same_polarity(F.polarity(), c);
  AValuedSet in = lift0(F.dia_lift(label), c.extent());
  AValuedSet ext = down(F.polarity(), in);
  return Concept::assume_stable(std::move(ext), std::move(in));
}

/// The enriched context (P_X, I_Rbox, J_Rdia) of one label; its complex
/// algebra coincides with the frame-level operators.
inline EnrichedAPolarity enriched_context(const GraphFrame& F, std::string_view label) {
  return EnrichedAPolarity(F.polarity(), F.box_lift(label), F.dia_lift(label), Checking::Skip);
}

/// E <= Rbox pointwise.
inline bool check_E_reflexive(const GraphFrame& F, std::string_view label) {
  return relation_leq(F.graph().E(), F.box(label));
}

}  // namespace mvg
