#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "mvg/formula.hpp"
#include "mvg/graph_frame.hpp"

namespace mvg {

using Valuation = std::map<std::string, Concept>;

/// A graph-based model: a frame plus a concept-valued valuation of atoms.
class Model {
 public:
  Model(std::shared_ptr<const GraphFrame> frame, Valuation valuation)
      : frame_(std::move(frame)), valuation_(std::move(valuation)) {
    for (const auto& [name, c] : valuation_) detail::require_same_polarity(frame_->polarity(), c);
  }

  const GraphFrame& frame() const noexcept { return *frame_; }
  const std::shared_ptr<const GraphFrame>& frame_ptr() const noexcept { return frame_; }
  const Valuation& valuation() const noexcept { return valuation_; }

 private:
  std::shared_ptr<const GraphFrame> frame_;
  Valuation valuation_;
};

enum class ValuationMode { Strict, Close };

/// Builds a model from extent tables over Z_A. Strict mode rejects any table
/// that is not Galois-stable; Close mode replaces each table by its closure.
inline Model make_valuation(std::shared_ptr<const GraphFrame> frame, const std::map<std::string, AValuedSet>& tables,
                            ValuationMode mode = ValuationMode::Strict) {
  const APolarity& P = frame->polarity();
  Valuation v;
  for (const auto& [name, table] : tables) {
    if (!same_domain(table.domain(), P.objects()))
      throw Error(ErrorCode::IndexMismatch, "table for atom '" + name + "' is not over the value-node set");
    AValuedSet closed = close_extent(P, table);
    if (mode == ValuationMode::Strict) {
      if (auto bad = detail::first_excess(closed, table)) {
        const TruthAlgebra& A = *P.algebra();
        throw Error(ErrorCode::Unstable, "valuation of atom '" + name + "' is not stable at " +
                                             table.domain()->label(*bad) + ": table has " + A.format(table[*bad]) +
                                             ", closure gives " + A.format(closed[*bad]));
      }
    }
    v.emplace(name, concept_of_extent(P, closed));
  }
  return Model(std::move(frame), std::move(v));
}

namespace detail {

class Evaluator {
 public:
  Evaluator(const GraphFrame& F, const Valuation& V) : F_(F), V_(V) {}

  const Concept& eval(const Formula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    return memo_.emplace(f.id(), compute(f)).first->second;
  }

 private:
  Concept compute(const Formula& f) {
    const APolarity& P = F_.polarity();
    switch (f.kind()) {
      case FormulaKind::Top: return top_concept(P);
      case FormulaKind::Bottom: return bottom_concept(P);
      case FormulaKind::Atom: {
        auto it = V_.find(f.text());
        if (it == V_.end()) throw Error(ErrorCode::UnknownAtom, "atom '" + f.text() + "' has no valuation");
        return it->second;
      }
      case FormulaKind::And: return concept_meet(P, eval(f.lhs()), eval(f.rhs()));
      case FormulaKind::Or: return concept_join(P, eval(f.lhs()), eval(f.rhs()));
      case FormulaKind::Box: return frame_box(F_, f.text(), eval(f.sub()));
      case FormulaKind::Dia: return frame_dia(F_, f.text(), eval(f.sub()));
    }
    throw std::logic_error("unreachable formula kind");
  }

  const GraphFrame& F_;
  const Valuation& V_;
  std::unordered_map<const void*, Concept> memo_;
};

}  // namespace detail

inline Concept eval(const GraphFrame& F, const Valuation& V, const Formula& f) {
  detail::Evaluator ev(F, V);
  return ev.eval(f);
}

inline Concept eval(const Model& M, const Formula& f) { return eval(M.frame(), M.valuation(), f); }

/// Extension value [[phi]](beta, z).
inline TruthValue support_degree(const Model& M, TruthValue beta, std::size_t z, const Formula& f) {
  const Domain& ZA = *M.frame().graph().value_nodes();
  return eval(M, f).extent().at(ZA.pair_index(beta, z));
}

/// Intension value ((phi))(z).
inline TruthValue refutation_degree(const Model& M, std::size_t z, const Formula& f) {
  return eval(M, f).intent().at(z);
}

/// M, (beta, z) alpha-supports phi iff alpha <= [[phi]](beta, z).
inline bool supports(const Model& M, TruthValue beta, std::size_t z, TruthValue alpha, const Formula& f) {
  return M.frame().algebra()->leq(alpha, support_degree(M, beta, z, f));
}

/// M, z alpha-refutes phi iff alpha <= ((phi))(z).
inline bool refutes(const Model& M, std::size_t z, TruthValue alpha, const Formula& f) {
  return M.frame().algebra()->leq(alpha, refutation_degree(M, z, f));
}

struct MonotoneViolation {
  TruthValue lower, upper;  // lower <= upper in A, yet f(lower, z) > f(upper, z)
  std::size_t node;
};

/// Checks f(beta, z) <= f(beta', z) whenever beta <= beta', for an A-subset
/// of a product domain.
inline std::vector<MonotoneViolation> monotone_in_beta(const AValuedSet& f) {
  const Domain& ZA = *f.domain();
  if (!ZA.is_product()) throw Error(ErrorCode::IndexMismatch, "monotonicity in beta needs a value-node table");
  const TruthAlgebra& A = *f.algebra();
  std::vector<MonotoneViolation> out;
  for (std::size_t b = 0; b < A.size(); ++b)
    for (std::size_t b2 = 0; b2 < A.size(); ++b2) {
      if (b == b2 || !A.leq(TruthValue(b), TruthValue(b2))) continue;
      for (std::size_t z = 0; z < ZA.node_count(); ++z)
        if (!A.leq(f[ZA.pair_index(TruthValue(b), z)], f[ZA.pair_index(TruthValue(b2), z)]))
          out.push_back({TruthValue(b), TruthValue(b2), z});
    }
  return out;
}

inline std::vector<MonotoneViolation> check_monotone_in_beta(const Model& M, const Formula& f) {
  return monotone_in_beta(eval(M, f).extent());
}

/// [[lhs]] <= [[rhs]], cross-checked against ((rhs)) <= ((lhs)).
inline bool sequent_true(const GraphFrame& F, const Valuation& V, const Formula& lhs, const Formula& rhs) {
  detail::Evaluator ev(F, V);
  const Concept l = ev.eval(lhs);
  const Concept r = ev.eval(rhs);
  bool by_extent = subseteq(l.extent(), r.extent());
  bool by_intent = subseteq(r.intent(), l.intent());
  if (by_extent != by_intent) throw std::logic_error("extent and intent disagree on sequent truth");
  return by_extent;
}

inline bool sequent_true(const Model& M, const Formula& lhs, const Formula& rhs) {
  return sequent_true(M.frame(), M.valuation(), lhs, rhs);
}

struct FrameValidity {
  bool valid = true;
  std::optional<Valuation> counterexample;
  std::uint64_t assignments_checked = 0;
  std::size_t concept_count = 0;
};

/// Brute force over every assignment of the sequent's atoms to concepts of
/// the frame's complex algebra. The first falsifying assignment is returned.
inline FrameValidity sequent_valid_on_frame(const GraphFrame& F, const Formula& lhs, const Formula& rhs,
                                            std::uint64_t budget = kDefaultBudget) {
  std::set<std::string> names = atoms(lhs);
  collect_atoms(rhs, names);
  const std::vector<std::string> atom_list(names.begin(), names.end());

  const std::vector<Concept> concepts = enumerate_concepts(F.polarity(), budget);
  const std::uint64_t space = saturating_pow(concepts.size(), atom_list.size());
  if (space > budget) throw BudgetError(space, budget, "frame validity");

  FrameValidity result;
  result.concept_count = concepts.size();
  for (std::uint64_t k = 0; k < space; ++k) {
    std::uint64_t rest = k;
    Valuation V;
    for (std::size_t i = atom_list.size(); i-- > 0;) {
      V.emplace(atom_list[i], concepts[rest % concepts.size()]);
      rest /= concepts.size();
    }
    ++result.assignments_checked;
    if (!sequent_true(F, V, lhs, rhs)) {
      result.valid = false;
      result.counterexample = std::move(V);
      return result;
    }
  }
  return result;
}

}  // namespace mvg
