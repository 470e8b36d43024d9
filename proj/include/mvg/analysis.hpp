#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "mvg/model.hpp"

namespace mvg {

/// The four axioms with first-order correspondents on graph-based frames.
enum class AxiomId { BoxBotBot, TopDiaTop, BoxT, DiaT };

inline constexpr std::array<AxiomId, 4> kAllAxioms{AxiomId::BoxBotBot, AxiomId::TopDiaTop, AxiomId::BoxT,
                                                   AxiomId::DiaT};

inline const char* to_string(AxiomId a) {
  switch (a) {
    case AxiomId::BoxBotBot: return "BoxBotBot";
    case AxiomId::TopDiaTop: return "TopDiaTop";
    case AxiomId::BoxT: return "BoxT";
    case AxiomId::DiaT: return "DiaT";
  }
  return "?";
}

inline bool uses_box(AxiomId a) { return a == AxiomId::BoxBotBot || a == AxiomId::BoxT; }

/// The axiom as a sequent over the given relation label.
inline Sequent axiom_sequent(AxiomId a, const std::string& label) {
  const Formula p = Formula::atom("p");
  switch (a) {
    case AxiomId::BoxBotBot: return {Formula::box(label, Formula::bottom()), Formula::bottom()};
    case AxiomId::TopDiaTop: return {Formula::top(), Formula::dia(label, Formula::top())};
    case AxiomId::BoxT: return {Formula::box(label, p), p};
    case AxiomId::DiaT: return {p, Formula::dia(label, p)};
  }
  throw std::logic_error("unknown axiom");
}

/// R_black(z, z') = Rdia(z', z).
inline ARelation r_black(const ARelation& rdia) {
  if (!rdia.is_square()) throw Error(ErrorCode::NotSquare, "R_black needs a square relation");
  return rdia.converse();
}

struct ConditionResult {
  bool holds = true;
  /// Human-readable location of the first violation.
  std::string witness;
  std::optional<TruthValue> beta;
  std::size_t node = 0;
  std::optional<std::size_t> other_node;
};

/// Evaluates the frame condition corresponding to `axiom` literally:
///   BoxBotBot  meet_z' (Rbox(z,z') -> b) <= meet_z' (E(z,z') -> b)   for all (b, z)
///   TopDiaTop  meet_(a,z') (Rdia(z,z') -> a) <= meet_(a,z') (E(z',z) -> a)   for all z
///   BoxT       E <= Rbox
///   DiaT       E <= R_black
inline ConditionResult check_condition(const GraphFrame& F, std::string_view label, AxiomId axiom) {
  const AGraph& G = F.graph();
  const TruthAlgebra& A = *G.algebra();
  const Domain& Z = *G.nodes();
  const ARelation& E = G.E();
  ConditionResult r;

  auto inclusion = [&](const ARelation& R) {
    for (std::size_t z = 0; z < Z.size(); ++z)
      for (std::size_t w = 0; w < Z.size(); ++w)
        if (!A.leq(E(z, w), R(z, w))) {
          r.holds = false;
          r.node = z;
          r.other_node = w;
          r.witness = "(" + Z.label(z) + "," + Z.label(w) + "): E = " + A.format(E(z, w)) +
                      " exceeds " + A.format(R(z, w));
          return;
        }
  };

  switch (axiom) {
    case AxiomId::BoxT: inclusion(F.box(label)); break;
    case AxiomId::DiaT: inclusion(r_black(F.dia(label))); break;
    case AxiomId::BoxBotBot: {
      const ARelation& R = F.box(label);
      for (std::size_t b = 0; b < A.size() && r.holds; ++b)
        for (std::size_t z = 0; z < Z.size(); ++z) {
          TruthValue beta(b), lhs = A.top(), rhs = A.top();
          for (std::size_t w = 0; w < Z.size(); ++w) {
            lhs = A.meet(lhs, A.implies(R(z, w), beta));
            rhs = A.meet(rhs, A.implies(E(z, w), beta));
          }
          if (!A.leq(lhs, rhs)) {
            r.holds = false;
            r.beta = beta;
            r.node = z;
            r.witness = "(" + A.format(beta) + "," + Z.label(z) + "): " + A.format(lhs) + " not <= " + A.format(rhs);
            break;
          }
        }
      break;
    }
    case AxiomId::TopDiaTop: {
      const ARelation& R = F.dia(label);
      for (std::size_t z = 0; z < Z.size(); ++z) {
        TruthValue lhs = A.top(), rhs = A.top();
        for (std::size_t a = 0; a < A.size(); ++a)
          for (std::size_t w = 0; w < Z.size(); ++w) {
            lhs = A.meet(lhs, A.implies(R(z, w), TruthValue(a)));
            rhs = A.meet(rhs, A.implies(E(w, z), TruthValue(a)));
          }
        if (!A.leq(lhs, rhs)) {
          r.holds = false;
          r.node = z;
          r.witness = Z.label(z) + ": " + A.format(lhs) + " not <= " + A.format(rhs);
          break;
        }
      }
      break;
    }
  }
  return r;
}

/// On a finite chain, with E reflexive, the right-hand meets collapse to b
/// (BoxBotBot) and to bottom (TopDiaTop), so the conditions become existence
/// of an attaining neighbour:
///   BoxBotBot  for all b, z there is z' with Rbox(z,z') -> b <= b
///   TopDiaTop  for all z there is (a, z') with Rdia(z,z') -> a = bottom
inline bool check_condition_finite_chain(const GraphFrame& F, std::string_view label, AxiomId axiom) {
  const AGraph& G = F.graph();
  const TruthAlgebra& A = *G.algebra();
  if (!A.is_chain()) throw Error(ErrorCode::NotChain, "finite-chain criterion needs a linearly ordered algebra");
  const std::size_t nz = G.nodes()->size();
  switch (axiom) {
    case AxiomId::BoxBotBot: {
      const ARelation& R = F.box(label);
      for (std::size_t b = 0; b < A.size(); ++b)
        for (std::size_t z = 0; z < nz; ++z) {
          bool found = false;
          for (std::size_t w = 0; w < nz && !found; ++w) found = A.leq(A.implies(R(z, w), TruthValue(b)), TruthValue(b));
          if (!found) return false;
        }
      return true;
    }
    case AxiomId::TopDiaTop: {
      const ARelation& R = F.dia(label);
      for (std::size_t z = 0; z < nz; ++z) {
        bool found = false;
        for (std::size_t a = 0; a < A.size() && !found; ++a)
          for (std::size_t w = 0; w < nz && !found; ++w) found = A.implies(R(z, w), TruthValue(a)) == A.bottom();
        if (!found) return false;
      }
      return true;
    }
    default:
      throw Error(ErrorCode::InvalidSize, std::string("finite-chain criterion covers BoxBotBot and TopDiaTop, not ") +
                                              to_string(axiom));
  }
}

enum class Agreement { Agree, Disagree, Untested };

inline const char* to_string(Agreement a) {
  switch (a) {
    case Agreement::Agree: return "agree";
    case Agreement::Disagree: return "DISAGREE";
    case Agreement::Untested: return "untested";
  }
  return "?";
}

struct CorrespondenceOutcome {
  Agreement agreement = Agreement::Untested;
  std::optional<bool> axiom_valid;  // empty when the budget was exceeded
  bool condition_holds = false;
  ConditionResult condition;
};

/// Compares frame validity of the axiom (brute force) with its frame
/// condition. A budget overrun yields Untested, never Agree.
inline CorrespondenceOutcome correspondence_equivalence_test(const GraphFrame& F, std::string_view label,
                                                             AxiomId axiom, std::uint64_t budget = kDefaultBudget) {
  CorrespondenceOutcome out;
  out.condition = check_condition(F, label, axiom);
  out.condition_holds = out.condition.holds;
  const Sequent s = axiom_sequent(axiom, F.resolve_label(label));
  try {
    out.axiom_valid = sequent_valid_on_frame(F, s.lhs, s.rhs, budget).valid;
  } catch (const BudgetError&) {
    out.agreement = Agreement::Untested;
    return out;
  }
  out.agreement = *out.axiom_valid == out.condition_holds ? Agreement::Agree : Agreement::Disagree;
  return out;
}

}  // namespace mvg
