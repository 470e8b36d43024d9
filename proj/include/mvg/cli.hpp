#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "mvg/analysis.hpp"
#include "mvg/case_study.hpp"
#include "mvg/frame_file.hpp"
#include "mvg/render.hpp"

namespace mvg::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;        // success, sequent true / valid, all checks pass
inline constexpr int kNegative = 1;  // sequent false / invalid, a check failed
inline constexpr int kError = 2;     // bad input, budget exceeded

enum class Format { Table, Json };

struct Options {
  std::uint64_t budget = kDefaultBudget;
  Format format = Format::Table;
  /// Close every valuation table instead of rejecting unstable ones.
  bool close = false;
};

namespace detail {

inline LoadOptions load_options(const Options& o, Checking checking = Checking::Enforce) {
  LoadOptions lo;
  lo.compatibility = checking;
  if (o.close) lo.mode = ValuationMode::Close;
  return lo;
}

}  // namespace detail

/// Prints the extent and intent of a formula under the file's valuation.
inline int cmd_eval(const std::string& path, const std::string& formula, const Options& o, std::ostream& out,
                    std::ostream& err) {
  try {
    const Formula f = parse_formula(formula);
    const FrameBundle b = load_frame(path, detail::load_options(o));
    const Concept c = eval(b.model(), f);
    if (o.format == Format::Json) {
      json j = json::object();
      j["formula"] = to_string(f);
      const json body = concept_to_json(c);
      for (const auto& [k, v] : body.items()) j[k] = v;
      out << j.dump(2) << "\n";
    } else {
      out << "extent [[" << to_string(f) << "]]\n" << render_extent(c.extent()) << "\n";
      out << "intent ((" << to_string(f) << "))\n" << render_intent(c.intent());
    }
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

/// Sequent truth in the file's model ("model") or validity on its frame ("frame").
inline int cmd_check(const std::string& path, const std::string& sequent, const std::string& mode,
                     const Options& o, std::ostream& out, std::ostream& err) {
  try {
    if (mode != "model" && mode != "frame") throw Error(ErrorCode::Schema, "mode must be 'model' or 'frame'");
    const Sequent s = parse_sequent(sequent);
    const FrameBundle b = load_frame(path, detail::load_options(o));
    bool verdict = false;
    std::optional<FrameValidity> validity;
    if (mode == "model") {
      verdict = sequent_true(b.model(), s.lhs, s.rhs);
    } else {
      validity = sequent_valid_on_frame(*b.frame, s.lhs, s.rhs, o.budget);
      verdict = validity->valid;
    }
    const TruthAlgebra& A = *b.frame->algebra();
    if (o.format == Format::Json) {
      json j = json::object();
      j["sequent"] = to_string(s);
      j["mode"] = mode;
      j["verdict"] = verdict;
      if (validity) {
        j["concepts"] = validity->concept_count;
        j["assignments_checked"] = validity->assignments_checked;
        if (validity->counterexample) {
          json cx = json::object();
          for (const auto& [atom, c] : *validity->counterexample) {
            json in = json::array();
            for (TruthValue v : c.intent().values()) in.push_back(value_to_json(A, v));
            cx[atom] = in;
          }
          j["counterexample_intents"] = cx;
        }
      }
      out << j.dump(2) << "\n";
    } else {
      out << to_string(s) << ": ";
      if (mode == "model") {
        out << (verdict ? "true" : "false") << " in the model\n";
      } else {
        out << (verdict ? "valid" : "not valid") << " on the frame (" << validity->concept_count << " concepts, "
            << validity->assignments_checked << " assignments checked)\n";
        if (validity->counterexample)
          for (const auto& [atom, c] : *validity->counterexample)
            out << "counterexample intent of " << atom << ":\n" << render_intent(c.intent());
      }
    }
    return verdict ? kOk : kNegative;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

struct AnalysisRow {
  std::string label;
  std::string check;
  bool passed = true;
  std::string detail;
};

/// Every frame-level check that applies to the file, one row each.
inline std::vector<AnalysisRow> analyze_frame(const GraphFrame& F) {
  std::vector<AnalysisRow> rows;
  const AGraph& G = F.graph();
  const TruthAlgebra& A = *G.algebra();
  {
    bool refl = is_reflexive(G.E());
    rows.push_back({"-", "E reflexive", refl, ""});
  }
  for (const auto& label : F.labels()) {
    const ModalPair& pair = F.relations(label);
    CompatibilityReport rep = check_E_compatibility(G, pair.box, pair.dia);
    std::string detail = std::to_string(rep.instances) + " instances";
    if (!rep.ok()) {
      const auto& f = rep.failures.front();
      std::string vals;
      for (TruthValue v : f.values) vals += (vals.empty() ? "" : ",") + A.format(v);
      detail = std::to_string(rep.failures.size()) + " of " + std::to_string(rep.instances) +
               " fail; first: " + f.family + " with values (" + vals + ") at " + f.element +
               ", closure exceeds it at " + f.point;
    }
    rows.push_back({label, "E-compatible", rep.ok(), detail});
    if (pair.box) rows.push_back({label, "E-reflexive (E <= Rbox)", check_E_reflexive(F, label), ""});
    for (AxiomId a : kAllAxioms) {
      if (uses_box(a) ? !pair.box : !pair.dia) continue;
      ConditionResult r = check_condition(F, label, a);
      rows.push_back({label, std::string("condition ") + to_string(a), r.holds, r.witness});
    }
  }
  return rows;
}

inline int cmd_analyze(const std::string& path, const Options& o, std::ostream& out, std::ostream& err) {
  try {
    const FrameBundle b = load_frame(path, detail::load_options(o, Checking::Skip));
    const auto rows = analyze_frame(*b.frame);
    bool all = true;
    for (const auto& r : rows) all = all && r.passed;
    if (o.format == Format::Json) {
      json arr = json::array();
      for (const auto& r : rows)
        arr.push_back({{"label", r.label}, {"check", r.check}, {"passed", r.passed}, {"detail", r.detail}});
      out << json{{"ok", all}, {"checks", arr}}.dump(2) << "\n";
    } else {
      std::size_t wl = 5, wc = 5;
      for (const auto& r : rows) {
        wl = std::max(wl, r.label.size());
        wc = std::max(wc, r.check.size());
      }
      out << mvg::detail::pad("label", wl) << "  " << mvg::detail::pad("check", wc) << "  result\n";
      for (const auto& r : rows) {
        out << mvg::detail::pad(r.label, wl) << "  " << mvg::detail::pad(r.check, wc) << "  "
            << (r.passed ? "pass" : "FAIL");
        if (!r.detail.empty()) out << "  " << r.detail;
        out << "\n";
      }
      out << (all ? "all checks pass" : "some checks FAIL") << "\n";
    }
    return all ? kOk : kNegative;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

/// Reproduces the bundled case study; optionally writes the bundle to a file.
inline int cmd_casestudy(const std::optional<std::string>& emit, std::ostream& out, std::ostream& err) {
  try {
    if (emit) save_frame(*emit, case_study::load_bundle());
    const case_study::Report r = case_study::reproduce();
    std::size_t ids = 0, ineqs = 0;
    auto show = [&](const case_study::CheckLine& l, std::size_t& count) {
      out << (l.passed ? "ok    " : "FAIL  ") << l.name << "\n";
      for (const auto& d : l.diffs) out << "        " << d << "\n";
      if (l.passed) ++count;
    };
    for (const auto& l : r.identities) show(l, ids);
    for (const auto& l : r.inequalities) show(l, ineqs);
    if (r.ok()) {
      out << ids << " identities/tables verified, " << ineqs << " inequalities verified\n";
      return kOk;
    }
    out << ids << " of " << r.identities.size() << " identities/tables and " << ineqs << " of "
        << r.inequalities.size() << " inequalities verified\n";
    return kNegative;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

/// Lists every concept of the frame's induced polarity.
inline int cmd_concepts(const std::string& path, const Options& o, std::ostream& out, std::ostream& err) {
  try {
    const FrameBundle b = load_frame(path, detail::load_options(o));
    const std::vector<Concept> cs = enumerate_concepts(b.frame->polarity(), o.budget);
    if (o.format == Format::Json) {
      json arr = json::array();
      for (const auto& c : cs) arr.push_back(concept_to_json(c));
      out << json{{"count", cs.size()}, {"concepts", arr}}.dump(2) << "\n";
    } else {
      out << cs.size() << " concepts\n";
      for (std::size_t i = 0; i < cs.size(); ++i) out << "#" << i << "\n" << render_intent(cs[i].intent());
    }
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace mvg::cli
