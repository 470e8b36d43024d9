#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "mvg/frame_file.hpp"

namespace mvg::case_study {

// Three databases z_A, z_M, z_H built under three theories of weight loss,
// over the 11-element Lukasiewicz chain. Each label's dia relation is the
// converse of its box relation (see "meta").
inline constexpr std::string_view kBundleJson = R"json(
{
  "algebra": {
    "kind": "lukasiewicz",
    "size": 11
  },
  "nodes": ["z_A", "z_M", "z_H"],
  "E": [
    ["1.0", "0.2", "0.6"],
    ["1.0", "1.0", "1.0"],
    ["1.0", "0.4", "1.0"]
  ],
  "relations": {
    "A": {
      "box": [
        ["1.0", "0.2", "0.6"],
        ["1.0", "1.0", "1.0"],
        ["1.0", "0.4", "1.0"]
      ]
    },
    "M": {
      "box": [
        ["1.0", "1.0", "1.0"],
        ["1.0", "1.0", "1.0"],
        ["1.0", "1.0", "1.0"]
      ]
    },
    "H": {
      "box": [
        ["1.0", "0.3", "0.9"],
        ["1.0", "1.0", "1.0"],
        ["1.0", "0.5", "1.0"]
      ]
    }
  },
  "valuations": {
    "phi": [
      ["0.5", "0.5", "0.5"],
      ["0.6", "0.6", "0.6"],
      ["0.7", "0.7", "0.7"],
      ["0.8", "0.8", "0.8"],
      ["0.9", "0.9", "0.9"],
      ["1.0", "1.0", "1.0"],
      ["1.0", "1.0", "1.0"],
      ["1.0", "1.0", "1.0"],
      ["1.0", "1.0", "1.0"],
      ["1.0", "1.0", "1.0"],
      ["1.0", "1.0", "1.0"]
    ],
    "psi": [
      ["0.8", "0.4", "0.8"],
      ["0.9", "0.5", "0.9"],
      ["1.0", "0.6", "1.0"],
      ["1.0", "0.7", "1.0"],
      ["1.0", "0.8", "1.0"],
      ["1.0", "0.9", "1.0"],
      ["1.0", "1.0", "1.0"],
      ["1.0", "1.0", "1.0"],
      ["1.0", "1.0", "1.0"],
      ["1.0", "1.0", "1.0"],
      ["1.0", "1.0", "1.0"]
    ]
  },
  "close": false,
  "meta": {
    "title": "Competing theories of weight loss: three databases, three theories",
    "dia": "each label's dia relation is the converse of its box relation"
  }
}
)json";

/// Expected tables as numerators over 10, rows beta = 0..10, columns z_A, z_M, z_H.
using Table = std::array<std::array<int, 3>, 11>;

inline constexpr Table kPhi{{{5, 5, 5}, {6, 6, 6}, {7, 7, 7}, {8, 8, 8}, {9, 9, 9}, {10, 10, 10},
                             {10, 10, 10}, {10, 10, 10}, {10, 10, 10}, {10, 10, 10}, {10, 10, 10}}};
inline constexpr Table kPsi{{{8, 4, 8}, {9, 5, 9}, {10, 6, 10}, {10, 7, 10}, {10, 8, 10}, {10, 9, 10},
                             {10, 10, 10}, {10, 10, 10}, {10, 10, 10}, {10, 10, 10}, {10, 10, 10}}};
inline constexpr Table kBoxMPsi{{{4, 4, 4}, {5, 5, 5}, {6, 6, 6}, {7, 7, 7}, {8, 8, 8}, {9, 9, 9},
                                 {10, 10, 10}, {10, 10, 10}, {10, 10, 10}, {10, 10, 10}, {10, 10, 10}}};

inline FrameBundle load_bundle(const LoadOptions& opts = {}) {
  return load_frame_json(json::parse(kBundleJson), opts);
}

inline AValuedSet table_to_set(const FrameBundle& b, const Table& t) {
  const auto& ZA = b.frame->graph().value_nodes();
  std::vector<TruthValue> values;
  for (const auto& row : t)
    for (int v : row) values.push_back(TruthValue(static_cast<std::size_t>(v)));
  return AValuedSet(b.frame->algebra(), ZA, std::move(values));
}

struct CheckLine {
  std::string name;
  bool passed = true;
  std::vector<std::string> diffs;
};

struct Report {
  std::vector<CheckLine> identities;
  std::vector<CheckLine> inequalities;

  bool ok() const {
    for (const auto& l : identities)
      if (!l.passed) return false;
    for (const auto& l : inequalities)
      if (!l.passed) return false;
    return true;
  }
};

namespace detail {

inline CheckLine compare(std::string name, const AValuedSet& got, const AValuedSet& want, bool equality) {
  CheckLine line{std::move(name), true, {}};
  const TruthAlgebra& A = *got.algebra();
  const Domain& D = *got.domain();
  for (std::size_t i = 0; i < D.size(); ++i) {
    bool good = equality ? got[i] == want[i] : A.leq(got[i], want[i]);
    if (good) continue;
    line.passed = false;
    line.diffs.push_back("cell " + D.label(i) + ": expected " + (equality ? "" : "<= ") + A.format(want[i]) +
                         ", got " + A.format(got[i]));
  }
  return line;
}

}  // namespace detail

/// Recomputes the four tables and the two inequalities from the embedded
/// bundle and diffs them against the embedded expected tables.
inline Report reproduce() {
  const FrameBundle b = load_bundle();
  const Model M = b.model();
  const AValuedSet phi = table_to_set(b, kPhi), psi = table_to_set(b, kPsi), box_m_psi = table_to_set(b, kBoxMPsi);
  auto ext = [&](const char* text) { return eval(M, parse_formula(text)).extent(); };

  Report r;
  r.identities.push_back(detail::compare("[[[]_M psi]] = printed table", ext("[]_M psi"), box_m_psi, true));
  r.identities.push_back(detail::compare("[[[]_H phi]] = [[phi]]", ext("[]_H phi"), phi, true));
  r.identities.push_back(detail::compare("[[[]_H psi]] = [[psi]]", ext("[]_H psi"), psi, true));
  r.identities.push_back(detail::compare("[[[]_M phi]] = [[phi]]", ext("[]_M phi"), phi, true));
  r.inequalities.push_back(detail::compare("[[[]_M psi]] <= [[phi]]", ext("[]_M psi"), ext("phi"), false));
  r.inequalities.push_back(detail::compare("[[[]_M psi]] <= [[psi]]", ext("[]_M psi"), ext("psi"), false));
  return r;
}

}  // namespace mvg::case_study
