#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"

#include "mvg/polarity.hpp"

namespace mvg {

namespace detail {

inline std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

inline std::string render_grid(const std::string& corner, const std::vector<std::string>& row_heads,
                               const std::vector<std::string>& col_heads,
                               const std::vector<std::vector<std::string>>& cells) {
  std::size_t head_w = corner.size();
  for (const auto& h : row_heads) head_w = std::max(head_w, h.size());
  std::vector<std::size_t> w(col_heads.size());
  for (std::size_t c = 0; c < col_heads.size(); ++c) {
    w[c] = col_heads[c].size();
    for (const auto& row : cells) w[c] = std::max(w[c], row[c].size());
  }
  auto line = [&](const std::string& head, const std::vector<std::string>& row) {
    std::string out = pad(head, head_w) + " |";
    for (std::size_t c = 0; c < row.size(); ++c) out += " " + pad(row[c], w[c]);
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + "\n";
  };
  std::string out = line(corner, col_heads);
  std::size_t total = 1;
  for (auto x : w) total += x + 1;
  out += std::string(head_w + 1, '-') + "+" + std::string(total - 1, '-') + "\n";
  for (std::size_t r = 0; r < cells.size(); ++r) out += line(row_heads[r], cells[r]);
  return out;
}

}  // namespace detail

/// Extent over A x Z as a grid: one row per truth value (carrier order), one
/// column per node.
inline std::string render_extent(const AValuedSet& f) {
  const Domain& D = *f.domain();
  if (!D.is_product()) throw Error(ErrorCode::IndexMismatch, "extent table needs a value-node domain");
  const TruthAlgebra& A = *f.algebra();
  const Domain& Z = *D.nodes();
  std::vector<std::string> rows;
  std::vector<std::vector<std::string>> cells;
  for (std::size_t b = 0; b < A.size(); ++b) {
    rows.push_back(A.format(TruthValue(b)));
    std::vector<std::string> row;
    for (std::size_t z = 0; z < Z.size(); ++z) row.push_back(A.format(f[D.pair_index(TruthValue(b), z)]));
    cells.push_back(std::move(row));
  }
  return detail::render_grid("beta", rows, Z.labels(), cells);
}

/// Intent over Z as a single row.
inline std::string render_intent(const AValuedSet& u) {
  const TruthAlgebra& A = *u.algebra();
  std::vector<std::string> row;
  for (TruthValue v : u.values()) row.push_back(A.format(v));
  return detail::render_grid("z", {""}, u.domain()->labels(), {row});
}

/// Exact JSON encoding of a value: the numerator for chains, the carrier
/// name otherwise.
inline nlohmann::ordered_json value_to_json(const TruthAlgebra& A, TruthValue v) {
  if (A.kind() == AlgebraKind::Table) return A.format(v);
  return v.index();
}

inline nlohmann::ordered_json concept_to_json(const Concept& c) {
  using json = nlohmann::ordered_json;
  const AValuedSet& f = c.extent();
  const TruthAlgebra& A = *f.algebra();
  const Domain& D = *f.domain();
  json out = json::object();
  if (A.kind() != AlgebraKind::Table) out["denominator"] = A.denominator();
  else out["carrier"] = A.carrier_names();
  out["nodes"] = D.nodes()->labels();
  json ext = json::array();
  for (std::size_t b = 0; b < A.size(); ++b) {
    json row = json::array();
    for (std::size_t z = 0; z < D.node_count(); ++z) row.push_back(value_to_json(A, f[D.pair_index(TruthValue(b), z)]));
    ext.push_back(row);
  }
  out["extent"] = ext;
  json in = json::array();
  for (TruthValue v : c.intent().values()) in.push_back(value_to_json(A, v));
  out["intent"] = in;
  return out;
}

}  // namespace mvg
