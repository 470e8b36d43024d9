#pragma once

#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "mvg/model.hpp"

namespace mvg {

using json = nlohmann::ordered_json;

// Frame file schema (JSON):
//
//   {
//     "algebra":    {"kind": "lukasiewicz", "size": 11}
//                 | {"kind": "goedel", "size": n}
//                 | {"kind": "table", "carrier": [..], "order": [[lo, hi], ..],
//                    "otimes": [[..]], "residuum": [[..]]},
//     "nodes":      ["z_A", ...],
//     "E":          [[v, ...], ...],                 // |Z| x |Z|, reflexive
//     "relations":  {"label": {"box": M, "dia": M | null}, ...},
//     "valuations": {"atom": [[v, ...], ...], ...},   // rows: carrier ascending, columns: nodes
//     "close":      false,
//     "meta":       {...}                            // free-form, preserved
//   }
//
// Values are strings ("0.3", "3/10", carrier names) or the integers 0 and 1.
// An omitted "dia" defaults to the converse of "box"; "dia": null declares a
// box-only label. A label may give only "dia".

struct LoadOptions {
  Checking compatibility = Checking::Enforce;
  /// Overrides the file's "close" flag when set.
  std::optional<ValuationMode> mode;
};

struct FrameBundle {
  std::shared_ptr<const GraphFrame> frame;
  /// Extent tables exactly as written in the file.
  std::map<std::string, AValuedSet> tables;
  std::vector<std::string> table_order;
  bool close = false;
  json meta = json::object();

  Model model() const {
    return make_valuation(frame, tables, close ? ValuationMode::Close : ValuationMode::Strict);
  }
};

class SchemaError : public Error {
 public:
  SchemaError(const std::string& pointer, const std::string& message)
      : Error(ErrorCode::Schema, (pointer.empty() ? std::string("(root)") : pointer) + ": " + message), pointer_(pointer) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

namespace detail {

inline std::string ptr(const std::string& base, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') escaped += "~0";
    else if (c == '/') escaped += "~1";
    else escaped += c;
  }
  return base + "/" + escaped;
}
inline std::string ptr(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

inline const json& member(const json& j, const std::string& base, const std::string& key) {
  if (!j.is_object()) throw SchemaError(base, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(ptr(base, key), "missing required member");
  return *it;
}

inline std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where, "expected a string");
  return j.get<std::string>();
}

inline TruthValue as_value(const TruthAlgebra& A, const json& j, const std::string& where) {
  std::optional<TruthValue> v;
  if (j.is_string()) {
    v = A.parse(j.get<std::string>());
  } else if (j.is_number_integer() || j.is_number_unsigned()) {
    auto k = j.get<std::int64_t>();
    if (k == 0) v = A.bottom();
    if (k == 1) v = A.top();
  } else {
    throw SchemaError(where, "truth values must be strings (or the integers 0 and 1)");
  }
  if (!v) throw SchemaError(where, "value " + j.dump() + " is not in the carrier");
  return *v;
}

inline std::vector<TruthValue> as_matrix(const TruthAlgebra& A, const json& j, const std::string& where,
                                         std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw SchemaError(where, "expected an array of " + std::to_string(rows) + " rows");
  std::vector<TruthValue> out;
  out.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw SchemaError(ptr(where, r), "expected a row of " + std::to_string(cols) + " values");
    for (std::size_t c = 0; c < cols; ++c) out.push_back(as_value(A, row[c], ptr(ptr(where, r), c)));
  }
  return out;
}

inline std::vector<std::vector<std::string>> as_name_table(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where, "expected an array of rows");
  std::vector<std::vector<std::string>> out;
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array()) throw SchemaError(ptr(where, r), "expected an array");
    std::vector<std::string> row;
    for (std::size_t c = 0; c < j[r].size(); ++c) row.push_back(as_string(j[r][c], ptr(ptr(where, r), c)));
    out.push_back(std::move(row));
  }
  return out;
}

inline AlgebraPtr load_algebra(const json& j, const std::string& where) {
  const std::string kind = as_string(member(j, where, "kind"), ptr(where, "kind"));
  auto size = [&]() -> std::size_t {
    const json& s = member(j, where, "size");
    if (!s.is_number_unsigned() && !s.is_number_integer()) throw SchemaError(ptr(where, "size"), "expected an integer");
    auto n = s.get<std::int64_t>();
    if (n < 2 || n > 1000) throw SchemaError(ptr(where, "size"), "size must be between 2 and 1000");
    return static_cast<std::size_t>(n);
  };
  if (kind == "lukasiewicz") return make_lukasiewicz_chain(size());
  if (kind == "goedel") return make_goedel_chain(size());
  if (kind == "table") {
    const json& carrier_j = member(j, where, "carrier");
    if (!carrier_j.is_array()) throw SchemaError(ptr(where, "carrier"), "expected an array of names");
    std::vector<std::string> carrier;
    for (std::size_t i = 0; i < carrier_j.size(); ++i)
      carrier.push_back(as_string(carrier_j[i], ptr(ptr(where, "carrier"), i)));
    std::vector<std::pair<std::string, std::string>> order;
    const json& order_j = member(j, where, "order");
    if (!order_j.is_array()) throw SchemaError(ptr(where, "order"), "expected an array of [lower, upper] pairs");
    for (std::size_t i = 0; i < order_j.size(); ++i) {
      const std::string here = ptr(ptr(where, "order"), i);
      if (!order_j[i].is_array() || order_j[i].size() != 2) throw SchemaError(here, "expected [lower, upper]");
      order.emplace_back(as_string(order_j[i][0], ptr(here, 0)), as_string(order_j[i][1], ptr(here, 1)));
    }
    try {
      return make_table_algebra(std::move(carrier), order,
                                as_name_table(member(j, where, "otimes"), ptr(where, "otimes")),
                                as_name_table(member(j, where, "residuum"), ptr(where, "residuum")));
    } catch (const SchemaError&) {
      throw;
    } catch (const Error& e) {
      throw SchemaError(where, e.what());
    }
  }
  throw SchemaError(ptr(where, "kind"), "unknown algebra kind '" + kind + "'");
}

inline json algebra_to_json(const TruthAlgebra& A) {
  json j = json::object();
  if (A.kind() == AlgebraKind::Lukasiewicz || A.kind() == AlgebraKind::Goedel) {
    j["kind"] = A.kind() == AlgebraKind::Lukasiewicz ? "lukasiewicz" : "goedel";
    j["size"] = A.size();
    return j;
  }
  j["kind"] = "table";
  j["carrier"] = A.carrier_names();
  json order = json::array();
  // Covering pairs generate the order.
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t b = 0; b < A.size(); ++b) {
      if (a == b || !A.leq(TruthValue(a), TruthValue(b))) continue;
      bool cover = true;
      for (std::size_t c = 0; c < A.size() && cover; ++c)
        if (c != a && c != b && A.leq(TruthValue(a), TruthValue(c)) && A.leq(TruthValue(c), TruthValue(b)))
          cover = false;
      if (cover) order.push_back(json::array({A.format(TruthValue(a)), A.format(TruthValue(b))}));
    }
  j["order"] = order;
  json ot = json::array(), res = json::array();
  for (std::size_t a = 0; a < A.size(); ++a) {
    json r1 = json::array(), r2 = json::array();
    for (std::size_t b = 0; b < A.size(); ++b) {
      r1.push_back(A.format(A.otimes(TruthValue(a), TruthValue(b))));
      r2.push_back(A.format(A.implies(TruthValue(a), TruthValue(b))));
    }
    ot.push_back(r1);
    res.push_back(r2);
  }
  j["otimes"] = ot;
  j["residuum"] = res;
  return j;
}

inline json matrix_to_json(const TruthAlgebra& A, std::span<const TruthValue> values, std::size_t cols) {
  json out = json::array();
  for (std::size_t r = 0; r * cols < values.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < cols; ++c) row.push_back(A.format(values[r * cols + c]));
    out.push_back(row);
  }
  return out;
}

}  // namespace detail

inline FrameBundle load_frame_json(const json& root, const LoadOptions& opts = {}) {
  using namespace detail;
  if (!root.is_object()) throw SchemaError("", "frame file must be a JSON object");
  AlgebraPtr alg = load_algebra(member(root, "", "algebra"), "/algebra");
  const TruthAlgebra& A = *alg;

  const json& nodes_j = member(root, "", "nodes");
  if (!nodes_j.is_array() || nodes_j.empty()) throw SchemaError("/nodes", "expected a nonempty array of node names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nodes_j.size(); ++i) {
    std::string n = as_string(nodes_j[i], ptr("/nodes", i));
    if (std::find(names.begin(), names.end(), n) != names.end())
      throw SchemaError(ptr("/nodes", i), "duplicate node '" + n + "'");
    names.push_back(std::move(n));
  }
  DomainPtr Z = Domain::make(names);
  const std::size_t nz = Z->size();

  ARelation E(alg, Z, Z, as_matrix(A, member(root, "", "E"), "/E", nz, nz));
  for (std::size_t z = 0; z < nz; ++z)
    if (E(z, z) != A.top())
      throw SchemaError(ptr(ptr("/E", z), z), "E must be reflexive; diagonal entry (" + Z->label(z) + "," +
                                                  Z->label(z) + ") is " + A.format(E(z, z)));
  AGraph G(alg, Z, E);

  std::vector<std::pair<std::string, ModalPair>> relations;
  if (auto it = root.find("relations"); it != root.end()) {
    if (!it->is_object()) throw SchemaError("/relations", "expected an object keyed by label");
    for (const auto& [label, spec] : it->items()) {
      const std::string where = ptr("/relations", label);
      if (label.empty()) throw SchemaError(where, "relation labels must be nonempty");
      for (char c : label)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
          throw SchemaError(where, "relation labels may contain only letters, digits and '_'");
      if (!spec.is_object()) throw SchemaError(where, "expected an object with \"box\" and/or \"dia\"");
      ModalPair pair;
      if (auto b = spec.find("box"); b != spec.end() && !b->is_null())
        pair.box = ARelation(alg, Z, Z, as_matrix(A, *b, ptr(where, "box"), nz, nz));
      if (auto d = spec.find("dia"); d != spec.end()) {
        if (!d->is_null()) pair.dia = ARelation(alg, Z, Z, as_matrix(A, *d, ptr(where, "dia"), nz, nz));
      } else if (pair.box) {
        pair.dia = pair.box->converse();
      }
      if (!pair.box && !pair.dia) throw SchemaError(where, "label declares neither \"box\" nor \"dia\"");
      relations.emplace_back(label, std::move(pair));
    }
  }

  FrameBundle bundle;
  bundle.frame = std::make_shared<const GraphFrame>(G, std::move(relations), opts.compatibility);
  if (auto c = root.find("close"); c != root.end()) {
    if (!c->is_boolean()) throw SchemaError("/close", "expected a boolean");
    bundle.close = c->get<bool>();
  }
  if (opts.mode) bundle.close = *opts.mode == ValuationMode::Close;
  if (auto m = root.find("meta"); m != root.end()) bundle.meta = *m;

  if (auto v = root.find("valuations"); v != root.end()) {
    if (!v->is_object()) throw SchemaError("/valuations", "expected an object keyed by atom");
    for (const auto& [atom, table] : v->items()) {
      const std::string where = ptr("/valuations", atom);
      Formula parsed = Formula::bottom();
      try {
        parsed = parse_formula(atom);
      } catch (const SyntaxError&) {
        throw SchemaError(where, "'" + atom + "' is not a valid atom name");
      }
      if (parsed.kind() != FormulaKind::Atom || parsed.text() != atom)
        throw SchemaError(where, "'" + atom + "' is not a valid atom name");
      bundle.tables.emplace(atom, AValuedSet(alg, G.value_nodes(), as_matrix(A, table, where, A.size(), nz)));
      bundle.table_order.push_back(atom);
    }
  }
  // Surface stability failures at load time rather than at first use.
  for (const auto& [atom, table] : bundle.tables) {
    if (bundle.close) break;
    if (!is_stable_extent(bundle.frame->polarity(), table)) {
      try {
        make_valuation(bundle.frame, {{atom, table}}, ValuationMode::Strict);
      } catch (const Error& e) {
        throw SchemaError(ptr("/valuations", atom), e.what());
      }
    }
  }
  return bundle;
}

inline FrameBundle load_frame(const std::string& path, const LoadOptions& opts = {}) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Schema, "cannot open frame file '" + path + "'");
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  return load_frame_json(root, opts);
}

inline json frame_to_json(const FrameBundle& b) {
  using namespace detail;
  const GraphFrame& F = *b.frame;
  const TruthAlgebra& A = *F.algebra();
  const std::size_t nz = F.graph().nodes()->size();
  json root = json::object();
  root["algebra"] = algebra_to_json(A);
  root["nodes"] = F.graph().nodes()->labels();
  root["E"] = matrix_to_json(A, F.graph().E().values(), nz);
  json rels = json::object();
  for (const auto& label : F.labels()) {
    const ModalPair& pair = F.relations(label);
    json spec = json::object();
    if (pair.box) spec["box"] = matrix_to_json(A, pair.box->values(), nz);
    if (pair.dia) {
      if (!pair.box || !(*pair.dia == pair.box->converse())) spec["dia"] = matrix_to_json(A, pair.dia->values(), nz);
    } else {
      spec["dia"] = nullptr;
    }
    rels[label] = spec;
  }
  root["relations"] = rels;
  json vals = json::object();
  for (const auto& atom : b.table_order) vals[atom] = matrix_to_json(A, b.tables.at(atom).values(), nz);
  root["valuations"] = vals;
  root["close"] = b.close;
  if (!b.meta.empty()) root["meta"] = b.meta;
  return root;
}

inline void save_frame(const std::string& path, const FrameBundle& b) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Schema, "cannot write frame file '" + path + "'");
  out << frame_to_json(b).dump(2) << "\n";
}

}  // namespace mvg
