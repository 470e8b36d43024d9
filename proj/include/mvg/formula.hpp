#pragma once

#include <cctype>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mvg/error.hpp"

namespace mvg {

enum class FormulaKind { Bottom, Top, Atom, And, Or, Box, Dia };

/// Immutable multi-modal formula. Subterms are shared, so copies are cheap
/// and node identity (id()) is stable for memoization.
class Formula {
 public:
  static Formula bottom() { return Formula(make(FormulaKind::Bottom)); }
  static Formula top() { return Formula(make(FormulaKind::Top)); }
  static Formula atom(std::string name) {
    auto n = make(FormulaKind::Atom);
    n->text = std::move(name);
    return Formula(std::move(n));
  }
  static Formula conj(Formula l, Formula r) { return binary(FormulaKind::And, std::move(l), std::move(r)); }
  static Formula disj(Formula l, Formula r) { return binary(FormulaKind::Or, std::move(l), std::move(r)); }
  static Formula box(std::string label, Formula sub) { return unary(FormulaKind::Box, std::move(label), std::move(sub)); }
  static Formula dia(std::string label, Formula sub) { return unary(FormulaKind::Dia, std::move(label), std::move(sub)); }

  FormulaKind kind() const noexcept { return node_->kind; }
  /// Atom name for atoms, relation label for modalities (empty when unlabeled).
  const std::string& text() const noexcept { return node_->text; }
  const Formula& lhs() const { return node_->children.at(0); }
  const Formula& rhs() const { return node_->children.at(1); }
  const Formula& sub() const { return node_->children.at(0); }
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.text() != b.text()) return false;
    return a.node_->children == b.node_->children;
  }

 private:
  struct Node {
    FormulaKind kind;
    std::string text;
    std::vector<Formula> children;
  };

  explicit Formula(std::shared_ptr<Node> n) : node_(std::move(n)) {}

  static std::shared_ptr<Node> make(FormulaKind k) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    return n;
  }
  static Formula binary(FormulaKind k, Formula l, Formula r) {
    auto n = make(k);
    n->children = {std::move(l), std::move(r)};
    return Formula(std::move(n));
  }
  static Formula unary(FormulaKind k, std::string label, Formula s) {
    auto n = make(k);
    n->text = std::move(label);
    n->children = {std::move(s)};
    return Formula(std::move(n));
  }

  std::shared_ptr<const Node> node_;
};

inline void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Atom: out.insert(f.text()); break;
    case FormulaKind::And:
    case FormulaKind::Or:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
      break;
    case FormulaKind::Box:
    case FormulaKind::Dia: collect_atoms(f.sub(), out); break;
    default: break;
  }
}

inline std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Printing
//
// Precedence, loosest first: "|", "&", prefix modalities. Both binary
// operators associate to the left, and the printer emits only the
// parentheses the parser needs.

namespace detail {

inline void print(const Formula& f, int min_prec, std::string& out) {
  auto wrap = [&](int prec, auto&& body) {
    bool parens = prec < min_prec;
    if (parens) out += '(';
    body();
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case FormulaKind::Bottom: out += "bot"; break;
    case FormulaKind::Top: out += "top"; break;
    case FormulaKind::Atom: out += f.text(); break;
    case FormulaKind::Or:
      wrap(1, [&] {
        print(f.lhs(), 1, out);
        out += " | ";
        print(f.rhs(), 2, out);
      });
      break;
    case FormulaKind::And:
      wrap(2, [&] {
        print(f.lhs(), 2, out);
        out += " & ";
        print(f.rhs(), 3, out);
      });
      break;
    case FormulaKind::Box:
    case FormulaKind::Dia:
      out += f.kind() == FormulaKind::Box ? "[]" : "<>";
      if (!f.text().empty()) out += "_" + f.text();
      out += ' ';
      print(f.sub(), 3, out);
      break;
  }
}

}  // namespace detail

inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print(f, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing
//
//   sequent := formula ("|-" | "⊢") formula
//   formula := conj ("|" conj)*
//   conj    := unary ("&" unary)*
//   unary   := ("[]" | "<>") ["_" label] unary | primary
//   primary := "bot" | "top" | ident | "(" formula ")"

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Formula formula() {
    Formula f = conj();
    while (true) {
      skip();
      if (peek_turnstile()) break;
      if (!eat('|')) break;
      f = Formula::disj(std::move(f), conj());
    }
    return f;
  }

  void expect_end(bool in_sequent) {
    skip();
    if (pos_ < s_.size()) {
      std::vector<std::string> expected{"'&'", "'|'"};
      if (in_sequent) expected.push_back("'|-'");
      expected.push_back("end of input");
      fail(expected);
    }
  }

  void expect_turnstile() {
    skip();
    if (s_.substr(pos_, 2) == "|-") {
      pos_ += 2;
      return;
    }
    if (s_.substr(pos_, 3) == "\xE2\x8A\xA2") {  // U+22A2
      pos_ += 3;
      return;
    }
    fail({"'&'", "'|'", "'|-'"});
  }

 private:
  Formula conj() {
    Formula f = unary();
    while (true) {
      skip();
      if (!eat('&')) break;
      f = Formula::conj(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    skip();
    bool is_box = s_.substr(pos_, 2) == "[]";
    bool is_dia = s_.substr(pos_, 2) == "<>";
    if (is_box || is_dia) {
      pos_ += 2;
      std::string label;
      if (pos_ < s_.size() && s_[pos_] == '_') {
        ++pos_;
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        if (pos_ == start) fail({"relation label"});
        label = std::string(s_.substr(start, pos_ - start));
      }
      Formula sub = unary();
      return is_box ? Formula::box(std::move(label), std::move(sub)) : Formula::dia(std::move(label), std::move(sub));
    }
    return primary();
  }

  Formula primary() {
    skip();
    if (eat('(')) {
      Formula f = formula();
      skip();
      if (!eat(')')) fail({"'&'", "'|'", "')'"});
      return f;
    }
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string word(s_.substr(start, pos_ - start));
      if (word == "bot") return Formula::bottom();
      if (word == "top") return Formula::top();
      return Formula::atom(std::move(word));
    }
    fail({"atom", "'bot'", "'top'", "'('", "'[]'", "'<>'"});
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek_turnstile() const {
    return s_.substr(pos_, 2) == "|-" || s_.substr(pos_, 3) == "\xE2\x8A\xA2";
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found = pos_ >= s_.size() ? "end of input" : "'" + std::string(1, s_[pos_]) + "'";
    throw SyntaxError(pos_, std::move(expected), found);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse_formula(std::string_view text) {
  detail::Parser p(text);
  Formula f = p.formula();
  p.expect_end(false);
  return f;
}

struct Sequent {
  Formula lhs;
  Formula rhs;
};

/// "phi |- psi" (or with U+22A2).
inline Sequent parse_sequent(std::string_view text) {
  detail::Parser p(text);
  Formula lhs = p.formula();
  p.expect_turnstile();
  Formula rhs = p.formula();
  p.expect_end(false);
  return {std::move(lhs), std::move(rhs)};
}

inline std::string to_string(const Sequent& s) { return to_string(s.lhs) + " |- " + to_string(s.rhs); }

}  // namespace mvg
