#pragma once

// Seeded random instances for property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mvg/mvg.hpp"

namespace gen {

using mvg::AlgebraPtr;
using mvg::TruthValue;

/// Fixed seeds keep every property test reproducible.
inline constexpr std::uint32_t kSeed = 20261016;

class Rng {
 public:
  explicit Rng(std::uint32_t seed = kSeed) : eng_(seed) {}
  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
  std::mt19937& engine() { return eng_; }

 private:
  std::mt19937 eng_;
};

/// The four-element diamond 0 < a, b < 1 with otimes = meet and the relative
/// pseudocomplement as residuum.
inline AlgebraPtr diamond() {
  std::vector<std::string> c{"0", "a", "b", "1"};
  auto meet = [](int x, int y) {
    if (x == y) return x;
    if (x == 3) return y;
    if (y == 3) return x;
    return 0;
  };
  auto leq = [&](int x, int y) { return meet(x, y) == x; };
  std::vector<std::vector<std::string>> ot(4, std::vector<std::string>(4)), res = ot;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      ot[x][y] = c[meet(x, y)];
      int best = 0;
      for (int z = 0; z < 4; ++z)
        if (leq(meet(x, z), y) && leq(best, z)) best = z;
      res[x][y] = c[best];
    }
  return mvg::make_table_algebra(c, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}, ot, res);
}

/// A small algebra drawn from the chain families and the diamond, carrier <= max_size.
inline AlgebraPtr algebra(Rng& r, std::size_t max_size = 5) {
  std::size_t pick = r.below(max_size >= 4 ? 3 : 2);
  if (pick == 2) return diamond();
  std::size_t n = 2 + r.below(max_size - 1);
  return pick == 0 ? mvg::make_lukasiewicz_chain(n) : mvg::make_goedel_chain(n);
}

inline mvg::DomainPtr domain(const std::string& prefix, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return mvg::Domain::make(labels);
}

inline mvg::AValuedSet set(Rng& r, const AlgebraPtr& A, const mvg::DomainPtr& W) {
  std::vector<TruthValue> v;
  for (std::size_t i = 0; i < W->size(); ++i) v.push_back(TruthValue(r.below(A->size())));
  return mvg::AValuedSet(A, W, v);
}

inline mvg::ARelation relation(Rng& r, const AlgebraPtr& A, const mvg::DomainPtr& U, const mvg::DomainPtr& W) {
  return mvg::ARelation::generate(A, U, W, [&](std::size_t, std::size_t) { return TruthValue(r.below(A->size())); });
}

/// Random relation with top on the diagonal.
inline mvg::ARelation reflexive(Rng& r, const AlgebraPtr& A, const mvg::DomainPtr& Z) {
  return mvg::ARelation::generate(A, Z, Z, [&](std::size_t i, std::size_t j) {
    return i == j ? A->top() : TruthValue(r.below(A->size()));
  });
}

/// Every relation Z x Z over A, row-major odometer order.
template <class Fn>
void for_each_relation(const AlgebraPtr& A, const mvg::DomainPtr& Z, Fn&& fn) {
  const std::size_t cells = Z->size() * Z->size();
  std::vector<std::size_t> digits(cells, 0);
  while (true) {
    std::vector<TruthValue> vals;
    for (auto d : digits) vals.push_back(TruthValue(d));
    fn(mvg::ARelation(A, Z, Z, vals));
    std::size_t carried = 0;
    for (; carried < cells; ++carried) {
      std::size_t& d = digits[cells - 1 - carried];
      if (++d < A->size()) break;
      d = 0;
    }
    if (carried == cells) return;
  }
}

/// Random formula over the given atoms and labels with at most `depth` nesting.
inline mvg::Formula formula(Rng& r, int depth, const std::vector<std::string>& atoms,
                            const std::vector<std::string>& labels) {
  using mvg::Formula;
  if (depth <= 0 || r.below(4) == 0) {
    std::size_t k = r.below(atoms.size() + 2);
    if (k == atoms.size()) return Formula::top();
    if (k == atoms.size() + 1) return Formula::bottom();
    return Formula::atom(atoms[k]);
  }
  switch (r.below(4)) {
    case 0: return Formula::conj(formula(r, depth - 1, atoms, labels), formula(r, depth - 1, atoms, labels));
    case 1: return Formula::disj(formula(r, depth - 1, atoms, labels), formula(r, depth - 1, atoms, labels));
    case 2: return Formula::box(labels[r.below(labels.size())], formula(r, depth - 1, atoms, labels));
    default: return Formula::dia(labels[r.below(labels.size())], formula(r, depth - 1, atoms, labels));
  }
}

}  // namespace gen
