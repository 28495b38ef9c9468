#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace monohs {

struct Lit {
  std::uint32_t var;
  bool positive;
  Lit operator~() const { return {var, !positive}; }
  bool operator==(const Lit&) const = default;
};

inline Lit pos(std::uint32_t v) { return {v, true}; }
inline Lit neg(std::uint32_t v) { return {v, false}; }

enum class ClauseTag { Equality, Difference, ImplicationA, ImplicationB, Unit };

struct Clause {
  Lit a;
  Lit b;
  ClauseTag tag = ClauseTag::Unit;
};

class TwoSatInstance {
 public:
  explicit TwoSatInstance(std::size_t var_count = 0) : vars_(var_count) {}
  std::size_t var_count() const { return vars_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  void add(Lit a, Lit b, ClauseTag tag);
  void add_unit(Lit a) { add(a, a, ClauseTag::Unit); }

 private:
  std::size_t vars_;
  std::vector<Clause> clauses_;
};

using Assignment = std::vector<bool>;

// Implication graph, Tarjan SCC, and x = 1 iff comp(x) precedes comp(¬x) in
// Tarjan's completion order.
std::optional<Assignment> solve(const TwoSatInstance& inst);
std::optional<Assignment> solve(const TwoSatInstance& inst, std::span<const Lit> assume);

bool satisfies(const TwoSatInstance& inst, const Assignment& a);

enum class Forced { Zero, One, Free };

Forced forced_value(const TwoSatInstance& inst, std::uint32_t v);

struct EquivalenceClass {
  std::vector<std::uint32_t> group1;
  std::vector<std::uint32_t> group2;
};

// Classes in order of their first listed variable; group1 holds that variable.
std::vector<EquivalenceClass> equivalence_groups(const TwoSatInstance& inst,
                                                 std::span<const std::uint32_t> vars);

std::string to_dimacs(const TwoSatInstance& inst);

}  // namespace monohs
