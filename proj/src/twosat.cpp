#include "monohs/twosat.hpp"

#include <algorithm>
#include <sstream>

#include "monohs/errors.hpp"

namespace monohs {

void TwoSatInstance::add(Lit a, Lit b, ClauseTag tag) {
  if (a.var >= vars_ || b.var >= vars_) throw BadInput("literal out of range");
  clauses_.push_back({a, b, tag});
}

namespace {

std::uint32_t node(Lit l) { return 2 * l.var + (l.positive ? 0u : 1u); }

// Iterative Tarjan; comp[] numbers components in completion order, which is a
// reverse topological order of the condensation.
std::vector<std::uint32_t> tarjan(const std::vector<std::vector<std::uint32_t>>& adj) {
  const auto n = static_cast<std::uint32_t>(adj.size());
  constexpr std::uint32_t unset = ~0u;
  std::vector<std::uint32_t> index(n, unset), low(n, 0), comp(n, unset);
  std::vector<std::uint32_t> stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::pair<std::uint32_t, std::size_t>> call;
  std::uint32_t counter = 0, comps = 0;
  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != unset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos < adj[v].size()) {
        std::uint32_t w = adj[v][pos++];
        if (index[w] == unset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comps;
        } while (w != v);
        ++comps;
      }
      std::uint32_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return comp;
}

}  // namespace

std::optional<Assignment> solve(const TwoSatInstance& inst, std::span<const Lit> assume) {
  const std::size_t n = inst.var_count();
  std::vector<std::vector<std::uint32_t>> adj(2 * n);
  auto clause = [&](Lit a, Lit b) {
    adj[node(~a)].push_back(node(b));
    adj[node(~b)].push_back(node(a));
  };
  for (const auto& c : inst.clauses()) clause(c.a, c.b);
  for (const auto& l : assume) {
    if (l.var >= n) throw BadInput("assumption out of range");
    clause(l, l);
  }
  auto comp = tarjan(adj);
  Assignment out(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    std::uint32_t t = comp[node(pos(v))], f = comp[node(neg(v))];
    if (t == f) return std::nullopt;
    out[v] = t < f;
  }
  return out;
}

std::optional<Assignment> solve(const TwoSatInstance& inst) { return solve(inst, {}); }

bool satisfies(const TwoSatInstance& inst, const Assignment& a) {
  if (a.size() != inst.var_count()) return false;
  auto val = [&](Lit l) { return a[l.var] == l.positive; };
  for (const auto& c : inst.clauses())
    if (!val(c.a) && !val(c.b)) return false;
  return true;
}

Forced forced_value(const TwoSatInstance& inst, std::uint32_t v) {
  if (v >= inst.var_count()) throw BadInput("variable out of range");
  Lit zero = neg(v), one = pos(v);
  bool can0 = solve(inst, std::span<const Lit>(&zero, 1)).has_value();
  bool can1 = solve(inst, std::span<const Lit>(&one, 1)).has_value();
  if (!can0 && !can1) throw UnsatInstance("instance is unsatisfiable");
  if (!can0) return Forced::One;
  if (!can1) return Forced::Zero;
  return Forced::Free;
}

std::vector<EquivalenceClass> equivalence_groups(const TwoSatInstance& inst,
                                                 std::span<const std::uint32_t> vars) {
  for (auto v : vars)
    if (forced_value(inst, v) != Forced::Free)
      throw ForcedVariable("variable " + std::to_string(v) + " is forced");

  auto sat = [&](std::uint32_t x, bool vx, std::uint32_t y, bool vy) {
    Lit as[2] = {{x, vx}, {y, vy}};
    return solve(inst, as).has_value();
  };

  // Equivalence is transitive, so one probe set against each class
  // representative decides membership.
  std::vector<EquivalenceClass> classes;
  for (auto v : vars) {
    bool placed = false;
    for (auto& cls : classes) {
      std::uint32_t r = cls.group1.front();
      bool s00 = sat(r, false, v, false), s11 = sat(r, true, v, true);
      bool s01 = sat(r, false, v, true), s10 = sat(r, true, v, false);
      if (!s01 && !s10 && (s00 || s11)) {
        cls.group1.push_back(v);
        placed = true;
      } else if (!s00 && !s11 && (s01 || s10)) {
        cls.group2.push_back(v);
        placed = true;
      }
      if (placed) break;
    }
    if (!placed) classes.push_back({{v}, {}});
  }
  return classes;
}

std::string to_dimacs(const TwoSatInstance& inst) {
  std::ostringstream out;
  out << "p cnf " << inst.var_count() << " " << inst.clauses().size() << "\n";
  auto lit = [](Lit l) { return (l.positive ? 1 : -1) * static_cast<long>(l.var + 1); };
  for (const auto& c : inst.clauses()) {
    if (c.a == c.b)
      out << lit(c.a) << " 0\n";
    else
      out << lit(c.a) << " " << lit(c.b) << " 0\n";
  }
  return out.str();
}

}  // namespace monohs
