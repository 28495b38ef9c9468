#include "monohs/errors.hpp"
#include "monohs/learn.hpp"

namespace monohs {

std::size_t count_mistakes(const Sample& x, const VertexSet& h) {
  return (x.positives() - h).count() + (x.negatives() & h).count();
}

ErmResult erm(const Graph& g, const DecompositionTable& table, const Sample& x) {
  const std::size_t support = x.size();
  if (support == 0) throw EmptySample("ERM needs at least one labeled vertex");
  const VertexSet pos = x.positives(), neg = x.negatives();

  ErmResult best{g.empty_set(), {count_mistakes(x, g.empty_set()), support}};
  if (std::size_t m = count_mistakes(x, g.all()); m < best.risk.mistakes) best = {g.all(), {m, support}};

  for (const auto& dec : table.decs) {
    if (!dec) continue;
    const std::size_t np = dec->pairs.size();
    // Mistakes inside a pair when C' is in H (first) or C'' is in H (second).
    std::vector<std::size_t> first(np), second(np);
    for (std::size_t i = 0; i < np; ++i) {
      const auto& p = dec->pairs[i];
      first[i] = (neg & p.first).count() + (pos & p.second).count();
      second[i] = (neg & p.second).count() + (pos & p.first).count();
    }
    const std::size_t base = (neg & dec->a_star).count() + (pos & dec->b_star).count();
    const std::size_t p = dec->blocks.size();
    std::vector<std::size_t> before(p + 1, 0), after(p + 1, 0);
    for (std::size_t j = 0; j < p; ++j) {
      std::size_t s = 0;
      for (auto i : dec->blocks[j]) s += first[i];
      before[j + 1] = before[j] + s;
    }
    for (std::size_t j = p; j-- > 0;) {
      std::size_t s = 0;
      for (auto i : dec->blocks[j]) s += second[i];
      after[j] = after[j + 1] + s;
    }
    for (std::size_t l = 0; l < p; ++l) {
      std::size_t total = base + before[l] + after[l + 1];
      for (auto i : dec->blocks[l]) total += std::min(first[i], second[i]);
      if (total >= best.risk.mistakes) continue;
      std::vector<std::size_t> chosen;
      for (auto i : dec->blocks[l])
        if (first[i] <= second[i]) chosen.push_back(i);
      best = {reconstruct(*dec, l, chosen), {total, support}};
    }
  }
  return best;
}

ErmResult erm(const Graph& g, const Sample& x) {
  if (x.size() == 0) throw EmptySample("ERM needs at least one labeled vertex");
  return erm(g, decompose_all(g), x);
}

}  // namespace monohs
