#include <unordered_set>

#include "monohs/errors.hpp"
#include "monohs/learn.hpp"

namespace monohs {

std::string to_string(FeatureSource s) {
  switch (s) {
    case FeatureSource::AStar:
      return "astar";
    case FeatureSource::CellHalf:
      return "cell-half";
    case FeatureSource::BelowBlock:
      return "below-block";
    case FeatureSource::AboveBlock:
      return "above-block";
    case FeatureSource::Universe:
      return "universe";
  }
  return "?";
}

FeatureFamily build_feature_family(const Graph& g, const DecompositionTable& table) {
  FeatureFamily fam;
  std::unordered_set<VertexSet, VertexSetHash> seen;
  auto add = [&](const VertexSet& s, FeatureSource src, Edge e, std::size_t idx) {
    if (s.empty() || !seen.insert(s).second) return;
    fam.features.push_back({s, src, e, idx});
  };
  for (const auto& dec : table.decs) {
    if (!dec) continue;
    add(dec->a_star, FeatureSource::AStar, dec->edge, 0);
    for (std::size_t i = 0; i < dec->pairs.size(); ++i) {
      add(dec->pairs[i].first, FeatureSource::CellHalf, dec->edge, i);
      add(dec->pairs[i].second, FeatureSource::CellHalf, dec->edge, i);
    }
    const std::size_t p = dec->blocks.size();
    for (std::size_t i = 0; i < p; ++i) {
      VertexSet below(g.n()), above(g.n());
      for (std::size_t j = 0; j < i; ++j)
        for (auto k : dec->blocks[j]) below |= dec->pairs[k].first;
      for (std::size_t j = i + 1; j < p; ++j)
        for (auto k : dec->blocks[j]) above |= dec->pairs[k].second;
      add(below, FeatureSource::BelowBlock, dec->edge, i);
      add(above, FeatureSource::AboveBlock, dec->edge, i);
    }
  }
  add(g.all(), FeatureSource::Universe, Edge{0, 0}, 0);
  return fam;
}

FeatureFamily build_feature_family(const Graph& g) {
  return build_feature_family(g, decompose_all(g));
}

WinnowLearner::WinnowLearner(const FeatureFamily& family)
    : family_(&family), w_(family.size(), 1.0), theta_(static_cast<double>(family.size())) {}

int WinnowLearner::predict(Vertex v) const {
  double s = 0;
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (family_->features[i].set.contains(v)) s += w_[i];
  return s >= theta_ ? 1 : -1;
}

int WinnowLearner::step(Vertex v, int label) {
  int pred = predict(v);
  if (pred == label) return pred;
  ++mistakes_;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (!family_->features[i].set.contains(v)) continue;
    if (label > 0)
      w_[i] *= 2.0;
    else
      w_[i] = 0.0;
  }
  return pred;
}

int HalvingLearner::predict(Vertex v) const {
  std::size_t in = 0;
  for (const auto& h : vs_) in += h.contains(v);
  return 2 * in >= vs_.size() ? 1 : -1;
}

int HalvingLearner::step(Vertex v, int label) {
  int pred = predict(v);
  if (pred != label) ++mistakes_;
  std::erase_if(vs_, [&](const Halfspace& h) { return h.contains(v) != (label > 0); });
  if (vs_.empty()) throw EmptyVersionSpace("no halfspace fits the stream");
  return pred;
}

}  // namespace monohs
