#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "monohs/cells.hpp"
#include "monohs/sample.hpp"

namespace monohs {

// mistakes / support, compared exactly.
struct Risk {
  std::size_t mistakes = 0;
  std::size_t support = 1;
  bool operator<(const Risk& o) const { return mistakes * o.support < o.mistakes * support; }
  bool operator==(const Risk& o) const { return mistakes * o.support == o.mistakes * support; }
  double value() const { return static_cast<double>(mistakes) / static_cast<double>(support); }
};

std::size_t count_mistakes(const Sample& x, const VertexSet& h);

struct ErmResult {
  Halfspace h;
  Risk risk;
};

ErmResult erm(const Graph& g, const Sample& x);
ErmResult erm(const Graph& g, const DecompositionTable& table, const Sample& x);

// Compressor α of the labeled sample compression scheme.
Sample compress(const Graph& g, const Sample& x);
// Reconstructor β.
Halfspace reconstruct_lscs(const Graph& g, const Sample& y);

class LabelOracle {
 public:
  explicit LabelOracle(std::function<int(Vertex)> answer) : answer_(std::move(answer)) {}
  static LabelOracle for_target(const VertexSet& target);
  // Repeated questions about the same vertex are answered from memory.
  int query(Vertex v);
  std::size_t queries() const { return asked_.size(); }
  const std::vector<std::pair<Vertex, int>>& history() const { return asked_; }

 private:
  std::function<int(Vertex)> answer_;
  std::vector<std::pair<Vertex, int>> asked_;
};

struct ActiveResult {
  Halfspace h;
  std::size_t queries = 0;
  // Terms of the query bound for this run.
  std::size_t hull_set_size = 0;
  std::size_t log_diam = 0;
  std::size_t log_blocks = 0;
  std::size_t block_lo_size = 0;
  std::size_t block_hi_size = 0;
  std::size_t bound() const { return hull_set_size + log_diam + log_blocks + block_lo_size + block_hi_size + 2; }
};

ActiveResult active_learn(const Graph& g, LabelOracle& oracle);

enum class FeatureSource { AStar, CellHalf, BelowBlock, AboveBlock, Universe };
std::string to_string(FeatureSource s);

struct Feature {
  VertexSet set;
  FeatureSource source;
  Edge edge{0, 0};
  std::size_t index = 0;  // block index for block unions
};

struct FeatureFamily {
  std::vector<Feature> features;
  std::size_t size() const { return features.size(); }
};

FeatureFamily build_feature_family(const Graph& g);
FeatureFamily build_feature_family(const Graph& g, const DecompositionTable& table);

// Winnow1 with promotion factor 2 and threshold |family|.
class WinnowLearner {
 public:
  explicit WinnowLearner(const FeatureFamily& family);
  int predict(Vertex v) const;
  // Returns the prediction made before the update.
  int step(Vertex v, int label);
  std::size_t mistakes() const { return mistakes_; }
  const std::vector<double>& weights() const { return w_; }
  double threshold() const { return theta_; }

 private:
  const FeatureFamily* family_;
  std::vector<double> w_;
  double theta_;
  std::size_t mistakes_ = 0;
};

// Majority vote over the surviving halfspaces; ties predict +1.
class HalvingLearner {
 public:
  explicit HalvingLearner(std::vector<Halfspace> version_space) : vs_(std::move(version_space)) {}
  int predict(Vertex v) const;
  int step(Vertex v, int label);
  std::size_t mistakes() const { return mistakes_; }
  const std::vector<Halfspace>& version_space() const { return vs_; }

 private:
  std::vector<Halfspace> vs_;
  std::size_t mistakes_ = 0;
};

Sample teaching_set(const Graph& g, const Halfspace& h);

}  // namespace monohs
