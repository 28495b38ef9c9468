#pragma once

#include <cstdint>
#include <vector>

#include "monohs/vertex_set.hpp"

namespace monohs {

// Partial labeling V -> {+1, -1, unlabeled}.
class Sample {
 public:
  Sample() = default;
  explicit Sample(std::size_t n) : labels_(n, 0) {}
  static Sample from_sets(const VertexSet& positives, const VertexSet& negatives);

  std::size_t universe() const { return labels_.size(); }
  int label(Vertex v) const { return labels_[v]; }
  void set(Vertex v, int label);
  void unset(Vertex v) { labels_[v] = 0; }

  VertexSet positives() const;
  VertexSet negatives() const;
  VertexSet support() const;
  std::size_t size() const;

  bool operator==(const Sample&) const = default;

 private:
  std::vector<std::int8_t> labels_;
};

}  // namespace monohs
