#include "monohs/sample.hpp"

#include "monohs/errors.hpp"

namespace monohs {

Sample Sample::from_sets(const VertexSet& positives, const VertexSet& negatives) {
  if (positives.intersects(negatives)) throw BadInput("a vertex cannot carry both labels");
  Sample s(positives.universe());
  for (Vertex v : positives) s.labels_[v] = 1;
  for (Vertex v : negatives) s.labels_[v] = -1;
  return s;
}

void Sample::set(Vertex v, int label) {
  if (label != 1 && label != -1 && label != 0) throw BadInput("label must be +1, -1 or 0");
  labels_[v] = static_cast<std::int8_t>(label);
}

VertexSet Sample::positives() const {
  VertexSet s(labels_.size());
  for (std::size_t v = 0; v < labels_.size(); ++v)
    if (labels_[v] > 0) s.insert(static_cast<Vertex>(v));
  return s;
}

VertexSet Sample::negatives() const {
  VertexSet s(labels_.size());
  for (std::size_t v = 0; v < labels_.size(); ++v)
    if (labels_[v] < 0) s.insert(static_cast<Vertex>(v));
  return s;
}

VertexSet Sample::support() const {
  VertexSet s(labels_.size());
  for (std::size_t v = 0; v < labels_.size(); ++v)
    if (labels_[v] != 0) s.insert(static_cast<Vertex>(v));
  return s;
}

std::size_t Sample::size() const {
  std::size_t c = 0;
  for (auto l : labels_) c += l != 0;
  return c;
}

}  // namespace monohs
