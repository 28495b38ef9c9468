#include "monohs/errors.hpp"
#include "monohs/learn.hpp"

namespace monohs {

namespace {

// For each imprint, the lexicographically first pair (x' <= x'') of `side`
// whose hull contains it.
void cover_imprints(const VertexSet& imprint, const VertexSet& side, int label, HullCache& cache,
                    Sample& out) {
  const auto pts = side.members();
  for (Vertex a : imprint) {
    bool found = false;
    for (std::size_t i = 0; i < pts.size() && !found; ++i) {
      for (std::size_t j = i; j < pts.size() && !found; ++j) {
        if (cache.get(pts[i], pts[j]).contains(a)) {
          out.set(pts[i], label);
          out.set(pts[j], label);
          found = true;
        }
      }
    }
    if (!found) throw InternalError("imprint outside every pairwise hull");
  }
}

}  // namespace

Sample compress(const Graph& g, const Sample& x) {
  const VertexSet pos = x.positives(), neg = x.negatives();
  Sample out(g.n());
  if (pos.empty() && neg.empty()) return out;
  if (neg.empty()) {
    out.set(static_cast<Vertex>(pos.first()), 1);
    return out;
  }
  if (pos.empty()) {
    out.set(static_cast<Vertex>(neg.first()), -1);
    return out;
  }
  if (!is_realizable(g, x)) throw NotRealizable("no halfspace is consistent with the sample");
  const VertexSet a = mhull(g, pos), b = mhull(g, neg);
  const auto imp = imprints(g, a, b);
  HullCache cache(g);
  cover_imprints(imp.a, pos, 1, cache, out);
  cover_imprints(imp.b, neg, -1, cache, out);
  return out;
}

Halfspace reconstruct_lscs(const Graph& g, const Sample& y) {
  const VertexSet pos = y.positives(), neg = y.negatives();
  if (neg.empty()) return g.all();
  if (pos.empty()) return g.empty_set();
  const VertexSet a = mhull(g, pos), b = mhull(g, neg);
  if (a.intersects(b)) throw SeparationFailed("hulls of the compressed sides intersect");
  const auto imp = imprints(g, a, b);
  auto h = halfspace_separation(g, imp.a, imp.b);
  if (!h) throw SeparationFailed("imprints cannot be separated");
  return *h;
}

}  // namespace monohs
