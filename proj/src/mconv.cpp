#include "monohs/mconv.hpp"

#include <algorithm>

#include "monohs/errors.hpp"

namespace monohs {

bool is_mconvex(const Graph& g, const VertexSet& s) {
  for (const auto& comp : components(g, s.complement())) {
    VertexSet attach(g.n());
    for (Vertex v : comp) attach |= g.neighbors(v);
    attach &= s;
    if (!is_clique(g, attach)) return false;
  }
  return true;
}

namespace {

// Adds to `add` the interiors of shortest paths through `comp` from one
// attachment vertex to each of its non-neighbours in `attach`.
// Returns false when the attachment set is a clique.
bool expand_component(const Graph& g, const VertexSet& comp, const VertexSet& attach,
                      std::vector<Vertex>& parent, std::vector<Vertex>& queue, VertexSet& add) {
  std::size_t x = g.n();
  VertexSet targets(g.n());
  for (Vertex t : attach) {
    targets = attach - g.neighbors(t);
    targets.erase(t);
    if (targets.any()) {
      x = t;
      break;
    }
  }
  if (x == g.n()) return false;
  const auto src = static_cast<Vertex>(x);
  queue.clear();
  VertexSet seen(g.n());
  for (Vertex y : g.neighbor_list(src)) {
    if (comp.contains(y)) {
      seen.insert(y);
      parent[y] = src;
      queue.push_back(y);
    }
  }
  for (std::size_t head = 0; head < queue.size() && targets.any(); ++head) {
    Vertex c = queue[head];
    VertexSet hit = targets & g.neighbors(c);
    if (hit.any()) {
      for (Vertex p = c; p != src; p = parent[p]) add.insert(p);
      targets -= hit;
    }
    for (Vertex y : g.neighbor_list(c)) {
      if (comp.contains(y) && !seen.contains(y)) {
        seen.insert(y);
        parent[y] = c;
        queue.push_back(y);
      }
    }
  }
  return true;
}

}  // namespace

bool mhull_meets(const Graph& g, const VertexSet& s, const VertexSet& stop, VertexSet* out) {
  VertexSet cur = s;
  if (cur.intersects(stop)) return true;
  std::vector<Vertex> parent(g.n());
  std::vector<Vertex> queue;
  queue.reserve(g.n());
  while (true) {
    VertexSet add(g.n());
    for (const auto& comp : components(g, cur.complement())) {
      VertexSet attach(g.n());
      for (Vertex v : comp) attach |= g.neighbors(v);
      attach &= cur;
      expand_component(g, comp, attach, parent, queue, add);
    }
    if (add.empty()) break;
    cur |= add;
    if (add.intersects(stop)) return true;
  }
  if (out) *out = std::move(cur);
  return false;
}

VertexSet mhull(const Graph& g, const VertexSet& s) {
  VertexSet out;
  mhull_meets(g, s, VertexSet(g.n()), &out);
  return out;
}

VertexSet HullCache::get(Vertex x, Vertex y) {
  if (x > y) std::swap(x, y);
  const std::uint64_t key = (std::uint64_t{x} << 32) | y;
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  VertexSet s(g_->n());
  s.insert(x);
  s.insert(y);
  VertexSet h = mhull(*g_, s);
  std::lock_guard lock(mu_);
  return memo_.emplace(key, std::move(h)).first->second;
}

std::size_t HullCache::size() const {
  std::lock_guard lock(mu_);
  return memo_.size();
}

VertexSet shadow(const Graph& g, const VertexSet& a_set, const VertexSet& b_set) {
  if (a_set.empty() || b_set.empty()) throw EmptyInput("shadow needs nonempty sides");
  if (a_set.intersects(b_set)) throw BadInput("shadow sides intersect");
  VertexSet hb;
  if (mhull_meets(g, b_set, a_set, &hb)) return g.all();

  VertexSet in = a_set;
  VertexSet decided = a_set | hb;

  // a lies on an induced x-b path whenever b ∈ N(a) ∩ m(B) and x reaches a
  // while avoiding N[b]; such x are in the shadow.
  std::vector<Vertex> queue;
  for (Vertex a : a_set) {
    for (Vertex b : g.neighbors(a) & hb) {
      if (decided.count() == g.n()) break;
      VertexSet allowed = g.neighbors(b).complement();
      allowed.erase(b);
      VertexSet seen = VertexSet::single(g.n(), a);
      queue.assign(1, a);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Vertex y : g.neighbor_list(queue[head])) {
          if (allowed.contains(y) && !seen.contains(y)) {
            seen.insert(y);
            queue.push_back(y);
          }
        }
      }
      seen -= decided;
      in |= seen;
      decided |= seen;
    }
  }

  // Remaining candidates: if m(m(B) ∪ {x}) misses A, then so does the hull
  // for every vertex inside it.
  for (Vertex x = 0; x < g.n(); ++x) {
    if (decided.contains(x)) continue;
    VertexSet start = hb;
    start.insert(x);
    VertexSet h;
    if (mhull_meets(g, start, a_set, &h)) {
      in.insert(x);
      decided.insert(x);
    } else {
      decided |= h;
    }
  }
  return in;
}

SetPair shadow_closure(const Graph& g, const VertexSet& a_set, const VertexSet& b_set) {
  if (a_set.empty() || b_set.empty()) throw EmptyInput("shadow closure needs nonempty sides");
  SetPair cur{a_set, b_set};
  while (cur.disjoint()) {
    SetPair next{mhull(g, shadow(g, cur.a, cur.b)), mhull(g, shadow(g, cur.b, cur.a))};
    if (next.a == cur.a && next.b == cur.b) break;
    cur = std::move(next);
  }
  return cur;
}

ClosedPair ClosedPair::trusted(const Graph& g, VertexSet a, VertexSet b) {
  if (a.intersects(b)) throw InvalidPair("sides intersect");
  ClosedPair p;
  p.a_ = std::move(a);
  p.b_ = std::move(b);
  p.r_ = (p.a_ | p.b_).complement();
  p.dr_ = VertexSet(g.n());
  p.dba_ = VertexSet(g.n());
  p.dab_ = VertexSet(g.n());
  for (Vertex x : p.r_)
    if (!g.neighbors(x).subset_of(p.r_)) p.dr_.insert(x);
  for (Vertex x : p.a_)
    if (g.neighbors(x).intersects(p.b_)) p.dba_.insert(x);
  for (Vertex x : p.b_)
    if (g.neighbors(x).intersects(p.a_)) p.dab_.insert(x);
  if (p.dba_.empty()) throw InvalidPair("pair is not osculating");
  return p;
}

std::optional<ClosedPair> make_closed_pair(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.empty() || b.empty()) throw EmptyInput("closed pair needs nonempty sides");
  if (a.intersects(b)) return std::nullopt;
  if (mhull(g, shadow(g, a, b)) != a || mhull(g, shadow(g, b, a)) != b)
    throw NotFixpoint("pair is not shadow-closed");
  return ClosedPair::trusted(g, a, b);
}

SetPair imprints(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.empty() || b.empty()) throw BadInput("imprints need nonempty sides");
  if (a.intersects(b)) throw BadInput("imprints need disjoint sides");
  VertexSet rest = (a | b).complement();
  VertexSet via_a = a, via_b = b;
  for (const auto& comp : components(g, rest)) {
    VertexSet nb(g.n());
    for (Vertex v : comp) nb |= g.neighbors(v);
    if (nb.intersects(b)) via_b |= comp;
    if (nb.intersects(a)) via_a |= comp;
  }
  SetPair out{VertexSet(g.n()), VertexSet(g.n())};
  for (Vertex x : a)
    if (g.neighbors(x).intersects(via_b)) out.a.insert(x);
  for (Vertex x : b)
    if (g.neighbors(x).intersects(via_a)) out.b.insert(x);
  return out;
}

VertexSet hull_set_greedy(const Graph& g) {
  VertexSet s = g.all();
  const VertexSet all = g.all();
  for (std::size_t i = g.n(); i-- > 0;) {
    auto v = static_cast<Vertex>(i);
    VertexSet t = s;
    t.erase(v);
    if (t.any() && mhull(g, t) == all) s = std::move(t);
  }
  return s;
}

}  // namespace monohs
