#include "monohs/acceptance.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "monohs/cells.hpp"
#include "monohs/corpus.hpp"
#include "monohs/errors.hpp"
#include "monohs/learn.hpp"

namespace monohs {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::size_t ceil_log2(std::size_t x) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < x) ++k;
  return k;
}

struct Ctx {
  Graph g;
  std::vector<VertexSet> family;  // brute force, lex-sorted
  DecompositionTable table;
  std::size_t d = 0;
  std::size_t omega = 0;
};

bool in_family(const std::vector<VertexSet>& fam, const VertexSet& s) {
  return std::binary_search(fam.begin(), fam.end(), s, VertexSetLex{});
}

std::vector<VertexSet> separators(const std::vector<VertexSet>& fam, const VertexSet& a,
                                  const VertexSet& b) {
  std::vector<VertexSet> out;
  for (const auto& h : fam)
    if (a.subset_of(h) && !b.intersects(h)) out.push_back(h);
  return out;
}

bool realizable(const std::vector<VertexSet>& fam, const Sample& x) {
  for (const auto& h : fam)
    if (count_mistakes(x, h) == 0) return true;
  return false;
}

VertexSet random_subset(std::size_t n, std::mt19937_64& rng, double p) {
  std::bernoulli_distribution coin(p);
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v)
    if (coin(rng)) s.insert(v);
  return s;
}

Sample random_sample(std::size_t n, std::mt19937_64& rng) {
  Sample s(n);
  for (Vertex v = 0; v < n; ++v) {
    int r = static_cast<int>(rng() % 3) - 1;
    if (r != 0) s.set(v, r);
  }
  return s;
}

Sample restrict_to(const VertexSet& h, const VertexSet& support) {
  Sample s(h.universe());
  for (Vertex v : support) s.set(v, h.contains(v) ? 1 : -1);
  return s;
}

template <class F>
void each_labeling(std::size_t n, F&& f) {
  std::vector<int> lab(n, -1);
  while (true) {
    Sample s(n);
    for (Vertex v = 0; v < n; ++v)
      if (lab[v] != 0) s.set(v, lab[v]);
    f(s);
    std::size_t i = 0;
    while (i < n && lab[i] == 1) lab[i++] = -1;
    if (i == n) return;
    ++lab[i];
  }
}

std::vector<VertexSet> model_sets(const PhiFormula& phi) {
  std::vector<VertexSet> out;
  std::size_t n = phi.inst.var_count();
  if (n > 24) throw BudgetExceeded("too many variables to enumerate models");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Assignment a(n);
    for (std::size_t v = 0; v < n; ++v) a[v] = mask >> v & 1;
    if (satisfies(phi.inst, a)) out.push_back(model_to_set(phi, a));
  }
  std::sort(out.begin(), out.end(), VertexSetLex{});
  return out;
}

// Collects failures with a few examples for the detail line.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;
  void check(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what();
  }
  std::string summary(const std::string& extra = "") const {
    std::ostringstream o;
    o << checks << " checks, " << failures << " failures";
    if (!extra.empty()) o << ", " << extra;
    if (failures) o << "; first: " << first;
    return o.str();
  }
};

std::string where(const Graph& g, std::size_t gi) {
  return "graph #" + std::to_string(gi) + " (n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
}

using Criterion = std::function<CriterionResult(std::vector<Ctx>&, const AcceptanceConfig&)>;

CriterionResult enumeration(std::vector<Ctx>& ctx, const AcceptanceConfig& cfg) {
  auto t0 = Clock::now();
  Tally t;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    auto mine = enumerate_halfspaces(ctx[i].g);
    t.check(mine == ctx[i].family, [&] {
      return where(ctx[i].g, i) + ": enumerated " + std::to_string(mine.size()) + " vs brute force " +
             std::to_string(ctx[i].family.size());
    });
  }
  double s = seconds_since(t0);
  t.check(s < cfg.enumeration_time_limit, [&] { return "time " + std::to_string(s) + " s over limit"; });
  return {1, "enumeration-equivalence", t.failures == 0, t.summary(), s};
}

CriterionResult separation(std::vector<Ctx>& ctx, const AcceptanceConfig& cfg) {
  Tally t;
  std::mt19937_64 rng(cfg.seed + 2);
  std::uniform_real_distribution<double> dens(0.05, 0.4);
  std::size_t no = 0;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const auto& g = ctx[i].g;
    for (std::size_t k = 0; k < cfg.separation_pairs; ++k) {
      auto a = random_subset(g.n(), rng, dens(rng));
      auto b = random_subset(g.n(), rng, dens(rng)) - a;
      auto h = halfspace_separation(g, a, b);
      bool exists = !separators(ctx[i].family, a, b).empty();
      no += !h;
      t.check(h.has_value() == exists, [&] {
        return where(g, i) + ": A=" + format_set(g, a) + " B=" + format_set(g, b) +
               (exists ? " returned NO but a separator exists" : " returned a set but none exists");
      });
      if (h) {
        bool ok = a.subset_of(*h) && !b.intersects(*h) && is_mconvex(g, *h) && is_mconvex(g, h->complement());
        t.check(ok, [&] { return where(g, i) + ": returned " + format_set(g, *h) + " does not separate"; });
      }
    }
  }
  return {2, "separation-correctness", t.failures == 0, t.summary(std::to_string(no) + " NO answers"), 0};
}

CriterionResult phi_equivalence(std::vector<Ctx>& ctx, const AcceptanceConfig&) {
  Tally t;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const auto& g = ctx[i].g;
    HullCache cache(g);
    for (const auto& e : g.edges()) {
      for (int flip = 0; flip < 2; ++flip) {
        Vertex a = flip ? e.v : e.u, b = flip ? e.u : e.v;
        auto cl = shadow_closure(g, VertexSet::single(g.n(), a), VertexSet::single(g.n(), b));
        if (!cl.disjoint()) continue;
        auto pair = ClosedPair::trusted(g, cl.a, cl.b);
        auto reduced = eliminate_trivial(g, pair, &cache);
        if (!reduced) continue;
        for (const ClosedPair* p : {&pair, &*reduced}) {
          ++pairs;
          auto m1 = model_sets(build_phi(g, *p, &cache));
          auto m2 = model_sets(build_phi_prime(g, *p, &cache));
          auto expect = separators(ctx[i].family, p->A(), p->B());
          t.check(m1 == m2, [&] {
            return where(g, i) + " edge " + g.name(a) + "-" + g.name(b) + ": phi and phi' model sets differ";
          });
          t.check(m1 == expect, [&] {
            return where(g, i) + " edge " + g.name(a) + "-" + g.name(b) + ": " + std::to_string(m1.size()) +
                   " models vs " + std::to_string(expect.size()) + " halfspaces";
          });
        }
      }
    }
  }
  return {3, "phi-equivalence-and-count", t.failures == 0, t.summary(std::to_string(pairs) + " pairs"), 0};
}

CriterionResult vc_theorems(std::vector<Ctx>& ctx, const AcceptanceConfig&) {
  Tally t;
  std::string k4_note;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const auto& c = ctx[i];
    std::size_t hat = 0;
    for (std::size_t k = 0; k < c.table.orientations.size(); ++k) {
      if (!c.table.decs[k]) continue;
      auto e = c.table.orientations[k];
      auto hm = separators(c.family, VertexSet::single(c.g.n(), e.u), VertexSet::single(c.g.n(), e.v));
      auto dab = d_ab(*c.table.decs[k]);
      auto vc = oracle::vc_dimension(hm, c.g.all(), {});
      hat = std::max(hat, dab);
      t.check(dab == vc, [&] {
        return where(c.g, i) + " edge " + c.g.name(e.u) + "-" + c.g.name(e.v) + ": d_ab=" +
               std::to_string(dab) + " vs VC(Hm(ab))=" + std::to_string(vc);
      });
    }
    auto vh = vc_hat(c.g);
    t.check(vh == hat, [&] { return where(c.g, i) + ": vc_hat disagrees with the per-edge maximum"; });
    t.check(vh <= c.d && c.d <= vh + 4, [&] {
      return where(c.g, i) + ": sandwich fails, vc_hat=" + std::to_string(vh) + " VC=" + std::to_string(c.d);
    });
    if (c.g.n() == 4 && c.g.m() == 6) {
      k4_note = "K4 vc_hat=" + std::to_string(vh) + " VC=" + std::to_string(c.d);
      t.check(vh == 2 && c.d == 4, [&] { return "K4 datapoint " + k4_note; });
    }
  }
  return {4, "vc-theorems", t.failures == 0, t.summary(k4_note), 0};
}

CriterionResult counting(std::vector<Ctx>& ctx, const AcceptanceConfig&) {
  Tally t;
  std::size_t tightest = 0;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const auto& c = ctx[i];
    auto count = enumerate_halfspaces(c.g, c.table).size();
    std::size_t bound = c.g.m() * (std::size_t{1} << c.d) + 2;
    if (count == bound) ++tightest;
    t.check(count <= bound, [&] {
      return where(c.g, i) + ": |Hm|=" + std::to_string(count) + " > " + std::to_string(bound);
    });
  }
  return {5, "counting-bound", t.failures == 0, t.summary(std::to_string(tightest) + " graphs tight"), 0};
}

CriterionResult erm_optimality(std::vector<Ctx>& ctx, const AcceptanceConfig& cfg) {
  Tally t;
  std::mt19937_64 rng(cfg.seed + 6);
  auto one = [&](const Ctx& c, std::size_t i, const Sample& s) {
    if (s.size() == 0) return;
    auto r = erm(c.g, c.table, s);
    auto best = oracle::erm(c.family, s);
    t.check(r.risk == best && Risk{count_mistakes(s, r.h), s.size()} == r.risk &&
                in_family(c.family, r.h),
            [&] {
              return where(c.g, i) + ": erm risk " + std::to_string(r.risk.mistakes) + "/" +
                     std::to_string(r.risk.support) + " vs " + std::to_string(best.mistakes) + "/" +
                     std::to_string(best.support);
            });
  };
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const auto& c = ctx[i];
    if (c.g.n() <= cfg.erm_exhaustive_max_n) {
      each_labeling(c.g.n(), [&](const Sample& s) { one(c, i, s); });
    } else {
      for (std::size_t k = 0; k < cfg.erm_random_samples; ++k) one(c, i, random_sample(c.g.n(), rng));
    }
  }
  auto p4 = canonical_graph("P4");
  Sample s(4);
  s.set(0, 1), s.set(1, -1), s.set(2, 1), s.set(3, -1);
  auto r = erm(p4, s);
  t.check(r.risk == Risk{1, 4}, [] { return std::string("P4 alternating sample is not 1/4"); });
  return {6, "erm-optimality", t.failures == 0, t.summary("P4 datapoint " + std::to_string(r.risk.mistakes) + "/" + std::to_string(r.risk.support)), 0};
}

CriterionResult compression(std::vector<Ctx>& ctx, const AcceptanceConfig& cfg) {
  Tally t;
  std::mt19937_64 rng(cfg.seed + 7);
  std::size_t samples = 0;
  auto one = [&](const Ctx& c, std::size_t i, const Sample& x) {
    ++samples;
    auto y = compress(c.g, x);
    auto h = reconstruct_lscs(c.g, y);
    bool sub = y.support().subset_of(x.support());
    for (Vertex v : y.support()) sub = sub && y.label(v) == x.label(v);
    t.check(sub && y.size() <= 4 * c.omega, [&] {
      return where(c.g, i) + ": compressed size " + std::to_string(y.size()) + " vs 4w=" +
             std::to_string(4 * c.omega);
    });
    t.check(count_mistakes(x, h) == 0, [&] { return where(c.g, i) + ": reconstruction inconsistent"; });
    t.check(in_family(c.family, h), [&] { return where(c.g, i) + ": reconstruction is not a halfspace"; });
    for (Vertex v : x.support() - y.support()) {
      auto x2 = x;
      x2.unset(v);
      auto h2 = reconstruct_lscs(c.g, compress(c.g, x2));
      t.check(h2 == h, [&] { return where(c.g, i) + ": unstable under deleting " + c.g.name(v); });
    }
  };
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const auto& c = ctx[i];
    if (c.g.n() <= cfg.compression_exhaustive_max_n) {
      each_labeling(c.g.n(), [&](const Sample& x) {
        if (realizable(c.family, x)) one(c, i, x);
      });
    } else {
      for (std::size_t k = 0; k < cfg.compression_random_samples; ++k) {
        const auto& target = c.family[rng() % c.family.size()];
        std::uniform_real_distribution<double> dens(0.1, 0.9);
        one(c, i, restrict_to(target, random_subset(c.g.n(), rng, dens(rng))));
      }
    }
  }
  return {7, "compression-scheme", t.failures == 0, t.summary(std::to_string(samples) + " samples"), 0};
}

CriterionResult active(std::vector<Ctx>& ctx, const AcceptanceConfig&) {
  Tally t;
  std::size_t runs = 0;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const auto& c = ctx[i];
    std::size_t hull = hull_set_greedy(c.g).count();
    std::size_t logd = ceil_log2(diameter(c.g));
    for (const auto& target : c.family) {
      ++runs;
      auto o = LabelOracle::for_target(target);
      auto r = active_learn(c.g, o);
      t.check(r.h == target, [&] { return where(c.g, i) + ": recovered the wrong halfspace"; });
      t.check(r.hull_set_size == hull && r.log_diam == logd && o.queries() == r.queries,
              [&] { return where(c.g, i) + ": bound terms disagree with recomputation"; });
      t.check(r.queries <= r.bound(), [&] {
        return where(c.g, i) + ": " + std::to_string(r.queries) + " queries > bound " + std::to_string(r.bound());
      });
    }
  }
  return {8, "active-learning", t.failures == 0, t.summary(std::to_string(runs) + " targets"), 0};
}

CriterionResult online(std::vector<Ctx>& ctx, const AcceptanceConfig& cfg) {
  Tally t;
  std::mt19937_64 rng(cfg.seed + 9);
  std::size_t worst_halving = 0;
  double worst_ratio = 0.0;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const auto& c = ctx[i];
    const auto& hs = c.family;
    std::size_t halving_bound = ceil_log2(hs.size());
    auto features = build_feature_family(c.g, c.table);
    double envelope =
        8.0 * static_cast<double>(c.d + 4) * (1.0 + std::log2(static_cast<double>(features.size())));
    std::size_t length = std::max(cfg.winnow_stream_min_length, 4 * c.g.n());
    for (const auto& target : hs) {
      // Adversary: always ask the vertex that splits the version space most evenly.
      HalvingLearner hl(hs);
      while (true) {
        const auto& vs = hl.version_space();
        std::size_t best = 0;
        Vertex pick = 0;
        for (Vertex v = 0; v < c.g.n(); ++v) {
          std::size_t in = 0;
          for (const auto& h : vs) in += h.contains(v);
          std::size_t split = std::min(in, vs.size() - in);
          if (split > best) best = split, pick = v;
        }
        if (best == 0) break;
        hl.step(pick, target.contains(pick) ? 1 : -1);
      }
      worst_halving = std::max(worst_halving, hl.mistakes());
      t.check(hl.mistakes() <= halving_bound, [&] {
        return where(c.g, i) + ": halving made " + std::to_string(hl.mistakes()) + " mistakes > " +
               std::to_string(halving_bound);
      });
      for (std::size_t s = 0; s < cfg.winnow_streams; ++s) {
        WinnowLearner w(features);
        for (std::size_t k = 0; k < length; ++k) {
          auto v = static_cast<Vertex>(rng() % c.g.n());
          w.step(v, target.contains(v) ? 1 : -1);
        }
        worst_ratio = std::max(worst_ratio, static_cast<double>(w.mistakes()) / envelope);
        t.check(static_cast<double>(w.mistakes()) <= envelope, [&] {
          return where(c.g, i) + ": winnow made " + std::to_string(w.mistakes()) + " mistakes > envelope " +
                 std::to_string(envelope);
        });
      }
    }
  }
  std::ostringstream extra;
  extra << "worst halving " << worst_halving << ", worst winnow/envelope " << worst_ratio;
  return {9, "online-learning", t.failures == 0, t.summary(extra.str()), 0};
}

CriterionResult teaching(std::vector<Ctx>& ctx, const AcceptanceConfig&) {
  Tally t;
  std::size_t largest = 0;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const auto& c = ctx[i];
    for (const auto& h : c.family) {
      auto ts = teaching_set(c.g, h);
      t.check(count_mistakes(ts, h) == 0, [&] { return where(c.g, i) + ": teaching set contradicts its target"; });
      if (h.empty() || h == c.g.all()) {
        VertexSet other = h.empty() ? c.g.all() : c.g.empty_set();
        t.check(ts.size() == 1 && count_mistakes(ts, other) > 0,
                [&] { return where(c.g, i) + ": trivial teaching set is wrong"; });
        continue;
      }
      largest = std::max(largest, ts.size());
      t.check(ts.size() <= 2 * c.d + 2, [&] {
        return where(c.g, i) + ": teaching set of size " + std::to_string(ts.size()) + " > 2d+2";
      });
      for (const auto& other : c.family) {
        if (other.empty() || other == c.g.all() || other == h) continue;
        t.check(count_mistakes(ts, other) > 0, [&] {
          return where(c.g, i) + ": teaching set of " + format_set(c.g, h) + " also fits " + format_set(c.g, other);
        });
      }
    }
  }
  return {10, "teaching", t.failures == 0, t.summary("largest " + std::to_string(largest)), 0};
}

CriterionResult hull_oracle(std::vector<Ctx>& ctx, const AcceptanceConfig& cfg) {
  Tally t;
  std::mt19937_64 rng(cfg.seed + 11);
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const auto& g = ctx[i].g;
    auto iv = oracle::all_intervals(g, cfg.budget);
    auto one = [&](const VertexSet& s) {
      t.check(mhull(g, s) == oracle::interval_closure(iv, s),
              [&] { return where(g, i) + ": hull of " + format_set(g, s) + " differs"; });
    };
    if (g.n() <= cfg.hull_exhaustive_max_n) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n()); ++mask) {
        VertexSet s(g.n());
        for (Vertex v = 0; v < g.n(); ++v)
          if (mask >> v & 1) s.insert(v);
        one(s);
      }
    } else {
      std::uniform_real_distribution<double> dens(0.05, 0.6);
      for (std::size_t k = 0; k < cfg.hull_random_subsets; ++k) one(random_subset(g.n(), rng, dens(rng)));
    }
  }
  return {11, "hull-oracle-equivalence", t.failures == 0, t.summary(), 0};
}

std::size_t peak_rss_mb() {
  rusage ru{};
  getrusage(RUSAGE_SELF, &ru);
  return static_cast<std::size_t>(ru.ru_maxrss) / 1024;
}

CriterionResult scale(std::vector<Ctx>&, const AcceptanceConfig& cfg) {
  auto t0 = Clock::now();
  auto g = generate(GenKind::GnpConnected, {.n = cfg.scale_n, .p = cfg.scale_p}, cfg.scale_seed);
  auto table = decompose_all(g);
  std::size_t nonempty = 0;
  for (const auto& d : table.decs) nonempty += d.has_value();
  auto vh = vc_hat(g);
  auto all = enumerate_halfspaces(g, table);
  double s = seconds_since(t0);
  std::size_t mb = peak_rss_mb();
  std::ostringstream o;
  o << "n=" << g.n() << " m=" << g.m() << ", " << nonempty << " nonempty decompositions, vc_hat=" << vh
    << ", |Hm|=" << all.size() << ", " << s << " s, peak " << mb << " MB";
  bool ok = s < cfg.scale_time_limit && mb < cfg.scale_memory_limit_mb;
  return {12, "scale-smoke", ok, o.str(), s};
}

}  // namespace

bool AcceptanceReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
}

std::vector<Graph> acceptance_corpus(const AcceptanceConfig& cfg) {
  std::vector<Graph> out;
  if (cfg.canonical)
    for (auto& ng : canonical_graphs()) out.push_back(ng.graph);
  for (std::size_t n = 1; n <= cfg.all_connected_max_n; ++n)
    for (auto& g : all_connected_graphs(n)) out.push_back(std::move(g));
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t i = 0; i < cfg.gnp_count; ++i) {
    std::uniform_int_distribution<std::size_t> nd(cfg.gnp_min_n, cfg.gnp_max_n);
    std::uniform_real_distribution<double> pd(cfg.gnp_p_min, cfg.gnp_p_max);
    std::size_t n = nd(rng);
    double p = pd(rng);
    out.push_back(generate(GenKind::GnpConnected, {.n = n, .p = p}, rng()));
  }
  for (const auto& g : cfg.extra_graphs) out.push_back(g);
  return out;
}

AcceptanceReport run_acceptance(const AcceptanceConfig& cfg) {
  auto graphs = acceptance_corpus(cfg);
  if (graphs.empty()) throw BadInput("empty acceptance corpus");
  for (const auto& g : graphs)
    if (g.n() > cfg.budget.max_n)
      throw BadInput("corpus graph with " + std::to_string(g.n()) + " vertices exceeds the oracle budget");

  std::vector<std::pair<int, Criterion>> all = {
      {1, enumeration}, {2, separation},  {3, phi_equivalence}, {4, vc_theorems},
      {5, counting},    {6, erm_optimality}, {7, compression},   {8, active},
      {9, online},      {10, teaching},   {11, hull_oracle},    {12, scale},
  };
  auto wanted = [&](int id) {
    if (id == 12 && !cfg.run_scale) return false;
    return cfg.criteria.empty() || std::find(cfg.criteria.begin(), cfg.criteria.end(), id) != cfg.criteria.end();
  };
  bool needs_corpus = false;
  for (auto& [id, fn] : all) needs_corpus = needs_corpus || (id != 12 && wanted(id));

  std::vector<Ctx> ctx;
  if (needs_corpus) {
    for (auto& g : graphs) {
      Ctx c{g, oracle::halfspaces(g, cfg.budget), decompose_all(g), 0, clique_number(g)};
      c.d = oracle::vc_dimension(c.family, g.all(), cfg.budget);
      ctx.push_back(std::move(c));
    }
    if (cfg.plant_failure && !ctx.empty() && !ctx[0].family.empty()) ctx[0].family.pop_back();
  }

  AcceptanceReport rep;
  rep.corpus_size = graphs.size();
  for (auto& [id, fn] : all) {
    if (!wanted(id)) continue;
    auto t0 = Clock::now();
    CriterionResult r;
    try {
      r = fn(ctx, cfg);
    } catch (const std::exception& e) {
      r = {id, "criterion-" + std::to_string(id), false, std::string("exception: ") + e.what(), 0};
    }
    if (r.seconds == 0) r.seconds = seconds_since(t0);
    rep.results.push_back(r);
  }
  return rep;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream o;
  o << (r.pass ? "PASS " : "FAIL ") << (r.id < 10 ? " " : "") << r.id << " " << r.name << ": " << r.detail;
  o.setf(std::ios::fixed);
  o.precision(2);
  o << " [" << r.seconds << " s]";
  return o.str();
}

}  // namespace monohs
