#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "monohs/acceptance.hpp"
#include "monohs/cells.hpp"
#include "monohs/corpus.hpp"
#include "monohs/errors.hpp"
#include "monohs/learn.hpp"
#include "monohs/oracle.hpp"

namespace monohs::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw FileError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream o;
  o << std::hex;
  o.width(16);
  o.fill('0');
  o << v;
  return o.str();
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

VertexSet parse_set(const Graph& g, const std::string& s) {
  VertexSet out = g.empty_set();
  for (const auto& name : split_names(s)) out.insert(g.vertex(name));
  return out;
}

ordered_json set_json(const Graph& g, const VertexSet& s) {
  ordered_json a = ordered_json::array();
  for (Vertex v : s) a.push_back(g.name(v));
  return a;
}

ordered_json sample_json(const Graph& g, const Sample& x) {
  ordered_json labels = ordered_json::object();
  for (Vertex v : x.support()) labels[g.name(v)] = x.label(v);
  return ordered_json{{"labels", labels}};
}

// Sample JSON, inline when it starts with '{', otherwise a file path.
Sample parse_sample(const Graph& g, const std::string& arg) {
  std::string text = !arg.empty() && arg.front() == '{' ? arg : read_file(arg);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("sample: ") + e.what());
  }
  if (!j.is_object() || !j.contains("labels") || !j["labels"].is_object())
    throw ParseError("sample: expected {\"labels\": {...}}");
  Sample x(g.n());
  for (auto& [name, lab] : j["labels"].items()) {
    if (!lab.is_number_integer()) throw ParseError("sample: label of " + name + " is not an integer");
    x.set(g.vertex(name), lab.get<int>());
  }
  return x;
}

std::string risk_string(const Risk& r) {
  return std::to_string(r.mistakes) + "/" + std::to_string(r.support);
}

std::size_t ceil_log2(std::size_t x) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < x) ++k;
  return k;
}

// VC dimension for bound fields: exact when the oracle budget allows it.
std::pair<std::size_t, std::string> vc_for_bounds(const Graph& g) {
  oracle::Budget b;
  if (g.n() <= b.max_n) return {oracle::vc_dimension(oracle::halfspaces(g), g.all()), "brute-force"};
  return {vc_hat(g) + 4, "vc_hat+4"};
}

ordered_json decomposition_json(const Graph& g, const CellDecomposition& dec) {
  ordered_json pairs = ordered_json::array();
  for (const auto& p : dec.pairs) pairs.push_back({set_json(g, p.first), set_json(g, p.second)});
  return ordered_json{{"edge", {g.name(dec.edge.u), g.name(dec.edge.v)}},
                      {"a_star", set_json(g, dec.a_star)},
                      {"b_star", set_json(g, dec.b_star)},
                      {"pairs", pairs},
                      {"blocks", dec.blocks},
                      {"case", to_string(dec.tag)},
                      {"d_ab", d_ab(dec)}};
}

std::pair<Vertex, Vertex> parse_edge(const Graph& g, const std::string& s) {
  auto names = split_names(s);
  if (names.size() != 2) throw UsageError("--edge expects two comma-separated vertices");
  return {g.vertex(names[0]), g.vertex(names[1])};
}

AcceptanceConfig parse_acceptance_config(const std::string& path) {
  AcceptanceConfig cfg;
  if (path.empty()) return cfg;
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  cfg.canonical = j.value("canonical", cfg.canonical);
  cfg.all_connected_max_n = j.value("all_connected_max_n", cfg.all_connected_max_n);
  cfg.seed = j.value("seed", cfg.seed);
  if (j.contains("gnp")) {
    const auto& g = j["gnp"];
    cfg.gnp_count = g.value("count", cfg.gnp_count);
    cfg.gnp_min_n = g.value("min_n", cfg.gnp_min_n);
    cfg.gnp_max_n = g.value("max_n", cfg.gnp_max_n);
    cfg.gnp_p_min = g.value("p_min", cfg.gnp_p_min);
    cfg.gnp_p_max = g.value("p_max", cfg.gnp_p_max);
  }
  if (j.contains("graphs"))
    for (const auto& f : j["graphs"]) cfg.extra_graphs.push_back(load_graph(read_file(f.get<std::string>())));
  if (j.contains("budget")) {
    cfg.budget.max_n = j["budget"].value("max_n", cfg.budget.max_n);
    cfg.budget.max_subsets = j["budget"].value("max_subsets", cfg.budget.max_subsets);
  }
  cfg.separation_pairs = j.value("separation_pairs", cfg.separation_pairs);
  cfg.erm_exhaustive_max_n = j.value("erm_exhaustive_max_n", cfg.erm_exhaustive_max_n);
  cfg.erm_random_samples = j.value("erm_random_samples", cfg.erm_random_samples);
  cfg.compression_exhaustive_max_n = j.value("compression_exhaustive_max_n", cfg.compression_exhaustive_max_n);
  cfg.compression_random_samples = j.value("compression_random_samples", cfg.compression_random_samples);
  cfg.winnow_streams = j.value("winnow_streams", cfg.winnow_streams);
  cfg.hull_exhaustive_max_n = j.value("hull_exhaustive_max_n", cfg.hull_exhaustive_max_n);
  cfg.hull_random_subsets = j.value("hull_random_subsets", cfg.hull_random_subsets);
  if (j.contains("scale")) {
    const auto& s = j["scale"];
    cfg.run_scale = s.value("run", cfg.run_scale);
    cfg.scale_n = s.value("n", cfg.scale_n);
    cfg.scale_p = s.value("p", cfg.scale_p);
    cfg.scale_seed = s.value("seed", cfg.scale_seed);
  }
  cfg.criteria = j.value("criteria", cfg.criteria);
  cfg.plant_failure = j.value("plant_failure", cfg.plant_failure);
  return cfg;
}

struct Options {
  std::string graph;
  std::string pos, neg, set, a, b, edge, sample, target, halfspace, stream, mode = "winnow";
  std::string kind = "gnp", config, criteria, what;
  std::string u, v;
  std::size_t n = 10, k = 3, q = 3, length = 0;
  double p = 0.3;
  std::uint64_t seed = 0;
  bool dimacs = false, brute = false, timing = false, no_scale = false, plant = false, as_json = false;
};

struct Outcome {
  int code = kOk;
  ordered_json body;
};

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o) {}

  const Graph& graph() {
    if (!g_) {
      if (o_.graph.empty()) throw UsageError("--graph is required");
      text_ = read_file(o_.graph);
      g_ = load_graph(text_);
    }
    return *g_;
  }
  const std::string& graph_text() const { return text_; }

  Outcome separate() {
    const auto& g = graph();
    auto h = halfspace_separation(g, parse_set(g, o_.pos), parse_set(g, o_.neg));
    if (!h) return {kNegative, {{"status", "NO"}}};
    return {kOk, {{"status", "OK"}, {"halfspace", set_json(g, *h)}}};
  }

  Outcome hull() {
    const auto& g = graph();
    auto s = parse_set(g, o_.set);
    auto h = mhull(g, s);
    return {kOk, {{"set", set_json(g, s)}, {"hull", set_json(g, h)}, {"convex", h == s}}};
  }

  Outcome closure() {
    const auto& g = graph();
    auto a = parse_set(g, o_.a), b = parse_set(g, o_.b);
    if (a.intersects(b)) throw UsageError("--a and --b must be disjoint");
    auto r = shadow_closure(g, a, b);
    if (!r.disjoint()) return {kNegative, {{"status", "INTERSECTING"}}};
    return {kOk, {{"status", "OK"}, {"a", set_json(g, r.a)}, {"b", set_json(g, r.b)},
                  {"residue", set_json(g, (r.a | r.b).complement())}}};
  }

  Outcome imprints_cmd() {
    const auto& g = graph();
    auto r = imprints(g, parse_set(g, o_.a), parse_set(g, o_.b));
    return {kOk, {{"imprint_a", set_json(g, r.a)}, {"imprint_b", set_json(g, r.b)}}};
  }

  Outcome decompose_cmd() {
    const auto& g = graph();
    auto [a, b] = parse_edge(g, o_.edge);
    auto dec = decompose(g, a, b);
    if (!dec) return {kNegative, {{"status", "EMPTY"}}};
    ordered_json body{{"status", "OK"}};
    body.update(decomposition_json(g, *dec));
    if (o_.dimacs) {
      auto cl = shadow_closure(g, VertexSet::single(g.n(), a), VertexSet::single(g.n(), b));
      auto pair = ClosedPair::trusted(g, cl.a, cl.b);
      body["dimacs"] = to_dimacs(build_phi(g, pair).inst);
    }
    return {kOk, body};
  }

  Outcome vcdim() {
    const auto& g = graph();
    ordered_json body{{"vc_hat", vc_hat(g)}};
    if (o_.brute) {
      auto d = oracle::vc_dimension(oracle::halfspaces(g), g.all());
      body["vc_brute_force"] = d;
      body["sandwich_pass"] = vc_hat(g) <= d && d <= vc_hat(g) + 4;
    }
    return {kOk, body};
  }

  Outcome enumerate() {
    const auto& g = graph();
    auto all = enumerate_halfspaces(g);
    ordered_json hs = ordered_json::array();
    for (const auto& h : all) hs.push_back(set_json(g, h));
    auto [d, src] = vc_for_bounds(g);
    double bound = static_cast<double>(g.m()) * std::ldexp(1.0, static_cast<int>(d)) + 2.0;
    return {kOk, {{"count", all.size()},
                  {"halfspaces", hs},
                  {"d", d},
                  {"d_source", src},
                  {"bound_m_2d_plus_2", bound},
                  {"bound_pass", static_cast<double>(all.size()) <= bound}}};
  }

  Outcome erm_cmd() {
    const auto& g = graph();
    auto r = erm(g, parse_sample(g, o_.sample));
    return {kOk, {{"halfspace", set_json(g, r.h)},
                  {"risk", risk_string(r.risk)},
                  {"mistakes", r.risk.mistakes},
                  {"support", r.risk.support}}};
  }

  Outcome compress_cmd() {
    const auto& g = graph();
    auto y = compress(g, parse_sample(g, o_.sample));
    auto bound = 4 * clique_number(g);
    ordered_json body = sample_json(g, y);
    body["size"] = y.size();
    body["bound_4omega"] = bound;
    body["bound_pass"] = y.size() <= bound;
    return {kOk, body};
  }

  Outcome reconstruct_cmd() {
    const auto& g = graph();
    auto h = reconstruct_lscs(g, parse_sample(g, o_.sample));
    return {kOk, {{"halfspace", set_json(g, h)}}};
  }

  Outcome teach() {
    const auto& g = graph();
    auto h = parse_set(g, o_.halfspace);
    auto t = teaching_set(g, h);
    auto [d, src] = vc_for_bounds(g);
    ordered_json body = sample_json(g, t);
    body["size"] = t.size();
    body["d"] = d;
    body["d_source"] = src;
    body["bound_2d_plus_2"] = 2 * d + 2;
    body["bound_pass"] = t.size() <= 2 * d + 2;
    return {kOk, body};
  }

  Outcome active() {
    const auto& g = graph();
    auto target = parse_set(g, o_.target);
    if (!is_halfspace(g, target)) throw NotAHalfspace("target is not a halfspace");
    auto oracle = LabelOracle::for_target(target);
    auto r = active_learn(g, oracle);
    ordered_json asked = ordered_json::array();
    for (auto [v, l] : oracle.history()) asked.push_back({g.name(v), l});
    return {kOk, {{"halfspace", set_json(g, r.h)},
                  {"exact", r.h == target},
                  {"queries", r.queries},
                  {"history", asked},
                  {"bound", r.bound()},
                  {"bound_terms",
                   {{"hull_set", r.hull_set_size},
                    {"log_diam", r.log_diam},
                    {"log_blocks", r.log_blocks},
                    {"block_lo", r.block_lo_size},
                    {"block_hi", r.block_hi_size}}},
                  {"bound_pass", r.queries <= r.bound()}}};
  }

  Outcome online() {
    const auto& g = graph();
    auto target = parse_set(g, o_.target);
    if (!is_halfspace(g, target)) throw NotAHalfspace("target is not a halfspace");
    std::vector<Vertex> stream;
    if (!o_.stream.empty()) {
      std::istringstream in(read_file(o_.stream));
      for (std::string tok; in >> tok;) stream.push_back(g.vertex(tok));
    } else {
      std::mt19937_64 rng(o_.seed);
      std::size_t len = o_.length ? o_.length : std::max<std::size_t>(40, 4 * g.n());
      for (std::size_t i = 0; i < len; ++i) stream.push_back(static_cast<Vertex>(rng() % g.n()));
    }
    auto table = decompose_all(g);
    ordered_json body{{"mode", o_.mode}, {"stream_length", stream.size()}};
    if (o_.mode == "halving") {
      auto all = enumerate_halfspaces(g, table);
      HalvingLearner l(all);
      for (Vertex v : stream) l.step(v, target.contains(v) ? 1 : -1);
      std::size_t bound = ceil_log2(all.size());
      body["mistakes"] = l.mistakes();
      body["version_space"] = l.version_space().size();
      body["bound_log2_hm"] = bound;
      body["bound_pass"] = l.mistakes() <= bound;
    } else if (o_.mode == "winnow") {
      auto fam = build_feature_family(g, table);
      WinnowLearner w(fam);
      for (Vertex v : stream) w.step(v, target.contains(v) ? 1 : -1);
      auto [d, src] = vc_for_bounds(g);
      double env = 8.0 * static_cast<double>(d + 4) * (1.0 + std::log2(static_cast<double>(fam.size())));
      body["mistakes"] = w.mistakes();
      body["features"] = fam.size();
      body["d"] = d;
      body["d_source"] = src;
      body["envelope"] = env;
      body["bound_pass"] = static_cast<double>(w.mistakes()) <= env;
    } else {
      throw UsageError("--mode must be winnow or halving");
    }
    return {kOk, body};
  }

  Outcome gen(std::ostream& out) {
    GenKind kind;
    if (o_.kind == "gnp") kind = GenKind::GnpConnected;
    else if (o_.kind == "tree") kind = GenKind::Tree;
    else if (o_.kind == "clique-chain") kind = GenKind::CliqueChain;
    else throw UsageError("--kind must be gnp, tree or clique-chain");
    auto g = generate(kind, {.n = o_.n, .p = o_.p, .k = o_.k, .q = o_.q}, o_.seed);
    if (o_.as_json) return {kOk, ordered_json::parse(export_graph_json(g))};
    out << format_edge_list(g);
    return {kOk, nullptr};
  }

  Outcome oracle_cmd() {
    const auto& g = graph();
    if (o_.what == "halfspaces") {
      ordered_json hs = ordered_json::array();
      auto fam = oracle::halfspaces(g);
      for (const auto& h : fam) hs.push_back(set_json(g, h));
      return {kOk, {{"count", fam.size()}, {"halfspaces", hs}}};
    }
    if (o_.what == "vc") return {kOk, {{"vc", oracle::vc_dimension(oracle::halfspaces(g), g.all())}}};
    if (o_.what == "interval") {
      if (o_.u.empty() || o_.v.empty()) throw UsageError("interval needs --u and --v");
      return {kOk, {{"interval", set_json(g, oracle::interval(g, g.vertex(o_.u), g.vertex(o_.v)))}}};
    }
    if (o_.what == "hullset") {
      auto exact = oracle::min_hull_set(g);
      auto greedy = hull_set_greedy(g);
      return {kOk, {{"minimum", set_json(g, exact)}, {"greedy", set_json(g, greedy)}}};
    }
    throw UsageError("oracle expects halfspaces, vc, interval or hullset");
  }

  Outcome acceptance() {
    auto cfg = parse_acceptance_config(o_.config);
    if (!o_.criteria.empty()) {
      cfg.criteria.clear();
      for (const auto& c : split_names(o_.criteria)) {
        try {
          cfg.criteria.push_back(std::stoi(c));
        } catch (const std::exception&) {
          throw UsageError("--criteria expects integers");
        }
      }
    }
    if (o_.no_scale) cfg.run_scale = false;
    if (o_.plant) cfg.plant_failure = true;
    AcceptanceReport rep;
    try {
      rep = run_acceptance(cfg);
    } catch (const BadInput& e) {
      throw UsageError(e.what());
    }
    ordered_json rs = ordered_json::array();
    for (const auto& r : rep.results) {
      ordered_json row{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
      if (o_.timing) row["seconds"] = r.seconds;
      rs.push_back(row);
    }
    return {rep.all_pass() ? kOk : kError,
            {{"corpus_size", rep.corpus_size}, {"pass", rep.all_pass()}, {"criteria", rs}}};
  }

 private:
  const Options& o_;
  std::optional<Graph> g_;
  std::string text_;
};

ordered_json error_json(const std::string& kind, const std::string& msg) {
  return {{"status", "ERROR"}, {"error", kind}, {"message", msg}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monophonic convexity toolkit"};
  app.require_subcommand(1);
  Options o;

  auto graph_opt = [&](CLI::App* sc, bool required = true) {
    auto* opt = sc->add_option("--graph", o.graph, "edge-list file");
    if (required) opt->required();
  };
  auto* separate = app.add_subcommand("separate", "separate two vertex sets by a halfspace");
  graph_opt(separate);
  separate->add_option("--pos", o.pos, "comma-separated vertices");
  separate->add_option("--neg", o.neg, "comma-separated vertices");

  auto* hull = app.add_subcommand("hull", "monophonic hull of a set");
  graph_opt(hull);
  hull->add_option("--set", o.set)->required();

  auto* closure = app.add_subcommand("closure", "shadow closure of two disjoint sets");
  graph_opt(closure);
  closure->add_option("--a", o.a)->required();
  closure->add_option("--b", o.b)->required();

  auto* imp = app.add_subcommand("imprints", "imprints of two disjoint convex sets");
  graph_opt(imp);
  imp->add_option("--a", o.a)->required();
  imp->add_option("--b", o.b)->required();

  auto* dec = app.add_subcommand("decompose", "cell decomposition of Hm(ab)");
  graph_opt(dec);
  dec->add_option("--edge", o.edge, "a,b")->required();
  dec->add_flag("--dimacs", o.dimacs, "include the 2-SAT formula of the closed pair");

  auto* vcd = app.add_subcommand("vcdim", "VC-dimension estimate");
  graph_opt(vcd);
  vcd->add_flag("--brute", o.brute, "also compute the exact value by brute force");

  auto* en = app.add_subcommand("enumerate", "all halfspaces");
  graph_opt(en);

  auto* ermc = app.add_subcommand("erm", "empirical risk minimization");
  graph_opt(ermc);
  ermc->add_option("--sample", o.sample, "sample JSON or file")->required();

  auto* comp = app.add_subcommand("compress", "compress a realizable sample");
  graph_opt(comp);
  comp->add_option("--sample", o.sample)->required();

  auto* rec = app.add_subcommand("reconstruct", "reconstruct a halfspace from a compressed sample");
  graph_opt(rec);
  rec->add_option("--sample", o.sample)->required();

  auto* teach = app.add_subcommand("teach", "teaching set of a halfspace");
  graph_opt(teach);
  teach->add_option("--halfspace", o.halfspace)->required();

  auto* act = app.add_subcommand("active", "simulate active learning of a target");
  graph_opt(act);
  act->add_option("--target", o.target)->required();

  auto* onl = app.add_subcommand("online", "simulate online learning of a target");
  graph_opt(onl);
  onl->add_option("--target", o.target)->required();
  onl->add_option("--stream", o.stream, "file of whitespace-separated vertices");
  onl->add_option("--seed", o.seed, "seed for a random stream");
  onl->add_option("--length", o.length, "random stream length");
  onl->add_option("--mode", o.mode, "winnow or halving");

  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->add_option("--kind", o.kind, "gnp, tree or clique-chain");
  gen->add_option("--n", o.n);
  gen->add_option("--p", o.p);
  gen->add_option("--k", o.k);
  gen->add_option("--q", o.q);
  gen->add_option("--seed", o.seed);
  gen->add_flag("--json", o.as_json, "emit JSON instead of an edge list");

  auto* orc = app.add_subcommand("oracle", "brute-force references");
  orc->add_option("what", o.what, "halfspaces, vc, interval or hullset")->required();
  graph_opt(orc);
  orc->add_option("--u", o.u);
  orc->add_option("--v", o.v);

  auto* acc = app.add_subcommand("acceptance", "run the acceptance suite");
  acc->add_option("--config", o.config, "JSON config file");
  acc->add_option("--criteria", o.criteria, "comma-separated criterion ids");
  acc->add_flag("--no-scale", o.no_scale, "skip the scale smoke test");
  acc->add_flag("--plant-failure", o.plant, "self-test: corrupt one reference family");

  app.add_flag("--timing", o.timing, "add wall-clock time to the report");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    out << error_json("usage", e.what()).dump() << "\n";
    return kUsage;
  }

  auto* sc = app.get_subcommands().front();
  const std::string cmd = sc->get_name();
  auto t0 = std::chrono::steady_clock::now();
  Runner r(o);
  Outcome res;
  try {
    if (cmd == "separate") res = r.separate();
    else if (cmd == "hull") res = r.hull();
    else if (cmd == "closure") res = r.closure();
    else if (cmd == "imprints") res = r.imprints_cmd();
    else if (cmd == "decompose") res = r.decompose_cmd();
    else if (cmd == "vcdim") res = r.vcdim();
    else if (cmd == "enumerate") res = r.enumerate();
    else if (cmd == "erm") res = r.erm_cmd();
    else if (cmd == "compress") res = r.compress_cmd();
    else if (cmd == "reconstruct") res = r.reconstruct_cmd();
    else if (cmd == "teach") res = r.teach();
    else if (cmd == "active") res = r.active();
    else if (cmd == "online") res = r.online();
    else if (cmd == "gen") res = r.gen(out);
    else if (cmd == "oracle") res = r.oracle_cmd();
    else if (cmd == "acceptance") res = r.acceptance();
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    out << error_json("usage", e.what()).dump() << "\n";
    return kUsage;
  } catch (const FileError& e) {
    err << e.what() << "\n";
    out << error_json("file", e.what()).dump() << "\n";
    return kFileError;
  } catch (const Error& e) {
    err << e.what() << "\n";
    out << error_json(e.kind(), e.what()).dump() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    out << error_json("internal", e.what()).dump() << "\n";
    return kError;
  }
  if (res.body.is_null()) return res.code;

  ordered_json report{{"command", cmd}};
  std::string digest_src;
  for (const auto& a : args) digest_src += a + '\0';
  report["inputs_digest"] = hex(fnv1a(r.graph_text(), fnv1a(digest_src)));
  for (auto& [k, v] : res.body.items()) report[k] = v;
  if (o.timing)
    report["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  out << report.dump() << "\n";
  return res.code;
}

}  // namespace monohs::cli
