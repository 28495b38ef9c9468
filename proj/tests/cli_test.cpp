#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Run {
  int code;
  std::string out;
  std::string err;
  json body() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = monohs::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Temporary file removed on scope exit.
class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = (fs::temp_directory_path() /
             ("monohs_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++)))
                .string();
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

const char* kC5 = "a b\nb c\nc d\nd e\ne a\n";
const char* kP4 = "a b\nb c\nc d\n";
const char* kK4 = "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";

}  // namespace

TEST_CASE("separate on C5 answers NO with exit 2") {
  TempFile g(kC5);
  auto r = run({"separate", "--graph", g.path(), "--pos", "a", "--neg", "c"});
  CHECK(r.code == monohs::cli::kNegative);
  CHECK(r.body()["status"] == "NO");
}

TEST_CASE("separate on P4 returns a separating halfspace") {
  TempFile g(kP4);
  auto r = run({"separate", "--graph", g.path(), "--pos", "a", "--neg", "d"});
  REQUIRE(r.code == 0);
  auto h = r.body()["halfspace"];
  CHECK(std::find(h.begin(), h.end(), "a") != h.end());
  CHECK(std::find(h.begin(), h.end(), "d") == h.end());
}

TEST_CASE("vcdim and enumerate on small graphs") {
  TempFile k4(kK4), p4(kP4);
  auto v = run({"vcdim", "--graph", k4.path()});
  REQUIRE(v.code == 0);
  CHECK(v.body()["vc_hat"] == 2);

  auto e = run({"enumerate", "--graph", p4.path()});
  REQUIRE(e.code == 0);
  CHECK(e.body()["count"] == 8);
  CHECK(e.body()["bound_pass"] == true);
}

TEST_CASE("decompose reports an empty Hm(ab) with exit 2") {
  TempFile g(kC5);
  auto r = run({"decompose", "--graph", g.path(), "--edge", "a,b"});
  CHECK(r.code == monohs::cli::kNegative);
  CHECK(r.body()["status"] == "EMPTY");

  TempFile p(kP4);
  auto ok = run({"decompose", "--graph", p.path(), "--edge", "b,c", "--dimacs"});
  REQUIRE(ok.code == 0);
  CHECK(ok.body()["a_star"] == json::array({"a", "b"}));
  CHECK(ok.body().contains("dimacs"));
}

TEST_CASE("learners through the command line") {
  TempFile g(kP4);
  auto a = run({"active", "--graph", g.path(), "--target", "a,b"});
  REQUIRE(a.code == 0);
  CHECK(a.body()["exact"] == true);
  CHECK(a.body()["queries"] == 4);

  auto t = run({"teach", "--graph", g.path(), "--halfspace", "a,b"});
  REQUIRE(t.code == 0);
  CHECK(t.body()["labels"] == json{{"b", 1}, {"c", -1}});

  auto c = run({"compress", "--graph", g.path(), "--sample",
                R"({"labels":{"a":1,"b":1,"c":-1,"d":-1}})"});
  REQUIRE(c.code == 0);
  auto compressed = json{{"labels", c.body()["labels"]}}.dump();
  auto rec = run({"reconstruct", "--graph", g.path(), "--sample", compressed});
  REQUIRE(rec.code == 0);
  CHECK(rec.body()["halfspace"] == json::array({"a", "b"}));

  TempFile sample(R"({"labels":{"a":1,"c":-1}})");
  auto e = run({"erm", "--graph", g.path(), "--sample", sample.path()});
  REQUIRE(e.code == 0);
  CHECK(e.body()["mistakes"] == 0);

  for (std::string mode : {"winnow", "halving"}) {
    auto o = run({"online", "--graph", g.path(), "--target", "a,b", "--mode", mode, "--seed", "7"});
    REQUIRE(o.code == 0);
    CHECK(o.body()["bound_pass"] == true);
  }
  TempFile stream("a d b c a d");
  auto s = run({"online", "--graph", g.path(), "--target", "a,b", "--stream", stream.path()});
  REQUIRE(s.code == 0);
  CHECK(s.body()["stream_length"] == 6);
}

TEST_CASE("hull, closure, imprints and oracle") {
  TempFile g(kC5);
  auto h = run({"hull", "--graph", g.path(), "--set", "a,c"});
  REQUIRE(h.code == 0);
  CHECK(h.body()["hull"].size() == 5);

  TempFile p(kP4);
  auto c = run({"closure", "--graph", p.path(), "--a", "a", "--b", "d"});
  REQUIRE(c.code == 0);
  CHECK(c.body()["status"] == "OK");

  auto i = run({"imprints", "--graph", p.path(), "--a", "a,b", "--b", "c,d"});
  REQUIRE(i.code == 0);
  CHECK(i.body()["imprint_a"] == json::array({"b"}));

  auto o = run({"oracle", "halfspaces", "--graph", p.path()});
  REQUIRE(o.code == 0);
  CHECK(o.body()["count"] == 8);
  auto iv = run({"oracle", "interval", "--graph", g.path(), "--u", "a", "--v", "c"});
  REQUIRE(iv.code == 0);
  CHECK(iv.body()["interval"].size() == 5);
}

TEST_CASE("gen is deterministic for a seed") {
  auto a = run({"gen", "--kind", "gnp", "--n", "12", "--p", "0.3", "--seed", "5"});
  auto b = run({"gen", "--kind", "gnp", "--n", "12", "--p", "0.3", "--seed", "5"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto j = run({"gen", "--kind", "clique-chain", "--k", "3", "--q", "2", "--json"});
  REQUIRE(j.code == 0);
  CHECK(j.body().is_object());
}

TEST_CASE("reports are byte-identical across runs without --timing") {
  TempFile g(kP4);
  std::vector<std::string> args{"enumerate", "--graph", g.path()};
  CHECK(run(args).out == run(args).out);
  auto timed = run({"--timing", "enumerate", "--graph", g.path()});
  CHECK(timed.body().contains("wall_time_ms"));
  CHECK_FALSE(run(args).body().contains("wall_time_ms"));
}

TEST_CASE("error exit codes") {
  TempFile g(kP4);
  CHECK(run({}).code == monohs::cli::kUsage);
  CHECK(run({"separate"}).code == monohs::cli::kUsage);
  CHECK(run({"hull", "--graph", "/nonexistent/graph.txt", "--set", "a"}).code ==
        monohs::cli::kFileError);

  auto bad = run({"hull", "--graph", g.path(), "--set", "zz"});
  CHECK(bad.code == monohs::cli::kError);
  CHECK(bad.body()["error"] == "BadInput");

  auto nh = run({"active", "--graph", g.path(), "--target", "a,c"});
  CHECK(nh.code == monohs::cli::kError);
  CHECK(nh.body()["error"] == "NotAHalfspace");

  TempFile broken("a\n");
  auto pe = run({"enumerate", "--graph", broken.path()});
  CHECK(pe.code == monohs::cli::kError);

  CHECK(run({"closure", "--graph", g.path(), "--a", "a", "--b", "a"}).code == monohs::cli::kUsage);
  CHECK(run({"online", "--graph", g.path(), "--target", "a,b", "--mode", "perceptron"}).code ==
        monohs::cli::kUsage);
}

TEST_CASE("acceptance subcommand") {
  TempFile cfg(R"({"canonical":false,"all_connected_max_n":4,"gnp":{"count":2,"max_n":6},
                   "scale":{"run":false}})");
  auto ok = run({"acceptance", "--config", cfg.path(), "--criteria", "1,2,11"});
  REQUIRE(ok.code == 0);
  CHECK(ok.body()["pass"] == true);
  CHECK(ok.body()["criteria"].size() == 3);

  auto planted = run({"acceptance", "--config", cfg.path(), "--criteria", "1", "--plant-failure"});
  CHECK(planted.code == monohs::cli::kError);
  CHECK(planted.body()["criteria"][0]["pass"] == false);

  TempFile empty(R"({"canonical":false,"all_connected_max_n":0,"gnp":{"count":0},
                     "scale":{"run":false}})");
  CHECK(run({"acceptance", "--config", empty.path()}).code == monohs::cli::kUsage);
}
