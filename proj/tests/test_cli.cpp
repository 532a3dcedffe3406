#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rhorep/cli.hpp"
#include "rhorep/lawrence.hpp"

using namespace rhorep;
using rhorep::cli::Command;
using rhorep::cli::RunConfig;

namespace {

RunConfig make(Command c, int n, int l, int r) {
  RunConfig cfg;
  cfg.command = c;
  cfg.n = n;
  cfg.l = l;
  cfg.r = r;
  return cfg;
}

}  // namespace

TEST_CASE("dims") {
  auto out = cli::execute(make(Command::dims, 3, 2, 4));
  CHECK(out.status == 0);
  CHECK(out.doc["kappa"] == 6);
  CHECK(out.doc["dimA"] == 3);
  CHECK(out.doc["dimB"] == 3);
  CHECK(out.doc["dimW"] == 3);
  auto big = cli::execute(make(Command::dims, 3, 5, 4));
  CHECK(big.status == 0);
  CHECK_FALSE(big.doc.contains("dimW"));
}

TEST_CASE("twist") {
  auto out = cli::execute(make(Command::twist, 3, 2, 4));
  CHECK(out.status == 0);
  CHECK(out.doc["scalar_exponent"] == 16);
  CHECK(out.doc["nilpotent_nonzero"] == true);
  CHECK(out.doc["matches_formula"] == true);
  CHECK(out.doc["nilpotent_rank"] == 1);
}

TEST_CASE("matrices: one letter on W gives the generator, row-major") {
  RunConfig cfg = make(Command::matrices, 3, 2, 4);
  cfg.rep = "W";
  cfg.word = "1";
  cfg.float_check = true;
  auto out = cli::execute(cfg);
  REQUIRE(out.status == 0);
  const CMatrix& s1 = braid_on_W(3, 2, 4).sigma[0];
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) CHECK(cyc_from_json(out.doc["matrix"][i][j]) == s1(i, j));
  CHECK(out.doc["basis"].size() == 3);
  CHECK(out.doc["float_check"]["pass"] == true);
}

TEST_CASE("matrices for every representation") {
  for (const char* rep : {"V", "W", "N", "N20"}) {
    RunConfig cfg = make(Command::matrices, 3, 2, 4);
    cfg.rep = rep;
    cfg.float_check = true;
    auto out = cli::execute(cfg);
    CHECK(out.status == 0);
    CHECK(out.doc["generators"].size() == 2);
    CHECK(out.doc["float_check"]["pass"] == true);
  }
  RunConfig cfg = make(Command::matrices, 4, 2, 3);
  cfg.rep = "N21";
  cfg.word = "1,2,-3";
  cfg.float_check = true;
  auto out = cli::execute(cfg);
  CHECK(out.status == 0);
  CHECK(out.doc["float_check"]["pass"] == true);
  cfg.n = 5;  // no tensor model: the float column is skipped
  out = cli::execute(cfg);
  CHECK(out.status == 0);
  CHECK(out.doc["float_check"].contains("skipped"));
}

TEST_CASE("usage errors exit with 2") {
  auto bad = [](RunConfig cfg) { return cli::execute(cfg).status; };
  CHECK(bad(make(Command::dims, 1, 2, 4)) == 2);
  CHECK(bad(make(Command::dims, 3, 2, 1)) == 2);
  CHECK(bad(make(Command::twist, 3, 4, 4)) == 2);
  RunConfig m = make(Command::matrices, 3, 2, 4);
  m.rep = "X";
  CHECK(bad(m) == 2);
  m.rep = "V";
  m.word = "1,x";
  CHECK(bad(m) == 2);
  m.word = "3";
  CHECK(bad(m) == 2);
  RunConfig s = make(Command::split_check, 4, 2, 4);
  s.rep = "N21";
  CHECK(bad(s) == 2);
  s.rep = "Q";
  CHECK(bad(s) == 2);
  RunConfig h = make(Command::hecke, 4, 2, 4);
  h.check = "order";
  CHECK(bad(h) == 2);
  h.check = "trace";
  CHECK(bad(h) == 2);
  RunConfig g = make(Command::generic, 2, 2, 4);
  g.rep = "N21";
  CHECK(bad(g) == 2);
  g.rep = "N20";
  g.specialize = 2;
  CHECK(bad(g) == 2);
  RunConfig v;
  v.command = Command::verify_all;
  v.max_n = 1;
  CHECK(bad(v) == 2);
  CHECK(cli::execute(make(Command::dims, 1, 2, 4)).doc["kind"] == "usage");
}

TEST_CASE("split-check verdicts") {
  RunConfig cfg = make(Command::split_check, 3, 2, 4);
  cfg.rep = "N20";
  auto out = cli::execute(cfg);
  CHECK(out.status == 0);
  CHECK(out.doc["split"] == false);
  cfg.n = 4;
  out = cli::execute(cfg);
  CHECK(out.doc["split"] == true);
  CHECK(out.doc["certificate"]["closed_form_matches"] == true);
  cfg.rep = "SR";
  cfg.n = 3;
  out = cli::execute(cfg);
  CHECK(out.doc["split"] == false);
  cfg.rep = "N21";
  cfg.n = 4;
  cfg.r = 3;
  out = cli::execute(cfg);
  CHECK(out.status == 0);
  CHECK(out.doc["split"] == false);
}

TEST_CASE("generic and hecke commands") {
  RunConfig g = make(Command::generic, 3, 2, 4);
  g.rep = "N20";
  auto out = cli::execute(g);
  CHECK(out.status == 0);
  CHECK(out.doc["generators"].size() == 2);
  CHECK(lpoly_from_json(out.doc["generators"][0][1][0]) == LPoly3::t());
  g.specialize = 4;
  g.word = "1,-2";
  out = cli::execute(g);
  CHECK(out.doc.contains("matrix"));
  CHECK(out.doc["matrix"][0][0]["r"] == 4);

  RunConfig h = make(Command::hecke, 4, 2, 5);
  h.check = "minpoly";
  out = cli::execute(h);
  CHECK(out.status == 0);
  CHECK(out.doc["rep"] == "N20");
  CHECK(out.doc["annihilates"] == true);
  h.check = "order";
  h.n = 4;
  h.r = 6;
  out = cli::execute(h);
  CHECK(out.doc["rep"] == "N21");
  CHECK(out.doc["order"] == 6);
  h.check = "quotient42";
  out = cli::execute(h);
  CHECK(out.status == 0);
  CHECK(out.doc["matches"] == true);
}

TEST_CASE("verify-all is deterministic and independent of the thread count") {
  RunConfig v;
  v.command = Command::verify_all;
  v.max_n = 4;
  v.max_r = 4;
  v.float_check = true;
  ::setenv("RHOREP_THREADS", "1", 1);
  CHECK(cli::thread_budget() == 1);
  auto one = cli::execute(v);
  ::setenv("RHOREP_THREADS", "3", 1);
  CHECK(cli::thread_budget() == 3);
  auto three = cli::execute(v);
  ::setenv("RHOREP_THREADS", "zero", 1);
  CHECK(cli::thread_budget() >= 1);
  ::unsetenv("RHOREP_THREADS");
  CHECK(one.status == 0);
  CHECK(one.doc["all_pass"] == true);
  CHECK(one.doc.dump() == three.doc.dump());
}

TEST_CASE("output is written atomically") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "rhorep_cli_test";
  fs::create_directories(dir);
  RunConfig cfg = make(Command::dims, 3, 2, 4);
  cfg.output = (dir / "dims.json").string();
  std::ostringstream sink;
  CHECK(cli::run(cfg, sink) == 0);
  CHECK(sink.str().empty());
  std::ifstream in(cfg.output);
  auto doc = nlohmann::json::parse(in);
  CHECK(doc["kappa"] == 6);
  size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) files += e.is_regular_file() ? 1 : 0;
  CHECK(files == 1);
  cfg.output = (dir / "missing" / "x.json").string();
  CHECK(cli::run(cfg, sink) == 2);
  fs::remove_all(dir);
}
