#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "sw/schnyder.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  std::string cmd = std::string(SWOOD_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string tmp(const std::string& name) { return "swood_cli_test_" + name; }

}  // namespace

TEST_CASE("count") {
  auto r = run("count --m 1 --n 2");
  CHECK(r.status == 0);
  CHECK(r.out == "3\n");
  auto t = run("count --table-m 2 --table-n 2");
  CHECK(t.out.rfind("# swood ", 0) == 0);
  CHECK(t.out.find("2,2,") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").status == 2);
  CHECK(run("sample --m 1 --n 3").status == 2);   // no seed
  CHECK(run("sample --mode bogus --seed 1").status == 2);
  CHECK(run("count --m x").status == 2);
}

TEST_CASE("sample, wood and verify") {
  auto s = run("sample --m 1 --n 40 --seed 12 --out " + tmp("a.tri"));
  REQUIRE(s.status == 0);
  auto w = run("wood --in " + tmp("a.tri") + " --verify --out " + tmp("a.wood"));
  CHECK(w.status == 0);
  CHECK(w.out.find("schnyder: ok") != std::string::npos);
  CHECK(run("verify --in " + tmp("a.tri") + " --wood " + tmp("a.wood")).status == 0);

  // a non-maximal wood fails verification as maximal
  {
    sw::Triangulation t;
    sw::Wood lower;
    for (auto& u : sw::enumerate_all(2, 1))
      for (auto& o : sw::all_3_orientations(u))
        if (lower.out.empty() && sw::has_anticlockwise_cycle(u, o)) {
          t = u;
          lower = sw::colour_orientation(u, o);
        }
    REQUIRE(!lower.out.empty());
    std::ofstream(tmp("b.tri")) << sw::to_tri(t);
    std::ofstream(tmp("b.wood")) << sw::to_wood(t, lower);
    auto v = run("verify --in " + tmp("b.tri") + " --wood " + tmp("b.wood"));
    CHECK(v.status == 1);
    CHECK(v.out.find("maximal: no") != std::string::npos);
  }

  // a corrupted wood file
  {
    std::ifstream in(tmp("a.wood"));
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto p = all.find(" red");
    REQUIRE(p != std::string::npos);
    all.replace(p, 4, " blue");
    std::ofstream(tmp("c.wood")) << all;
  }
  CHECK(run("verify --in " + tmp("a.tri") + " --wood " + tmp("c.wood")).status == 1);

  auto small = run("sample --m 1 --n 3 --seed 4 --out " + tmp("s.tri"));
  REQUIRE(small.status == 0);
  CHECK(run("wood --in " + tmp("s.tri") + " --oracle").out.find("oracle: equal") != std::string::npos);
  CHECK(run("oracle --in " + tmp("s.tri")).status == 0);
  auto paths = run("wood --in " + tmp("s.tri") + " --paths 3");
  CHECK(paths.out.find("red:") != std::string::npos);
  CHECK(run("wood --in missing_file.tri").status == 1);
}

TEST_CASE("outputs are byte-deterministic") {
  for (std::string a : {"sample --m 2 --n 25 --seed 7", "sample --mode free --m 3 --seed 7",
                        "sample --mode uihpt --steps 50 --seed 7", "segment --seed 3 --steps 40",
                        "striptest --seed 5 --replicas 6", "uiptprobe --seed 2 --replicas 20 --sizes 10,20",
                        "winding --seed 2 --n 60 --samples 5", "chisel --seed 3 --layers 2 --window 60 --walks 5"}) {
    auto x = run(a), y = run(a);
    CHECK_MESSAGE(x.out == y.out, a);
    CHECK_MESSAGE(x.status == 0, a);
    CHECK_MESSAGE(!x.out.empty(), a);
  }
  auto p = run("striptest --seed 5 --replicas 6 --jobs 2");
  CHECK(p.out == run("striptest --seed 5 --replicas 6").out);
}

TEST_CASE("csv headers echo the configuration") {
  auto s = run("segment --seed 3 --steps 10 --x 4");
  CHECK(s.out.rfind("# swood " SW_VERSION " segment", 0) == 0);
  CHECK(s.out.find("x=4") != std::string::npos);
  CHECK(s.out.find("step,side,k,ms,xi,cov_lo,cov_hi,head_pos") != std::string::npos);
  auto l = run("law --what free --m 1 --nmax 2");
  CHECK(l.out.find("0,27/32") != std::string::npos);
  auto c = run("law --what coverage");
  CHECK(c.out.find("E_xi,1/2") != std::string::npos);
}

TEST_CASE("embed") {
  run("sample --m 1 --n 60 --seed 3 --out " + tmp("e.tri"));
  auto g = run("embed --in " + tmp("e.tri") + " --svg " + tmp("e.svg") + " --highlight 10");
  CHECK(g.status == 0);
  CHECK(g.out.find("crossings: 0") != std::string::npos);
  auto tt = run("embed --kind tutte --in " + tmp("e.tri") + " --svg " + tmp("f.svg"));
  CHECK(tt.status == 0);
  std::ifstream in(tmp("e.svg"));
  std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(svg.find("</svg>") != std::string::npos);
}
