#include <doctest.h>

#include <set>

#include "sw/chisel.hpp"
#include "sw/experiments.hpp"
#include "sw/segment.hpp"

using namespace sw;

TEST_CASE("segment structure holds after every step") {
  for (std::uint64_t s = 1; s <= 8; ++s) {
    LazyHalfPlane H(s);
    SegmentRunConfig cfg;
    cfg.budget = 120;
    cfg.check_every = 1;
    auto rep = run_segment(H, 0, cfg);
    CHECK(rep.structure.ok());
    CHECK(rep.steps == 120);
    for (auto& m : rep.structure.messages) MESSAGE(m);
  }
}

TEST_CASE("segment step updates") {
  LazyHalfPlane H(3);
  SegmentProcess P(H, BaseBoundary::initial(H), 0);
  for (int i = 0; i < 60; ++i) {
    const int tail = P.tail, head = P.head();
    const auto& r = P.step();
    if (r.side == Side::Left) {
      // the root edge is kept
      CHECK(P.tail == tail);
      CHECK(P.head() == head);
    } else {
      // the chord becomes the root
      CHECK(P.tail == r.v0);
      CHECK(P.root_dart() == r.chord);
    }
    // the head stays on the initial boundary
    CHECK(P.base.contains(P.head()));
  }
  // red tree through the tails
  auto red = P.tails;
  for (size_t i = 1; i < red.size(); ++i)
    if (red[i] != red[i - 1]) {
      int d = out_dart(H.map, P.ex.wood, red[i], kRed);
      CHECK(d >= 0);
    }
}

TEST_CASE("finite boundary runs reproduce the finite peeling") {
  for (int r = 0; r < 60; ++r) {
    int m = 1 + r % 4, n = r % 40;
    auto t = sample_uniform(m, n, static_cast<std::uint64_t>(r));
    Wood w = peel_finite(t);
    for (int f : {-1, 0, t.ntri() - 1}) {
      auto run = run_finite_boundary(t, f);
      CHECK(run.complete);
      CHECK(run.wood.color == w.color);
      CHECK(run.wood.out == w.out);
    }
  }
}

TEST_CASE("removal leaves the step law intact") {
  auto W = removal_law(5, 200, 200, 50);
  CHECK(W.lefts + W.rights == 200 * 50);
  CHECK(W.p_side > 0.01);
  CHECK(W.p_ms > 0.01);
}

TEST_CASE("strip processes with equal roots agree") {
  StripConfig cfg;
  cfg.x = cfg.y = -4;
  auto s = strip_consistency(9, cfg, 20);
  CHECK(s.disagree == 0);
  CHECK(s.frequency() == 1.0);
}

TEST_CASE("strip consistency is reproducible") {
  StripConfig cfg;
  cfg.x = -2;
  cfg.y = -6;
  std::vector<StripReplica> a, b;
  strip_consistency(4, cfg, 12, 1, &a);
  strip_consistency(4, cfg, 12, 2, &b);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].disagreements == b[i].disagreements);
    CHECK(a[i].steps_x == b[i].steps_x);
    CHECK(a[i].disagreements_left <= a[i].disagreements);
  }
}

TEST_CASE("small chisel run") {
  ChiselConfig cfg;
  cfg.layers = 2;
  cfg.window = 80;
  cfg.walks = 20;
  auto R = chisel(2, cfg);
  CHECK(R.ok());
  CHECK(R.layers.size() == 2);
  CHECK(R.triangles.checks > 0);
  CHECK(R.walks.checks == 20);
}

TEST_CASE("convergence probe is deterministic and bounded") {
  auto a = uipt_convergence_probe(1, 1, {10, 20}, 60, 3);
  auto b = uipt_convergence_probe(1, 1, {10, 20}, 60, 3, 2);
  REQUIRE(a.size() == 2);
  CHECK(a[0].tv_prev == -1);
  CHECK(a[1].tv_prev >= 0);
  CHECK(a[1].tv_prev <= 1);
  CHECK(a[1].tv_prev == b[1].tv_prev);
  CHECK(a[1].classes == b[1].classes);
}
