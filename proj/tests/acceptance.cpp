// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "sw/analysis.hpp"
#include "sw/chisel.hpp"
#include "sw/counting.hpp"
#include "sw/embed.hpp"
#include "sw/experiments.hpp"
#include "sw/samplers.hpp"
#include "sw/schnyder.hpp"
#include "sw/segment.hpp"
#include "sw/stats.hpp"
#include "support.hpp"

using namespace sw;

namespace {

constexpr std::uint64_t kSeed = 20261015;

// pinned tolerances
constexpr double kNormTol = 1e-12;
constexpr double kLeftFrac = 0.75, kLeftTol = 0.01;
constexpr double kMeanXi = 0.5, kXiTol = 0.02;
constexpr double kKsAlpha = 0.01;
constexpr double kStripSlack = 0.05;
constexpr double kTutteResidual = 1e-9;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << " first failure: " << what << ";";
      pass = false;
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.note << " exception: " << e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) {
    o.pass = false;
    o.note << " over time limit " << limit_s << "s;";
  }
  if (!o.pass) ++failures;
  std::printf("%s C%d %s (%.1fs)%s\n", o.pass ? "PASS" : "FAIL", id, name, secs, o.note.str().c_str());
  std::fflush(stdout);
}

Rng master(const char* tag) { return Rng(kSeed).split(tag); }

}  // namespace

int main() {
  criterion(1, "enumeration exactness", 60, [](Outcome& o) {
    int cells = 0;
    for (int m = 1; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n) {
        auto all = enumerate_all(m, n);
        std::set<std::vector<int>> codes;
        for (auto& t : all) codes.insert(canonical_code(t));
        o.require(codes.size() == all.size(), "duplicate triangulation in enumeration");
        o.require(count_triangulations(m, n) == all.size(),
                  "count(" + std::to_string(m) + "," + std::to_string(n) + ")");
        ++cells;
      }
    o.note << " cells=" << cells;
  });

  criterion(2, "step-law normalization", 5, [](Outcome& o) {
    auto N = normalization_bracket(60, 60);
    const Rational tol(1, 1'000'000'000'000LL);
    o.require(N.total.contains(1), "total bracket misses 1");
    o.require(N.total.lo >= 1 - tol && N.total.hi <= 1 + tol, "total bracket wider than tolerance");
    o.require(N.left.contains(Rational(3, 4)), "left bracket misses 3/4");
    o.require(N.right.contains(Rational(1, 4)), "right bracket misses 1/4");
    o.note << " total width=" << N.total.width().convert_to<double>() << " tol=" << kNormTol;
  });

  criterion(3, "maximal-wood oracle equivalence", 120, [](Outcome& o) {
    int instances = 0;
    for (int m = 1; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n)
        for (auto& t : enumerate_all(m, n)) {
          Wood w = peel_finite(t);
          int survivors = 0;
          Wood b = brute_force_maximal(t, &survivors);
          o.require(survivors == 1, "anticlockwise-free orientation not unique");
          o.require(b.color == w.color && b.out == w.out, "peeling differs from the oracle");
          ++instances;
        }
    o.note << " instances=" << instances;
  });

  criterion(4, "condition suite", 600, [](Outcome& o) {
    Rng R = master("C4");
    const int sizes[3] = {10, 50, 200};
    long long cycles = 0, braids = 0;
    for (int i = 0; i < 1000; ++i) {
      Rng r = R.split(i);
      auto t = sample_uniform(1, sizes[i % 3], r);
      Wood w = peel_finite(t);
      auto rep = verify_wood(t, w);
      o.require(rep.ok, "verify_wood: " + rep.str());
      o.require(!find_anticlockwise_triangle(t, w).has_value(), "anticlockwise triangle");
      for (int k = 0; k < 100; ++k) {
        auto cyc = testing::random_disk_cycle(t, r, 1 + static_cast<int>(r.below(3 * t.nv())));
        o.require(cycle_interior_outdegree(t, w, cyc) == static_cast<int>(cyc.size()) - 3, "cycle law");
        ++cycles;
      }
      // each colour class is a tree on the interior vertices rooted at its outer vertex
      const int root[3] = {t.vr(), t.vy(), t.boundary[0]};
      for (int c : {kRed, kYellow, kBlue}) {
        auto f = monochrome_forest(t, w, c);
        o.require(f.ok, "forest: " + f.message);
        for (int v = 0; v < t.nv(); ++v)
          if (!t.on_boundary(v)) o.require(path_from(t, w, v, c).back() == root[c], "tree root");
      }
      // yellow paths of boundary vertices stay on the boundary, clockwise towards v_y
      const int nb = static_cast<int>(t.boundary.size());
      for (int b = 0; b < nb; ++b) {
        if (b == 1) continue;
        auto p = path_from(t, w, t.boundary[b], kYellow);
        int prev = -1;
        for (int v : p) {
          o.require(t.on_boundary(v), "yellow boundary path leaves the boundary");
          int cw = (b - t.bpos[v] + nb) % nb;
          o.require(cw > prev, "yellow boundary path not clockwise");
          prev = cw;
        }
        o.require(p.back() == t.vy(), "yellow boundary path misses v_y");
      }
      for (int k = 0; k < 20; ++k) {
        int v;
        do v = static_cast<int>(r.below(t.nv()));
        while (t.on_boundary(v));
        auto b = check_braid(t, w, v);
        o.require(b.ok, "braid: " + b.message);
        ++braids;
      }
    }
    o.note << " samples=1000 cycles=" << cycles << " braids=" << braids;
  });

  criterion(5, "drift and side frequencies", 600, [](Outcome& o) {
    Rng R = master("C5");
    LazyHalfPlane H(R.split("uihpt").key());
    SegmentProcess P(H, BaseBoundary::initial(H), 0);
    const int N = 100000;
    long long lefts = 0;
    double xi = 0;
    for (int i = 0; i < N; ++i) {
      const auto& s = P.step();
      lefts += s.side == Side::Left;
      xi += s.xi;
    }
    const double lf = static_cast<double>(lefts) / N, mx = xi / N;
    o.require(std::abs(lf - kLeftFrac) <= kLeftTol, "left fraction");
    o.require(std::abs(mx - kMeanXi) <= kXiTol, "mean displacement");

    std::vector<double> a, b;
    for (int r = 0; r < 200; ++r) {
      LazyHalfPlane G(R.split("segment").split(r).key());
      SegmentRunConfig cfg;
      cfg.budget = 300;
      cfg.check_every = -1;
      a.push_back(static_cast<double>(run_segment(G, 0, cfg).leftward_coverage));
    }
    Rng orc = R.split("oracle");
    for (int r = 0; r < 2000; ++r) {
      Rng q = orc.split(r);
      b.push_back(static_cast<double>(coverage_oracle(q, 300)));
    }
    auto ks = ks_two_sample(a, b);
    o.require(ks.p > kKsAlpha, "KS coverage");
    o.note << " left=" << lf << " mean_xi=" << mx << " ks_d=" << ks.d << " ks_p=" << ks.p;
  });

  criterion(6, "weak-limit probe", 0, [](Outcome& o) {
    auto rows = uipt_convergence_probe(1, 1, {25, 50, 400, 800}, 2000, master("C6").key());
    const double small = rows[1].tv_prev, large = rows[3].tv_prev;
    o.require(large < small, "TV(400,800) not below TV(25,50)");
    o.note << " tv(25,50)=" << small << " tv(50,400)=" << rows[2].tv_prev << " tv(400,800)=" << large
           << " classes=" << rows[3].classes;
  });

  criterion(7, "strip consistency", 1200, [](Outcome& o) {
    const std::uint64_t seed = master("C7").key();
    StripConfig near, far;
    near.x = -1;
    near.y = -3;
    far.x = -5;
    far.y = -25;
    auto a = strip_consistency(seed, near, 500);
    auto b = strip_consistency(seed, far, 500);
    o.require(b.frequency() >= a.frequency() - kStripSlack, "agreement trend");
    o.require(a.disagreements_left == a.disagreements_total, "disagreement right of the common segment (near)");
    o.require(b.disagreements_left == b.disagreements_total, "disagreement right of the common segment (far)");
    o.note << " near: agree=" << a.agree << "/" << a.agree + a.disagree << " opaque=" << a.opaque
           << " exhausted=" << a.exhausted << "; far: agree=" << b.agree << "/" << b.agree + b.disagree
           << " opaque=" << b.opaque << " exhausted=" << b.exhausted;
  });

  criterion(8, "chiselling structure", 0, [](Outcome& o) {
    ChiselConfig cfg;
    cfg.layers = 3;
    cfg.window = 300;
    cfg.walks = 50;
    auto R = chisel(kSeed, cfg);
    o.require(R.window_hi - R.window_lo >= 300, "window narrower than 300");
    o.require(static_cast<int>(R.layers.size()) == 3, "layer count");
    o.require(!R.exhausted && !R.blocked, "budget exhausted or blocked");
    o.require(R.triangles.ok(), "anticlockwise triangle");
    o.require(R.order.ok(), "distinguished path order");
    o.require(R.upper.ok(), "upper boundary blue edges");
    o.require(R.interface.ok(), "layer interface");
    o.require(R.overlap.ok(), "colour overlap");
    o.require(R.walks.ok() && R.walks.checks == 50, "leftmost walk descent");
    o.note << " window=[" << R.window_lo << "," << R.window_hi << "] triangles=" << R.triangles.checks
           << " walks deferred=" << R.walks.deferred << " interface deferred=" << R.interface.deferred << "/"
           << R.interface.checks;
  });

  criterion(9, "winding bound", 0, [](Outcome& o) {
    Rng R = master("C9");
    auto pick = [](const Triangulation& t, const Wood& w, Rng& r, int& v) {
      do v = static_cast<int>(r.below(t.nv()));
      while (t.on_boundary(v));
      std::vector<int> outs;
      for (int d : t.darts_ccw(v))
        if (w.is_out(d)) outs.push_back(d);
      int e = outs[r.below(outs.size())];
      return leftmost_walk(t, w, e, t.nv() + 1, [&](int u) { return t.on_boundary(u); });
    };
    int worst = 0;
    for (int i = 0; i < 200; ++i) {
      Rng r = R.split("triples").split(i);
      auto t = sample_uniform(1, 200, r);
      Wood w = peel_finite(t);
      int v;
      Walk L = pick(t, w, r, v);
      int c = static_cast<int>(r.below(3));
      int wn = winding_number(t, L.vertices(t), path_from(t, w, v, c));
      int dev3 = std::abs(3 * wn - L.length());   // 3 |w - |L|/3|
      worst = std::max(worst, dev3);
      o.require(dev3 <= 3, "|w - |L|/3| > 1");
    }
    for (int i = 0; i < 20; ++i) {
      Rng r = R.split("span").split(i);
      auto t = sample_uniform(1, 200, r);
      Wood w = peel_finite(t);
      int v;
      Walk L = pick(t, w, r, v);
      const int g = L.length();
      const int lo = g / 3 - 1, hi = (g + 2) / 3 + 1;
      for (int c : {kRed, kYellow, kBlue}) {
        int wn = winding_number(t, L.vertices(t), path_from(t, w, v, c));
        o.require(wn >= lo && wn <= hi, "winding outside span");
      }
    }
    o.note << " max 3|w-|L|/3|=" << worst;
  });

  criterion(10, "embedding planarity", 0, [](Outcome& o) {
    Rng R = master("C10");
    long long crossings = 0;
    double worst = 0;
    for (int i = 0; i < 500; ++i) {
      Rng r = R.split(i);
      auto t = sample_uniform(1, 1 + static_cast<int>(r.below(100)), r);
      Wood w = peel_finite(t);
      auto E = schnyder_grid_embedding(t, w);
      crossings += count_crossings(t, E);
      for (int v = 0; v < t.nv(); ++v)
        o.require(E.gx[v] >= 0 && E.gy[v] >= 0 && E.gx[v] + E.gy[v] <= t.ntri(), "grid bound");
      if (i % 10 == 0) {
        auto A = tutte_embedding(t, {}, 1e-10), B = tutte_embedding(t, {}, 1e-10);
        worst = std::max(worst, A.residual);
        o.require(A.residual < kTutteResidual, "Tutte residual");
        o.require(A.x == B.x && A.y == B.y, "Tutte not reproducible");
        o.require(count_crossings(t, A) == 0, "Tutte crossing");
      }
    }
    o.require(crossings == 0, "grid crossings");
    o.note << " grid crossings=" << crossings << " tutte max residual=" << worst;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
