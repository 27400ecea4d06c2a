#include <doctest.h>

#include "sw/errors.hpp"
#include "sw/samplers.hpp"
#include "sw/schnyder.hpp"
#include "support.hpp"

using namespace sw;

namespace {
Triangulation fan() { return build_from_faces({{0, 1, 3}, {1, 2, 3}, {2, 0, 3}}, {0, 1, 2}, {0, 1}); }

bool directed(const PlanarMap& m, const Wood& w, int u, int v, int c) {
  int d = m.find_dart(u, v);
  return d >= 0 && w.is_out(d) && w.color_of(d) == c;
}
}  // namespace

TEST_CASE("base case wood") {
  auto t = build_from_faces({{0, 1, 2}}, {0, 1, 2}, {0, 1});
  Wood w = peel_finite(t);
  const int v0 = t.boundary[0], v1 = t.boundary[1], v2 = t.boundary[2];
  CHECK(directed(t, w, v0, v2, kYellow));
  CHECK(directed(t, w, v0, v1, kRed));
  CHECK(directed(t, w, v1, v2, kYellow));
  CHECK_FALSE(find_anticlockwise_triangle(t, w).has_value());
  auto blue = monochrome_forest(t, w, kBlue);
  CHECK(blue.ok);
  CHECK(blue.roots.empty());
}

TEST_CASE("fan wood") {
  auto t = fan();
  Wood w = peel_finite(t);
  const int u = 3, vb = t.boundary[0], vr = t.vr(), vy = t.vy();
  CHECK(directed(t, w, u, vb, kBlue));
  CHECK(directed(t, w, u, vr, kRed));
  CHECK(directed(t, w, u, vy, kYellow));
  CHECK(directed(t, w, vb, vr, kRed));
  CHECK(directed(t, w, vb, vy, kYellow));
  CHECK(directed(t, w, vr, vy, kYellow));
  CHECK(verify_wood(t, w).ok);
  CHECK(all_3_orientations(t).size() == 1);
  auto red = monochrome_forest(t, w, kRed);
  CHECK(red.ok);
  CHECK(red.parent[u] == vr);
  CHECK(cycle_interior_outdegree(t, w, t.boundary) == 0);
  CHECK(cycle_interior_outdegree(t, w, {vb, vr, u}) == 0);

  SUBCASE("reversed edge breaks the out-degree") {
    Wood bad = w;
    int e = PlanarMap::edge_of(t.find_dart(u, vr));
    bad.out[e] ^= 1;
    auto rep = verify_wood(t, bad);
    CHECK_FALSE(rep.ok);
  }
  SUBCASE("recoloured edge duplicates a colour") {
    Wood bad = w;
    bad.color[PlanarMap::edge_of(t.find_dart(u, vr))] = kYellow;
    auto rep = verify_wood(t, bad);
    CHECK_FALSE(rep.ok);
  }
}

TEST_CASE("vertex word conditions") {
  CHECK(interior_condition("BRY"));
  CHECK(interior_condition("RbYrB"));
  CHECK(interior_condition("ByyRbYr"));
  CHECK_FALSE(interior_condition("BYR"));
  CHECK_FALSE(interior_condition("BRYB"));
  CHECK(boundary_condition("yyRbY"));
  CHECK_FALSE(boundary_condition("YR"));
  auto t = fan();
  Wood w = peel_finite(t);
  CHECK(interior_condition(vertex_word(t, w, 3, t.vdart[3])));
}

TEST_CASE("WOOD round trip") {
  auto t = sample_uniform(1, 40, 3ULL);
  Wood w = peel_finite(t);
  auto s = to_wood(t, w);
  Wood u = parse_wood(t, s);
  CHECK(u.color == w.color);
  CHECK(u.out == w.out);
  CHECK_THROWS_AS(parse_wood(t, "WOOD v1 1\ne 0 1 1 purple\n"), Error);
}

TEST_CASE("peeling equals the brute-force maximal wood") {
  for (int m = 1; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      for (auto& t : enumerate_all(m, n)) {
        Wood w = peel_finite(t);
        CHECK(verify_wood(t, w).ok);
        CHECK_FALSE(find_anticlockwise_triangle(t, w).has_value());
        int survivors = 0;
        Wood o = brute_force_maximal(t, &survivors);
        CHECK(survivors == 1);
        CHECK(o.color == w.color);
        CHECK(o.out == w.out);
      }
  for (auto& t : enumerate_all(2, 1)) {
    int survivors = 0;
    brute_force_maximal(t, &survivors);
    CHECK(survivors == 1);
  }
}

TEST_CASE("non-maximal orientations carry an anticlockwise triangle") {
  int flippable = 0;
  for (auto [m, n] : {std::pair{1, 3}, {2, 1}, {2, 2}})
  for (auto& t : enumerate_all(m, n)) {
    auto all = all_3_orientations(t);
    for (auto& o : all) {
      bool acw = has_anticlockwise_cycle(t, o);
      CHECK(acw == find_anticlockwise_triangle(t, o).has_value());
      if (acw) {
        ++flippable;
        CHECK(verify_wood(t, colour_orientation(t, o)).ok);
      }
    }
  }
  CHECK(flippable > 0);
}

TEST_CASE("the order of pending chords does not change the wood") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    auto t = sample_uniform(1 + static_cast<int>(s % 4), 30, s);
    Wood a = peel_finite(t, true), b = peel_finite(t, false);
    CHECK(a.out == b.out);
    CHECK(a.color == b.color);
  }
}

TEST_CASE("structure on random samples") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    Rng r = Rng(s).split("schnyder-structure");
    auto t = sample_uniform(1 + static_cast<int>(s % 3), 60, r);
    Wood w = peel_finite(t);
    REQUIRE(verify_wood(t, w).ok);
    for (int c : {kRed, kYellow, kBlue}) CHECK(monochrome_forest(t, w, c).ok);
    for (int v = 0; v < t.nv(); ++v)
      if (!t.on_boundary(v)) {
        auto p = path_from(t, w, v, kYellow);
        CHECK(p.back() == t.vy());
      }
    // yellow paths of boundary vertices run clockwise along the boundary; v_r uses the root
    CHECK(path_from(t, w, t.vr(), kYellow) == std::vector<int>{t.vr(), t.vy()});
    for (int i = 0; i < static_cast<int>(t.boundary.size()); ++i) {
      if (i == 1) continue;
      // boundary indices i, ..., 2 read clockwise, possibly skipping some via chords
      auto p = path_from(t, w, t.boundary[i], kYellow);
      const int nb = static_cast<int>(t.boundary.size());
      auto cw = [&](int v) { return (i - t.bpos[v] + nb) % nb; };
      for (size_t k = 0; k < p.size(); ++k) {
        CHECK(t.on_boundary(p[k]));
        if (k > 0) CHECK(cw(p[k]) > cw(p[k - 1]));
        CHECK(cw(p[k]) <= cw(t.vy()));
      }
      CHECK(p.back() == t.vy());
    }
    for (int k = 0; k < 10; ++k) {
      auto cyc = testing::random_disk_cycle(t, r, 40);
      CHECK(cycle_interior_outdegree(t, w, cyc) == static_cast<int>(cyc.size()) - 3);
      int v = static_cast<int>(r.below(t.nv()));
      if (!t.on_boundary(v)) {
        CHECK(check_braid(t, w, v).ok);
        CHECK(paths_disjoint(t, w, v));
      }
    }
  }
}

TEST_CASE("interior vertex link cycles") {
  auto t = sample_uniform(1, 80, 4ULL);
  Wood w = peel_finite(t);
  for (int v = 0; v < t.nv(); ++v) {
    if (t.on_boundary(v)) continue;
    bool near_boundary = false;
    for (int u : t.neighbors(v)) near_boundary |= t.on_boundary(u);
    if (near_boundary) continue;
    auto link = t.neighbors(v);
    CHECK(cycle_interior_outdegree(t, w, link) == static_cast<int>(link.size()) - 3);
  }
}
