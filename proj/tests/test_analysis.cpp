#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "sw/analysis.hpp"
#include "sw/embed.hpp"
#include "sw/errors.hpp"
#include "sw/samplers.hpp"
#include "support.hpp"

using namespace sw;

namespace {
Triangulation fan() { return build_from_faces({{0, 1, 3}, {1, 2, 3}, {2, 0, 3}}, {0, 1, 2}, {0, 1}); }

// Wheel of 5 around a centre, inside a ring of 6 outer vertices.
// 0 = centre, 1..5 = inner ring at angles 72 i, 6..11 = outer ring at angles 60 j.
struct Spiral {
  std::vector<double> x, y;
  std::vector<Face> faces;
  std::vector<int> boundary{6, 7, 8, 9, 10, 11};
};

double orient(const Spiral& s, const Face& f) {
  return (s.x[f[1]] - s.x[f[0]]) * (s.y[f[2]] - s.y[f[0]]) - (s.y[f[1]] - s.y[f[0]]) * (s.x[f[2]] - s.x[f[0]]);
}

Spiral spiral() {
  Spiral s;
  s.x.assign(12, 0);
  s.y.assign(12, 0);
  auto ang = [](int v) { return v <= 5 ? 2 * M_PI * (v - 1) / 5 : 2 * M_PI * (v - 6) / 6; };
  for (int v = 1; v < 12; ++v) {
    double r = v <= 5 ? 1.0 : 3.0;
    s.x[v] = r * std::cos(ang(v));
    s.y[v] = r * std::sin(ang(v));
  }
  for (int i = 0; i < 5; ++i) s.faces.push_back({0, 1 + i, 1 + (i + 1) % 5});
  // annulus: merge the two rings by angle
  int i = 0, j = 0;
  while (i < 5 || j < 6) {
    double ai = i < 5 ? 2 * M_PI * (i + 1) / 5 : 1e9, bj = j < 6 ? 2 * M_PI * (j + 1) / 6 : 1e9;
    int a = 1 + i % 5, b = 6 + j % 6;
    if (ai < bj) {
      s.faces.push_back({a, b, 1 + (i + 1) % 5});
      ++i;
    } else {
      s.faces.push_back({a, b, 6 + (j + 1) % 6});
      ++j;
    }
  }
  for (auto& f : s.faces)
    if (orient(s, f) < 0) std::swap(f[1], f[2]);
  return s;
}

double angle(const Spiral& s, int v) {
  double a = std::atan2(s.y[v], s.x[v]);
  return a < 0 ? a + 2 * M_PI : a;
}

Triangulation build(const Spiral& s, const std::vector<int>& perm) {
  std::vector<Face> f;
  for (auto& g : s.faces) f.push_back({perm[g[0]], perm[g[1]], perm[g[2]]});
  std::vector<int> b;
  for (int v : s.boundary) b.push_back(perm[v]);
  return build_from_faces(f, b, {b[0], b[1]});
}

std::vector<int> mapped(const std::vector<int>& p, const std::vector<int>& perm) {
  std::vector<int> q;
  for (int v : p) q.push_back(perm[v]);
  return q;
}
}  // namespace

TEST_CASE("leftmost walk on the fan") {
  auto t = fan();
  Wood w = peel_finite(t);
  int u = 3;
  auto L = leftmost_walk(t, w, t.find_dart(u, t.vr()));
  CHECK(L.vertices(t) == std::vector<int>{u, t.vr(), t.vy()});
  CHECK(L.end == Walk::End::Sink);
  CHECK_THROWS_AS(leftmost_walk(t, w, t.find_dart(t.vr(), u)), Error);
}

TEST_CASE("leftmost walks end at v_y and are simple") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    Rng r = Rng(s).split("walks");
    auto t = sample_uniform(1 + static_cast<int>(s % 3), 10 + static_cast<int>(s * 5), r);
    Wood w = peel_finite(t);
    for (int k = 0; k < 10; ++k) {
      int v = static_cast<int>(r.below(t.nv()));
      for (int d : t.darts_ccw(v)) {
        if (!w.is_out(d)) continue;
        auto L = leftmost_walk(t, w, d);
        auto vs = L.vertices(t);
        CHECK(vs.back() == t.vy());
        std::set<int> seen(vs.begin(), vs.end());
        CHECK(seen.size() == vs.size());
      }
    }
  }
}

TEST_CASE("winding around a spiral agrees with the geometric count") {
  Spiral S = spiral();
  std::vector<int> id(12);
  std::iota(id.begin(), id.end(), 0);
  auto t = build(S, id);
  REQUIRE(t.nv() == 12);
  const std::vector<int> P{0, 1, 6};   // the ray at angle 0
  auto nbr_in = [&](int v, int lo, int hi, double a0, double a1) {
    for (int u : t.neighbors(v))
      if (u >= lo && u <= hi && angle(S, u) > a0 && angle(S, u) < a1) return u;
    return -1;
  };

  std::vector<std::vector<int>> Qs;
  Qs.push_back({0, 3, 2, 1, 5, 4});   // clockwise through a0
  Qs.push_back({0, 4, 5, 1, 2, 3});   // anticlockwise through a0
  {
    // touches a0 from the left and returns to the left
    int b = nbr_in(1, 6, 11, 0.01, M_PI);
    REQUIRE(b >= 0);
    Qs.push_back({0, 2, 1, b});
  }
  {
    // clockwise through the outer end of P
    int b = nbr_in(2, 7, 11, 0.01, M_PI);
    REQUIRE(b >= 0);
    std::vector<int> q{0, 3, 2};
    for (int v = b; v != 11; v = v == 6 ? 11 : v - 1) q.push_back(v);
    q.push_back(11);
    int back = nbr_in(11, 2, 5, M_PI, 2 * M_PI);
    REQUIRE(back >= 0);
    q.push_back(back);
    Qs.push_back(q);
  }
  std::vector<int> expected{1, -1, 0, 1};
  Rng r(99);
  for (size_t i = 0; i < Qs.size(); ++i) {
    auto& Q = Qs[i];
    for (size_t k = 1; k < Q.size(); ++k) REQUIRE(t.find_dart(Q[k - 1], Q[k]) >= 0);
    int geo = testing::ray_crossings(S.x, S.y, 0, 0.0, Q);
    CHECK(geo == expected[i]);
    CHECK(winding_number(t, P, Q) == geo);
    // relabelling the vertices does not change the count
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<int> perm(12);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), r);
      auto u = build(S, perm);
      CHECK(winding_number(u, mapped(P, perm), mapped(Q, perm)) == geo);
    }
  }
  // Q never meets P again
  CHECK(winding_number(t, P, {0, 3, 9}) == 0);
  CHECK_THROWS_AS(winding_number(t, P, {3, 2}), Error);
}

TEST_CASE("geodesics") {
  auto t = fan();
  CHECK(geodesic(t, 3).size() == 2);
  CHECK(geodesic(t, 0) == std::vector<int>{0});
  auto u = sample_uniform(1, 150, 8ULL);
  auto dist = bfs_distances(u, u.boundary);
  for (int v = 0; v < u.nv(); ++v) CHECK(static_cast<int>(geodesic(u, v).size()) == dist[v] + 1);
}

TEST_CASE("grid embedding of the fan") {
  auto t = fan();
  Wood w = peel_finite(t);
  auto E = schnyder_grid_embedding(t, w);
  CHECK(E.gx[3] == 1);
  CHECK(E.gy[3] == 1);
  CHECK(E.gx[t.boundary[0]] == 0);
  CHECK(E.gy[t.boundary[0]] == 0);
  CHECK(E.gx[t.vr()] == 3);
  CHECK(E.gy[t.vr()] == 0);
  CHECK(E.gx[t.vy()] == 0);
  CHECK(E.gy[t.vy()] == 3);
  CHECK(count_crossings(t, E) == 0);
}

TEST_CASE("grid embeddings are planar") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    auto t = sample_uniform(1, 1 + static_cast<int>(s * 3 % 100), s);
    Wood w = peel_finite(t);
    auto E = schnyder_grid_embedding(t, w);
    CHECK(count_crossings(t, E) == 0);
    const long long F = t.ntri();
    CHECK(E.gx[t.vr()] == F);
    CHECK(E.gy[t.vy()] == F);
    for (int v = 0; v < t.nv(); ++v) {
      CHECK(E.gx[v] >= 0);
      CHECK(E.gy[v] >= 0);
      CHECK(E.gx[v] + E.gy[v] <= F);
    }
  }
  auto t2 = sample_uniform(2, 5, 1ULL);
  CHECK_THROWS_AS(schnyder_grid_embedding(t2, peel_finite(t2)), Error);
}

TEST_CASE("crossing counter sees crossings") {
  auto t = fan();
  Embedding E;
  E.kind = Embedding::Kind::Tutte;
  E.x = {0, 1, 0, 2};
  E.y = {0, 0, 1, 2};   // interior vertex pushed outside the triangle
  CHECK(count_crossings(t, E) > 0);
}

TEST_CASE("tutte embedding") {
  auto t = fan();
  const double h = std::sqrt(3.0) / 2;
  auto E = tutte_embedding(t, {{0, 0}, {1, 0}, {0.5, h}}, 1e-13);
  CHECK(E.x[3] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(E.y[3] == doctest::Approx(h / 3).epsilon(1e-12));
  CHECK_THROWS_AS(tutte_embedding(t, {{0, 0}, {1, 0}, {2, 0}}), Error);

  auto u = sample_uniform(1, 80, 12ULL);
  auto A = tutte_embedding(u, {}, 1e-10), B = tutte_embedding(u, {}, 1e-10);
  CHECK(A.residual < 1e-9);
  CHECK(A.x == B.x);
  CHECK(A.y == B.y);
  CHECK(count_crossings(u, A) == 0);
}

TEST_CASE("svg output") {
  auto t = sample_uniform(1, 30, 6ULL);
  Wood w = peel_finite(t);
  auto E = schnyder_grid_embedding(t, w);
  auto plain = render_svg(t, E);
  auto withw = render_svg(t, E, &w, {{path_from(t, w, 5, kRed), "#ff0000"}});
  for (const auto& s : {plain, withw}) {
    CHECK(s.rfind("<?xml", 0) == 0);
    size_t circles = 0;
    for (size_t p = s.find("<circle"); p != std::string::npos; p = s.find("<circle", p + 1)) ++circles;
    CHECK(static_cast<int>(circles) == t.nv());
    // tags balance
    std::vector<std::string> stack;
    bool ok = true;
    for (size_t p = s.find('<'); p != std::string::npos && ok; p = s.find('<', p + 1)) {
      size_t q = s.find('>', p);
      REQUIRE(q != std::string::npos);
      std::string tag = s.substr(p + 1, q - p - 1);
      if (tag[0] == '?' || tag.back() == '/') continue;
      std::string name = tag.substr(tag[0] == '/' ? 1 : 0, tag.find_first_of(" \t\n", 0) - (tag[0] == '/' ? 1 : 0));
      if (tag[0] == '/') {
        ok = !stack.empty() && stack.back() == name;
        if (ok) stack.pop_back();
      } else {
        stack.push_back(name);
      }
    }
    CHECK(ok);
    CHECK(stack.empty());
  }
  CHECK(withw.size() > plain.size());
}
