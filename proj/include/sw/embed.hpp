#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sw/planar_map.hpp"
#include "sw/schnyder.hpp"

namespace sw {

struct Embedding {
  enum class Kind { SchnyderGrid, Tutte };
  Kind kind = Kind::SchnyderGrid;
  std::vector<double> x, y;
  std::vector<long long> gx, gy;   // integer coordinates of the grid kind
  double residual = 0;
  int iterations = 0;
};

// Grid drawing from region face counts: v -> (|R_r(v)|, |R_y(v)|), where
// R_c(v) is the region cut off by the other two paths from v. Corners:
// v_0 -> (0,0), v_1 -> (F,0), v_2 -> (0,F) with F the number of inner faces.
// Needs m = 1.
Embedding schnyder_grid_embedding(const Triangulation& t, const Wood& w);

// Barycentric drawing with the boundary pinned to a strictly convex polygon
// (regular when empty). Sweeps in vertex order until the largest move is below
// tol; throws NonConvergence if that does not happen within max_sweeps.
Embedding tutte_embedding(const Triangulation& t, std::vector<std::pair<double, double>> polygon = {},
                          double tol = 1e-12, int max_sweeps = 1'000'000, double omega = 1.5);

// Pairs of edges that meet anywhere other than at a shared endpoint, with exact
// predicates on the coordinates (doubles are exact dyadic rationals).
long long count_crossings(const PlanarMap& m, const Embedding& e);

struct Highlight {
  std::vector<int> path;
  std::string color;
};
std::string render_svg(const PlanarMap& m, const Embedding& e, const Wood* w = nullptr,
                       const std::vector<Highlight>& highlights = {});

}  // namespace sw
