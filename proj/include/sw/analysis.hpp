#pragma once

#include <functional>
#include <vector>

#include "sw/planar_map.hpp"
#include "sw/schnyder.hpp"

namespace sw {

struct Walk {
  enum class End { Sink, Boundary, Budget };
  int start = -1;
  std::vector<int> darts;
  End end = End::Sink;
  std::vector<int> vertices(const PlanarMap& m) const;
  int length() const { return static_cast<int>(darts.size()); }
};

// Leftmost walk from dart e: at each vertex take the first outgoing dart
// clockwise from the dart we came in on. Stops at a vertex with no outgoing
// dart, or as soon as `stop` holds for the current vertex. Running past the
// budget throws BudgetExhausted unless throw_on_budget is false.
Walk leftmost_walk(const PlanarMap& m, const Wood& w, int e, int budget = 1 << 20,
                   const std::function<bool(int)>& stop = {}, bool throw_on_budget = true);

// Signed number of times Q crosses P strictly from left to right (right to
// left counts -1). Both are vertex sequences with the same first vertex.
// Shared stretches are resolved by the side Q arrives from and leaves to.
int winding_number(const PlanarMap& m, const std::vector<int>& P, const std::vector<int>& Q);

// shortest path from v to the boundary, ties to the smallest vertex id
std::vector<int> geodesic(const Triangulation& t, int v);

}  // namespace sw
