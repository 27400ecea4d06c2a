#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sw/planar_map.hpp"
#include "sw/schnyder.hpp"
#include "sw/segment.hpp"

namespace sw {

struct ChiselConfig {
  long long x = 0;
  int layers = 3;
  long long window = 300;   // initial-boundary positions x .. x+window-1 covered by layer 1
  long long margin = 30;    // each later layer is rooted this far left of the previous corner
  int budget = 200000;      // steps per layer
  int walks = 50;
  int hole_cap = LazyHalfPlane::kDefaultHoleCap;
  int hole_ncap = LazyHalfPlane::kDefaultHoleNCap;
};

struct ChiselLayer {
  int steps = 0;
  bool exhausted = false;
  long long root_index = 0;    // H index of the root tail
  int corner = -1, tail = -1, head = -1;
  int root_edge = -1;                    // final root edge
  std::vector<int> yellow, red, blue;   // distinguished paths
  std::vector<int> upper;                // upper boundary left to right, tail excluded
  std::vector<int> lower;                // base vertices covered by this layer
  StructureReport structure;             // the layer's own segment checks
};

struct ChiselResult {
  PlanarMap map;
  Wood wood;                         // all layers merged
  std::vector<int> edge_layer;       // 1-based layer of each coloured edge, 0 if uncoloured
  std::vector<ChiselLayer> layers;
  long long window_lo = 0, window_hi = -1;   // initial-boundary indices covered by layer 1
  std::vector<char> initial;         // vertex lies on the initial boundary
  std::vector<char> opaque;          // vertex lies on an unmaterialised hole
  // final tail and head of every layer below the top one: the finite run ends
  // there, and the next layer covers them although the infinite segment would not
  std::vector<char> junction;
  std::vector<std::uint64_t> levels; // bit 3(l-1)+{0,1,2} for yellow, red, blue path of layer l
  bool exhausted = false;
  bool blocked = false;              // a scan reached an unmaterialised region

  StructureReport overlap;      // an edge coloured by two layers
  StructureReport triangles;    // anticlockwise triangles
  StructureReport order;        // each distinguished path points to the preceding one
  StructureReport upper;        // upper-boundary blue edges into the layer's blue path
  StructureReport interface;    // Schnyder condition at interface vertices
  StructureReport walks;        // leftmost-walk descent
  int walks_anchored = 0;       // walks that met a distinguished path before the boundary

  bool ok() const;
  std::string summary() const;
};

ChiselResult chisel(std::uint64_t seed, const ChiselConfig& cfg);

}  // namespace sw
