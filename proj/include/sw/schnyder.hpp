#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sw/planar_map.hpp"

namespace sw {

enum Color : std::int8_t { kNone = -1, kRed = 0, kYellow = 1, kBlue = 2 };
const char* color_name(int c);
int parse_color(const std::string& s);

// Per-edge orientation and colour. out[e] is the dart of edge e leaving its tail.
struct Wood {
  std::vector<std::int8_t> color;
  std::vector<int> out;

  void ensure(int ne) {
    if (static_cast<int>(color.size()) < ne) {
      color.resize(ne, kNone);
      out.resize(ne, -1);
    }
  }
  void set(int dart, int c) {
    ensure(PlanarMap::edge_of(dart) + 1);
    color[PlanarMap::edge_of(dart)] = static_cast<std::int8_t>(c);
    out[PlanarMap::edge_of(dart)] = dart;
  }
  int color_of(int dart) const {
    int e = PlanarMap::edge_of(dart);
    return e < static_cast<int>(color.size()) ? color[e] : static_cast<int>(kNone);
  }
  bool oriented(int dart) const {
    int e = PlanarMap::edge_of(dart);
    return e < static_cast<int>(out.size()) && out[e] >= 0;
  }
  bool is_out(int dart) const {
    int e = PlanarMap::edge_of(dart);
    return e < static_cast<int>(out.size()) && out[e] == dart;
  }
  int ncolored() const;
  bool complete(const PlanarMap& m) const;
};

// Exploration bookkeeping shared by the finite peeling and the infinite processes:
// which triangles this explorer has explored, which vertices it has revealed, and the wood.
class Explorer {
 public:
  explicit Explorer(PlanarMap& map) : map_(&map) {}

  // called before inspecting the face left of a dart (lazy maps materialise here)
  std::function<void(int)> resolve;
  bool left_first = true;

  struct Shape {
    int v0 = -1;
    int s = -1;       // v0 -> v1
    int chord = -1;   // v0 -> vc
    std::vector<int> udarts;   // v0 -> u_i in anticlockwise order
    std::vector<int> faces;
  };

  bool unexplored(int d);
  // vertices that count as revealed without being stored (an infinite initial boundary)
  std::function<bool(int)> base_revealed;
  bool revealed(int v) const {
    return (v < static_cast<int>(revealed_.size()) && revealed_[v]) || (base_revealed && base_revealed(v));
  }
  void mark_explored(int f) {
    grow();
    explored_[f] = 1;
  }
  void reveal(int v);
  bool explored_face(int f) const { return f >= 0 && f < static_cast<int>(explored_.size()) && explored_[f]; }
  // one peeling step at v0 = org[s], s = v0 -> v1: colours and marks the step triangles
  Shape scan(int s);
  // peel the finite region on the left of root dart (already coloured)
  void fill(int root_dart);
  // optional observer for every coloured step (used by structure checks)
  std::function<void(const Shape&)> on_step;

  Wood wood;
  PlanarMap& map() { return *map_; }
  const std::vector<char>& explored_flags() const { return explored_; }

 private:
  void grow();
  PlanarMap* map_;
  std::vector<char> explored_;
  std::vector<char> revealed_;
};

Wood peel_finite(const Triangulation& t, bool left_first = true);

struct WoodReport {
  bool ok = true;
  std::string condition;
  int vertex = -1;
  std::string word;
  int deferred = 0;
  std::string str() const;
};

// cyclic word of edge roles at v, anticlockwise from start: R/Y/B outgoing, r/y/b incoming, ? uncoloured
std::string vertex_word(const PlanarMap& m, const Wood& w, int v, int start);

WoodReport verify_wood(const Triangulation& t, const Wood& w);
// vertex-level checks usable on partial woods
bool interior_condition(const std::string& cyclic_word);
bool boundary_condition(const std::string& word_from_boundary);

// does the left side of a closed dart cycle contain only bounded faces?
bool left_side_bounded(const PlanarMap& m, const std::vector<int>& cycle_darts);

struct DirectedTriangle {
  int a, b, c;
};
std::optional<DirectedTriangle> find_anticlockwise_triangle(const Triangulation& t, const Wood& w);
// same search on any map with a (possibly partial) orientation; no 3-orientation check
std::optional<DirectedTriangle> find_anticlockwise_triangle_map(const PlanarMap& m, const Wood& w,
                                                                const std::vector<int>& vertices);
void check_3_orientation(const Triangulation& t, const Wood& w);

int cycle_interior_outdegree(const PlanarMap& m, const Wood& w, const std::vector<int>& cycle);

struct Forest {
  int color = kNone;
  std::vector<int> parent;   // -1 if no outgoing edge of this colour
  std::vector<int> roots;
  bool ok = true;
  std::string message;
};
Forest monochrome_forest(const Triangulation& t, const Wood& w, int color);

// outgoing dart of colour c at v, -1 if none
int out_dart(const PlanarMap& m, const Wood& w, int v, int c);
std::vector<int> path_from(const PlanarMap& m, const Wood& w, int v, int color, int budget = -1);

struct BraidReport {
  bool ok = true;
  std::string message;
};
BraidReport check_braid(const Triangulation& t, const Wood& w, int v);
bool paths_disjoint(const PlanarMap& m, const Wood& w, int v);

// orientations are Wood values with colours unset
std::vector<Wood> all_3_orientations(const Triangulation& t);
bool has_anticlockwise_cycle(const Triangulation& t, const Wood& orientation);
Wood brute_force_maximal(const Triangulation& t, int* survivors = nullptr);
// the unique colouring of a 3-orientation that passes verify_wood (brute force)
Wood colour_orientation(const Triangulation& t, const Wood& orientation);

std::string to_wood(const PlanarMap& m, const Wood& w);
Wood parse_wood(const PlanarMap& m, const std::string& text);

// rooted canonical code of the coloured ball of radius rho around the root tail
std::vector<int> colored_ball_code(const Triangulation& t, const Wood& w, int rho);

}  // namespace sw
