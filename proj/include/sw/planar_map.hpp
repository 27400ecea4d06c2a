#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sw {

// Face labels stored per dart (the face on the dart's left).
constexpr int kExterior = -1;
constexpr int kUnexplored = -2;
inline int hole_label(int h) { return -3 - h; }
inline bool is_hole(int f) { return f <= -3; }
inline int hole_of(int f) { return -3 - f; }

// Dart-based rotation system. Darts 2e and 2e+1 are the two halves of edge e.
// rot[d] is the next dart anticlockwise around org[d]; rotp is its inverse.
struct PlanarMap {
  std::vector<int> org, rot, rotp, face;
  std::vector<int> vdart;                 // some dart leaving each vertex, -1 if none
  std::vector<std::array<int, 3>> tri;    // darts bounding each triangle (triangle on their left)

  int nv() const { return static_cast<int>(vdart.size()); }
  int nd() const { return static_cast<int>(org.size()); }
  int ne() const { return nd() / 2; }
  int ntri() const { return static_cast<int>(tri.size()); }

  static int twin(int d) { return d ^ 1; }
  static int edge_of(int d) { return d >> 1; }
  int head(int d) const { return org[d ^ 1]; }
  // next dart along the face on the left of d
  int fnext(int d) const { return rotp[d ^ 1]; }

  int add_vertex();
  // creates both darts of a new edge; rotation links are left dangling
  // (self loops) until the darts are inserted around their origins
  int add_edge(int u, int v);
  void insert_after(int at, int d);   // d becomes rot[at]
  void insert_before(int at, int d);  // d becomes rotp[at]
  void attach_single(int d);          // d is the only dart at its origin
  int add_triangle(int d0, int d1, int d2);

  int find_dart(int u, int v) const;  // -1 if not adjacent
  int degree(int v) const;
  std::vector<int> darts_ccw(int v, int start = -1) const;
  std::vector<int> neighbors(int v) const;
};

struct Triangulation : PlanarMap {
  int m = 0;                               // boundary has m+2 vertices
  int n = 0;                               // interior vertices
  int root = -1;                           // dart v_1 -> v_2
  std::vector<int> boundary;               // v_0 .. v_{m+1}, anticlockwise
  std::vector<int> bpos;                   // vertex -> boundary index or -1
  std::vector<std::array<int, 3>> faces;   // anticlockwise vertex triples

  int vr() const { return boundary[1]; }
  int vy() const { return boundary[2]; }
  bool on_boundary(int v) const { return bpos[v] >= 0; }
  // boundary dart v_i -> v_{i+1}
  int boundary_dart(int i) const;
};

using Face = std::array<int, 3>;

Triangulation build_from_faces(const std::vector<Face>& faces, const std::vector<int>& boundary,
                               std::pair<int, int> root);

std::string to_tri(const Triangulation& t);
Triangulation parse_tri(const std::string& text);

// faces re-read from the rotation system, each rotated to start at its least vertex, sorted
std::vector<Face> extract_faces(const PlanarMap& m);

// breadth-first relabelling from the root dart; equal codes <=> rooted isomorphic
std::vector<int> canonical_code(const Triangulation& t);

std::vector<Triangulation> enumerate_all(int m, int n);

// new root must be an anticlockwise boundary dart (u, v)
Triangulation reroot(const Triangulation& t, int u, int v);

struct Ball {
  int center = -1;
  std::vector<int> vertices;   // breadth-first order
  std::vector<int> dist;       // parallel to vertices
  std::vector<int> edges;      // one dart per induced edge
};
Ball ball(const PlanarMap& m, int v, int rho);

// graph distances from a set of sources (-1 = unreached)
std::vector<int> bfs_distances(const PlanarMap& m, const std::vector<int>& sources, int limit = -1);

}  // namespace sw
