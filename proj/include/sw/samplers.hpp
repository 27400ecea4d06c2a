#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "sw/counting.hpp"
#include "sw/planar_map.hpp"
#include "sw/rng.hpp"

namespace sw {

// Exact uniform element of T_n^m by count-weighted peeling decomposition.
Triangulation sample_uniform(int m, int n, Rng& rng);
Triangulation sample_uniform(int m, int n, std::uint64_t seed);

// Size of a free (Boltzmann) triangulation of an (m+2)-gon; max_n guards runaway draws.
int sample_free_size(int m, Rng& rng, int max_n = 50'000'000);
Triangulation sample_free(int m, Rng& rng);
Triangulation sample_free(int m, std::uint64_t seed);

struct StepDraw {
  Side side = Side::Left;
  int k = 0;
  int ms = 0;
};
// (side, k, m_s) from the half-plane step law
StepDraw draw_step(Rng& rng);
// J >= 1 with P(J > j) = C_j / 4^j
long long draw_J(Rng& rng);
// K >= 0 with P(K = k) = (1/4)(3/4)^k, optionally conditioned on K <= kmax
int draw_K(Rng& rng, long long kmax = -1);

struct StepOutcome {
  Side side = Side::Left;
  int k = 0;
  int ms = 0;
  int dart = -1;          // peeled frontier dart v0 -> v1
  int v0 = -1, v1 = -1, vc = -1;
  int chord = -1;         // dart v0 -> vc
  std::vector<int> u;     // u_1 .. u_k
  int hole = -1;          // enclosed region, -1 when m_s = 0
  int index = -1;         // position in the ledger
  int xi() const { return side == Side::Left ? k - (ms + 1) : -1; }
};

// Seeded, lazily materialised uniform infinite half-plane triangulation.
// The initial boundary b_z runs left to right with the unexplored region above
// it: face[b_z -> b_{z+1}] is unexplored, its twin is exterior. Every sampling
// decision is recorded; asking for the same frontier dart again returns the
// recorded step.
class LazyHalfPlane {
 public:
  LazyHalfPlane(std::uint64_t seed, int hole_cap, int hole_ncap);
  explicit LazyHalfPlane(std::uint64_t seed) : LazyHalfPlane(seed, kDefaultHoleCap, kDefaultHoleNCap) {}
  static constexpr int kDefaultHoleCap = 60;
  static constexpr int kDefaultHoleNCap = 2000;

  PlanarMap map;

  int b(long long z);   // initial boundary vertex b_z
  bool is_initial(int v) const { return v < static_cast<int>(init_index_.size()) && init_has_[v]; }
  long long index_of(int v) const { return init_index_[v]; }
  long long lo_index() const { return zlo_; }
  long long hi_index() const { return zhi_; }

  bool on_frontier(int v) const {
    return v < static_cast<int>(gfront_.size()) && (gfront_[v] >= 0 || gprev_[v] >= 0);
  }
  int gnext(int v);
  int gprev(int v);
  int frontier_dart(int v) { gnext(v); return gfront_[v]; }

  // peel the frontier dart v0 -> gnext(v0); ledger-backed
  StepOutcome peel(int dart);
  // materialise whatever is on the left of d (a frontier dart or a hole dart)
  void resolve(int d);
  void materialize_hole(int h);
  bool hole_materialized(int h) const { return holes_[h].filled; }
  int hole_size(int h) const { return holes_[h].ms; }
  const std::vector<int>& hole_vertices(int h) const { return holes_[h].verts; }
  int nholes() const { return static_cast<int>(holes_.size()); }
  bool hole_opaque(int h) const { return holes_[h].opaque; }
  // holes with m_s above hole_cap, or whose drawn size exceeds hole_ncap, stay
  // unmaterialised; explorers treat them as filled but opaque
  int hole_cap, hole_ncap;
  int skipped_holes = 0;

  const std::vector<StepOutcome>& ledger() const { return ledger_; }
  const StepOutcome* recorded(int dart) const;

  // structural audit of the materialised fragment; empty string when consistent
  std::string audit() const;

  // root edge (b_x, b_{x+1}) initially; any frontier edge after reroot
  int root = -1;
  void reroot(int u, int v);

 private:
  struct Hole {
    std::vector<int> verts;   // anticlockwise, root verts[1] -> verts[2]
    std::vector<int> darts;   // verts[i] -> verts[i+1]
    int ms = 0;
    int step = -1;
    bool filled = false;
    bool opaque = false;
  };

  void extend_left();
  void extend_right();
  int new_vertex();
  int make_hole(const std::vector<int>& verts, const std::vector<int>& darts, int ms, int step);
  void ensure_vertex(int v);

  Rng steps_, holes_rng_;
  std::vector<StepOutcome> ledger_;
  std::unordered_map<int, int> by_dart_;
  std::vector<Hole> holes_;
  std::vector<int> left_, right_;   // b_{-1}, b_{-2}, ... and b_0, b_1, ...
  long long zlo_ = 0, zhi_ = 0;
  std::vector<long long> init_index_;
  std::vector<char> init_has_;
  std::vector<int> gnext_, gprev_, gfront_;
};

}  // namespace sw
