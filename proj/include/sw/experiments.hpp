#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sw/schnyder.hpp"
#include "sw/segment.hpp"

namespace sw {

// The infinite-boundary process run on a finite triangulation. One face plays
// the part of infinity: a step whose chord separates it from the root side is a
// right step, otherwise a left step. With every region eventually filled the
// result must equal peel_finite.
struct FiniteBoundaryRun {
  Wood wood;
  int steps = 0, lefts = 0, rights = 0;
  bool complete = false;   // false when the budget ran out
};
FiniteBoundaryRun run_finite_boundary(const Triangulation& t, int inf_face, int budget = -1);

struct ProbeRow {
  int n = 0;
  int classes = 0;
  double tv_prev = -1;   // TV distance to the previous size, -1 for the first
};
// Coloured balls of radius rho around the root tail of uniform samples of
// T_n^m, compared between consecutive sizes.
std::vector<ProbeRow> uipt_convergence_probe(int m, int rho, const std::vector<int>& sizes, int replicas,
                                             std::uint64_t seed, int jobs = 1);

struct StripReplica {
  bool exhausted = false;   // budget ran out before both processes settled or synchronised
  bool opaque = false;      // the ball touches an unmaterialised region
  bool synced = false;
  int common_edges = 0;     // ball edges coloured by both
  int disagreements = 0;
  int disagreements_left = 0;   // of those, left of the common boundary segment
  int steps_x = 0, steps_y = 0;
  int sync_x = -1, sync_y = -1;   // steps at which both had the same root and matching boundary
};
struct StripConfig {
  long long x = -1, y = -3;
  int rho = 1;
  int budget = 4000;   // per process
  int settle = 100;    // extra steps after the anchor is covered
};
StripReplica strip_replica(std::uint64_t seed, const StripConfig& cfg);

struct StripSummary {
  int replicas = 0, exhausted = 0, opaque = 0, agree = 0, disagree = 0;
  int disagreements_total = 0, disagreements_left = 0;
  double frequency() const { return agree + disagree ? static_cast<double>(agree) / (agree + disagree) : 1.0; }
};
StripSummary strip_consistency(std::uint64_t seed, const StripConfig& cfg, int replicas, int jobs = 1,
                               std::vector<StripReplica>* rows = nullptr);

// After a segment run, a fresh process on the residual frontier: side and m_s
// frequencies of its steps against the step law.
struct RemovalWitness {
  long long lefts = 0, rights = 0;
  std::vector<long long> ms_hist;   // m_s = 0..7, then >= 8
  double p_side = 1, p_ms = 1;
};
RemovalWitness removal_law(std::uint64_t seed, int replicas, int first_steps, int second_steps);

}  // namespace sw
