#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sw/samplers.hpp"
#include "sw/schnyder.hpp"

namespace sw {

// A bi-infinite boundary line in H that a process treats as its initial
// boundary. Positions are integers; outside the stored middle part the line
// continues along H's initial boundary.
class BaseBoundary {
 public:
  static BaseBoundary initial(LazyHalfPlane& H);
  // H's current frontier from b_zl to b_zr (both must be on the frontier)
  static BaseBoundary snapshot(LazyHalfPlane& H, long long zl, long long zr);

  int at(long long p);
  std::optional<long long> position(int v) const;
  bool contains(int v) const { return position(v).has_value(); }
  long long mid_size() const { return static_cast<long long>(mid_.size()); }
  LazyHalfPlane& host() const { return *H_; }

 private:
  LazyHalfPlane* H_ = nullptr;
  long long zL_ = 0, zR_ = 0;
  std::vector<int> mid_;
  std::unordered_map<int, long long> pos_;
};

struct SegmentStepRecord {
  int step = 0;
  Side side = Side::Left;
  int k = 0, ms = 0, xi = 0;
  int v0 = -1;
  int chord = -1;           // dart v0 -> vc
  long long head_pos = 0;   // position of the root head after the step
  long long cov_lo = 0, cov_hi = -1;   // covered positions (empty when cov_hi < cov_lo)
};

struct StructureReport {
  int checks = 0;
  int violations = 0;
  int deferred = 0;   // checks touching an unmaterialised region
  std::vector<std::string> messages;
  void fail(const std::string& m) {
    ++violations;
    if (messages.size() < 20) messages.push_back(m);
  }
  void merge(const StructureReport& o);
  bool ok() const { return violations == 0; }
};

// The Schnyder peeling process P_x run on H with root edge (base(x), base(x+1)).
class SegmentProcess {
 public:
  SegmentProcess(LazyHalfPlane& H, BaseBoundary base, long long x, bool treat_existing_as_explored = false);
  SegmentProcess(const SegmentProcess&) = delete;
  SegmentProcess& operator=(const SegmentProcess&) = delete;

  const SegmentStepRecord& step();
  int nsteps() const { return static_cast<int>(history.size()); }

  LazyHalfPlane& H;
  BaseBoundary base;
  long long x;
  Explorer ex;

  int tail;
  std::optional<long long> tail_pos;   // set when the tail lies on the base line
  long long hi, zl;                    // head = base(hi), corner = base(zl)
  std::vector<int> left;               // upper boundary, left to right; back() is next to the tail
  std::vector<int> tails, heads;       // t_0, t_1, ... and h_0, h_1, ... (one per right step)
  std::vector<int> peel_vertex;        // per step (1-based; index 0 unused)
  std::unordered_map<int, int> birth;  // step that revealed a non-base vertex
  bool any_covered = false;
  long long cov_lo = 0, cov_hi = -1;
  std::vector<SegmentStepRecord> history;
  StructureReport incremental;         // contiguity and distance checks made during steps

  int head() { return base.at(hi); }
  int corner() { return base.at(zl); }
  int root_dart() { return H.map.find_dart(tail, head()); }
  int v0() { return left.empty() ? base.at(zl) : left.back(); }
  // leftward coverage statistic max(0, x - leftmost covered position)
  bool covers(long long p) const { return covered_.count(p) > 0; }
  long long leftward_coverage() const { return any_covered ? std::max(0LL, x - cov_lo) : 0; }
  // peeling-vertex chain v(i_1), v(i_2), ...
  std::vector<int> blue_chain() const;
  // full check of the structural invariants on the current explored area
  StructureReport check_structure();

 private:
  void cover(long long p);
  void check_contiguous();
  std::unordered_set<long long> covered_;
  int birth_of(int v) const;
  std::vector<int> left_pos_;   // scratch
};

struct SegmentRunConfig {
  int budget = 200;
  int check_every = 0;         // 0: check once at the end, < 0: never
  long long target_hi = -1;    // stop once the head position reaches this (if >= 0)
};

struct SegmentReport {
  int steps = 0;
  bool budget_exhausted = false;
  long long leftward_coverage = 0;
  long long cov_lo = 0, cov_hi = -1;
  int lefts = 0;
  double mean_xi = 0;
  StructureReport structure;
  std::vector<SegmentStepRecord> history;
};

SegmentReport run_segment(LazyHalfPlane& H, long long x, const SegmentRunConfig& cfg);

// Independent simulation of the same coverage statistic from the exact
// marginal law of (side, m_s) and k, without building any map.
long long coverage_oracle(Rng& rng, int steps);

}  // namespace sw
