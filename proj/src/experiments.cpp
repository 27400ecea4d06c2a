#include "sw/experiments.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "sw/errors.hpp"
#include "sw/replicas.hpp"
#include "sw/samplers.hpp"
#include "sw/stats.hpp"

namespace sw {

FiniteBoundaryRun run_finite_boundary(const Triangulation& t, int inf_face, int budget) {
  PlanarMap& map = const_cast<Triangulation&>(t);
  Explorer ex(map);
  for (int v : t.boundary) ex.reveal(v);
  ex.wood.ensure(t.ne());
  ex.wood.set(t.root, kYellow);
  const int nb = static_cast<int>(t.boundary.size());
  std::vector<int> nxt(t.nv(), -1), prv(t.nv(), -1);
  for (int i = 0; i < nb; ++i) {
    nxt[t.boundary[i]] = t.boundary[(i + 1) % nb];
    prv[t.boundary[(i + 1) % nb]] = t.boundary[i];
  }
  int tail = t.boundary[1], head = t.boundary[2];
  FiniteBoundaryRun run;
  std::vector<char> seen(t.ntri(), 0);
  std::vector<int> touched;
  // is inf_face in the unexplored component on the left of d?
  auto holds_infinity = [&](int d) {
    if (inf_face < 0 || ex.explored_face(inf_face)) return false;
    std::vector<int> stack{map.face[d]};
    touched.clear();
    seen[map.face[d]] = 1;
    touched.push_back(map.face[d]);
    bool found = false;
    while (!stack.empty() && !found) {
      int f = stack.back();
      stack.pop_back();
      if (f == inf_face) found = true;
      for (int e : map.tri[f]) {
        int g = map.face[PlanarMap::twin(e)];
        if (g < 0 || seen[g] || ex.explored_face(g)) continue;
        seen[g] = 1;
        touched.push_back(g);
        stack.push_back(g);
      }
    }
    for (int f : touched) seen[f] = 0;
    return found;
  };
  while (budget < 0 || run.steps < budget) {
    const int root = map.find_dart(tail, head);
    if (!ex.unexplored(root)) {
      run.complete = true;
      break;
    }
    const int v0 = prv[tail];
    Explorer::Shape sh = ex.scan(map.find_dart(v0, tail));
    const int vc = map.head(sh.chord);
    ++run.steps;
    bool right;
    if (!ex.unexplored(root)) right = true;
    else if (!ex.unexplored(sh.chord)) right = false;
    else right = holds_infinity(sh.chord);
    if (right) {
      ++run.rights;
      ex.fill(root);
      nxt[v0] = vc;
      prv[vc] = v0;
      tail = v0;
      head = vc;
    } else {
      ++run.lefts;
      ex.fill(sh.chord);
      int last = vc;
      for (int i = static_cast<int>(sh.udarts.size()) - 1; i >= 0; --i) {
        int u = map.head(sh.udarts[i]);
        nxt[last] = u;
        prv[u] = last;
        last = u;
      }
      nxt[last] = tail;
      prv[tail] = last;
    }
  }
  if (!run.complete && ex.explored_flags().size() == static_cast<size_t>(t.ntri()))
    run.complete = std::all_of(ex.explored_flags().begin(), ex.explored_flags().end(), [](char c) { return c; });
  run.wood = std::move(ex.wood);
  return run;
}

std::vector<ProbeRow> uipt_convergence_probe(int m, int rho, const std::vector<int>& sizes, int replicas,
                                             std::uint64_t seed, int jobs) {
  for (size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1]) throw Error(Errc::BadInput, "probe sizes must increase");
  std::vector<ProbeRow> rows;
  std::map<std::vector<int>, long long> prev;
  for (size_t i = 0; i < sizes.size(); ++i) {
    const int n = sizes[i];
    auto codes = run_replicas(replicas, jobs, [&](int r) {
      Rng rng = replica_rng(seed, "uiptprobe", static_cast<std::uint64_t>(n)).split(static_cast<std::uint64_t>(r));
      Triangulation t = sample_uniform(m, n, rng);
      Wood w = peel_finite(t);
      return colored_ball_code(t, w, rho);
    });
    std::map<std::vector<int>, long long> hist;
    for (auto& c : codes) ++hist[c];
    ProbeRow row;
    row.n = n;
    row.classes = static_cast<int>(hist.size());
    if (i > 0) row.tv_prev = tv_distance(prev, hist);
    rows.push_back(row);
    prev = std::move(hist);
  }
  return rows;
}

namespace {

std::uint64_t edge_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

constexpr int kSnapshot = 64;

// process boundary from the tail leftwards, truncated
std::vector<int> boundary_snapshot(SegmentProcess& P) {
  std::vector<int> s{P.tail};
  for (auto it = P.left.rbegin(); it != P.left.rend() && static_cast<int>(s.size()) < kSnapshot; ++it) s.push_back(*it);
  for (long long z = P.zl; static_cast<int>(s.size()) < kSnapshot; --z) s.push_back(P.base.at(z));
  return s;
}

struct Track {
  SegmentProcess* P;
  std::unordered_map<std::uint64_t, std::vector<int>> states;   // (tail, head) -> step indices
  std::vector<std::vector<int>> snaps;                          // per step index, from 0
  bool done = false;
  int settle_left = -1;

  void record() {
    states[edge_key(P->tail, P->head())].push_back(P->nsteps());
    snaps.push_back(boundary_snapshot(*P));
  }
  int chord_at(int step) const { return P->history[step - 1].chord; }
};

struct Sync {
  int ia = -1, ib = -1;   // process a at step ia had the state of process b at step ib
  int a = -1;             // which track is a (the one that arrived later)
  int v = -1;             // leftmost vertex of the common boundary segment
  bool active() const { return ia >= 0; }
};

bool anchor_covered(const SegmentProcess& P) { return P.covers(0); }

}  // namespace

StripReplica strip_replica(std::uint64_t seed, const StripConfig& cfg) {
  StripReplica out;
  if (cfg.y > cfg.x || cfg.x > 0) throw Error(Errc::BadInput, "strip test needs y <= x <= 0");
  LazyHalfPlane H(seed);
  SegmentProcess PX(H, BaseBoundary::initial(H), cfg.x), PY(H, BaseBoundary::initial(H), cfg.y);
  Track T[2] = {{&PX, {}, {}}, {&PY, {}, {}}};
  T[0].record();
  T[1].record();
  Sync S;
  const bool same = cfg.x == cfg.y;
  // step at which each process coloured each edge (0: the root edge)
  std::unordered_map<int, int> coloured_at[2];
  for (int k = 0; k < 2; ++k) {
    SegmentProcess* P = T[k].P;
    auto& mp = coloured_at[k];
    mp[PlanarMap::edge_of(P->root_dart())] = 0;
    P->ex.on_step = [P, &mp](const Explorer::Shape& sh) {
      const int i = P->nsteps() + 1;
      mp.emplace(PlanarMap::edge_of(sh.s), i);
      mp.emplace(PlanarMap::edge_of(sh.chord), i);
      for (int d : sh.udarts) mp.emplace(PlanarMap::edge_of(d), i);
    };
  }

  auto try_sync = [&](int a) {
    Track& A = T[a];
    Track& B = T[1 - a];
    auto it = B.states.find(edge_key(A.P->tail, A.P->head()));
    if (it == B.states.end()) return;
    const auto& sa = A.snaps.back();
    int best = -1, best_len = 0;
    for (int j : it->second) {
      const auto& sb = B.snaps[j];
      int len = 0;
      while (len < kSnapshot && sa[len] == sb[len]) ++len;
      if (len > best_len) {
        best_len = len;
        best = j;
      }
    }
    if (best < 0) return;
    S = Sync{};
    S.a = a;
    S.ia = A.P->nsteps();
    S.ib = best;
    S.v = sa[best_len - 1];
  };
  // a synchronised pair must keep choosing the same chords
  auto verify_sync = [&]() {
    if (!S.active()) return;
    Track& A = T[S.a];
    Track& B = T[1 - S.a];
    int upto = std::min(A.P->nsteps() - S.ia, B.P->nsteps() - S.ib);
    for (int l = 1; l <= upto; ++l)
      if (A.chord_at(S.ia + l) != B.chord_at(S.ib + l)) {
        S = Sync{};
        return;
      }
  };

  bool blocked = false;
  auto advance = [&](int k) {
    Track& A = T[k];
    try {
      A.P->step();
    } catch (const Error& e) {
      if (e.code() != Errc::TooLarge) throw;
      blocked = true;
      return;
    }
    A.record();
    if (!A.done && anchor_covered(*A.P)) {
      if (A.settle_left < 0) A.settle_left = cfg.settle;
    }
    if (A.settle_left >= 0 && --A.settle_left < 0) A.done = true;
    if (!same) {
      verify_sync();
      if (!S.active()) try_sync(k);
    }
  };

  while (!blocked) {
    const bool need_sync = !same && !S.active();
    const bool run0 = !T[0].done || (need_sync && T[0].P->nsteps() < cfg.budget);
    const bool run1 = !T[1].done || (need_sync && T[1].P->nsteps() < cfg.budget);
    if (!run0 && !run1) break;
    if (PX.nsteps() >= cfg.budget && PY.nsteps() >= cfg.budget) break;
    if (run0 && PX.nsteps() < cfg.budget) advance(0);
    if (run1 && PY.nsteps() < cfg.budget) advance(1);
    if ((!T[0].done && PX.nsteps() >= cfg.budget) || (!T[1].done && PY.nsteps() >= cfg.budget)) break;
  }
  out.steps_x = PX.nsteps();
  out.steps_y = PY.nsteps();
  out.synced = same || S.active();
  if (S.active()) {
    out.sync_x = S.a == 0 ? S.ia : S.ib;
    out.sync_y = S.a == 0 ? S.ib : S.ia;
  }
  if (blocked) {
    out.opaque = true;
    return out;
  }
  if (!T[0].done || !T[1].done || !out.synced) {
    out.exhausted = true;
    return out;
  }

  // ball of radius rho around b_0
  const PlanarMap& M = H.map;
  const int b0 = H.b(0);
  std::unordered_map<int, int> dist{{b0, 0}};
  std::deque<int> q{b0};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    int dv = dist[v];
    for (int d : M.darts_ccw(v)) {
      int f = M.face[d];
      if (f == kUnexplored || is_hole(f)) out.opaque = true;
      if (dv == cfg.rho) continue;
      int w = M.head(d);
      if (dist.emplace(w, dv + 1).second) q.push_back(w);
    }
  }
  if (out.opaque) return out;
  for (auto& [v, dv] : dist)
    for (int d : M.darts_ccw(v)) {
      int w = M.head(d);
      if (!dist.count(w) || w < v) continue;
      int cx = PX.ex.wood.color_of(d), cy = PY.ex.wood.color_of(d);
      if (cx < 0 || cy < 0) continue;
      ++out.common_edges;
      if (cx == cy && PX.ex.wood.is_out(d) == PY.ex.wood.is_out(d)) continue;
      ++out.disagreements;
      // left of the common segment: coloured by either process before the synchronised steps
      const int e = PlanarMap::edge_of(d);
      const int cut[2] = {out.sync_x, out.sync_y};
      bool before = same;
      for (int k = 0; k < 2; ++k) {
        auto it = coloured_at[k].find(e);
        if (it != coloured_at[k].end() && it->second <= cut[k]) before = true;
      }
      if (before) ++out.disagreements_left;
    }
  return out;
}

StripSummary strip_consistency(std::uint64_t seed, const StripConfig& cfg, int replicas, int jobs,
                               std::vector<StripReplica>* rows) {
  const std::string tag = "strip/" + std::to_string(cfg.x) + "/" + std::to_string(cfg.y);
  auto res = run_replicas(replicas, jobs, [&](int r) { return strip_replica(replica_rng(seed, tag, r).key(), cfg); });
  StripSummary s;
  s.replicas = replicas;
  for (auto& r : res) {
    if (r.exhausted) ++s.exhausted;
    else if (r.opaque) ++s.opaque;
    else if (r.disagreements == 0) ++s.agree;
    else ++s.disagree;
    s.disagreements_total += r.disagreements;
    s.disagreements_left += r.disagreements_left;
  }
  if (rows) *rows = std::move(res);
  return s;
}

RemovalWitness removal_law(std::uint64_t seed, int replicas, int first_steps, int second_steps) {
  RemovalWitness W;
  W.ms_hist.assign(9, 0);
  for (int r = 0; r < replicas; ++r) {
    LazyHalfPlane H(replica_rng(seed, "removal", r).key());
    long long corner;
    {
      SegmentProcess P(H, BaseBoundary::initial(H), 0);
      for (int i = 0; i < first_steps; ++i) P.step();
      corner = P.zl;
    }
    // the residual frontier, rooted at the corner of the explored part
    SegmentProcess Q(H, BaseBoundary::snapshot(H, corner - 2, H.hi_index()), 2, true);
    for (int i = 0; i < second_steps; ++i) {
      const auto& rec = Q.step();
      (rec.side == Side::Left ? W.lefts : W.rights) += 1;
      ++W.ms_hist[std::min(rec.ms, 8)];
    }
  }
  // exact marginals of the step law
  std::vector<double> pm(9, 0.0);
  double tail = 1.0;
  for (int m = 0; m < 8; ++m) {
    double p = 0;
    for (int k = 0; k <= m; ++k) p += step_probability(Side::Right, k, m).convert_to<double>();
    p += (Rational(3, 4) * q_prob(m + 1)).convert_to<double>();
    pm[m] = p;
    tail -= p;
  }
  pm[8] = tail;
  W.p_side = chi_square({W.lefts, W.rights}, {0.75, 0.25}).p;
  W.p_ms = chi_square(W.ms_hist, pm).p;
  return W;
}

}  // namespace sw
