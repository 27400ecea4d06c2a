#include "sw/chisel.hpp"

#include <memory>
#include <sstream>
#include <unordered_set>

#include "sw/analysis.hpp"
#include "sw/errors.hpp"

namespace sw {

bool ChiselResult::ok() const {
  if (exhausted || blocked) return false;
  for (auto& L : layers)
    if (!L.structure.ok()) return false;
  return overlap.ok() && triangles.ok() && order.ok() && upper.ok() && interface.ok() && walks.ok();
}

std::string ChiselResult::summary() const {
  std::ostringstream os;
  auto line = [&](const char* name, const StructureReport& r) {
    os << name << ": checks=" << r.checks << " violations=" << r.violations << " deferred=" << r.deferred << "\n";
    for (auto& m : r.messages) os << "  " << m << "\n";
  };
  os << "window [" << window_lo << ", " << window_hi << "] layers=" << layers.size()
     << (exhausted ? " exhausted" : "") << (blocked ? " blocked" : "") << "\n";
  for (size_t l = 0; l < layers.size(); ++l) {
    os << "layer " << l + 1 << ": steps=" << layers[l].steps << " yellow=" << layers[l].yellow.size()
       << " red=" << layers[l].red.size() << " blue=" << layers[l].blue.size()
       << " upper=" << layers[l].upper.size() << "\n";
    line("  segment", layers[l].structure);
  }
  line("overlap", overlap);
  line("triangles", triangles);
  line("order", order);
  line("upper", upper);
  line("interface", interface);
  line("walks", walks);
  os << "walks anchored: " << walks_anchored << "\n";
  return os.str();
}

namespace {

int level_color(int level) {
  static const int c[3] = {kYellow, kRed, kBlue};
  return c[level % 3];
}

}  // namespace

ChiselResult chisel(std::uint64_t seed, const ChiselConfig& cfg) {
  if (cfg.layers < 1 || cfg.layers > 21) throw Error(Errc::OutOfRange, "chisel supports 1..21 layers");
  ChiselResult R;
  LazyHalfPlane H(Rng(seed).split("chisel").key(), cfg.hole_cap, cfg.hole_ncap);
  std::vector<std::unique_ptr<SegmentProcess>> procs;

  for (int l = 1; l <= cfg.layers; ++l) {
    long long target;
    if (l == 1) {
      procs.push_back(std::make_unique<SegmentProcess>(H, BaseBoundary::initial(H), cfg.x));
      target = cfg.x + cfg.window;
    } else {
      const SegmentProcess& Q = *procs.back();
      const int cor = procs.back()->base.at(Q.zl);
      if (!H.is_initial(cor)) throw Error(Errc::BadInput, "layer corner left the initial boundary");
      const long long zc = H.index_of(cor);
      const int hd = procs.back()->head();
      procs.push_back(std::make_unique<SegmentProcess>(H, BaseBoundary::snapshot(H, zc - cfg.margin, H.hi_index()), 0,
                                                       true));
      auto hp = procs.back()->base.position(hd);
      if (!hp) throw Error(Errc::BadInput, "previous head is not on the new base line");
      target = *hp + cfg.margin;
    }
    SegmentProcess& P = *procs.back();
    ChiselLayer L;
    L.root_index = H.index_of(P.base.at(P.x));
    try {
      while (P.hi < target && P.nsteps() < cfg.budget) P.step();
    } catch (const Error& e) {
      if (e.code() != Errc::TooLarge) throw;
      R.blocked = true;
    }
    L.steps = P.nsteps();
    L.exhausted = P.hi < target && !R.blocked;
    R.exhausted = R.exhausted || L.exhausted;
    L.corner = P.corner();
    L.tail = P.tail;
    L.head = P.head();
    L.root_edge = PlanarMap::edge_of(P.root_dart());
    // heads and the yellow stretches between them; a stretch stops early
    // inside an unmaterialised region
    {
      std::unordered_set<int> seen;
      for (auto it = P.heads.rbegin(); it != P.heads.rend(); ++it)
        for (int v : path_from(H.map, P.ex.wood, *it, kYellow))
          if (seen.insert(v).second) L.yellow.push_back(v);
          else break;
    }
    L.red = P.tails;
    L.blue = P.blue_chain();
    L.upper = P.left;
    if (P.any_covered)
      for (long long p = P.cov_lo; p <= P.cov_hi; ++p)
        if (P.covers(p)) L.lower.push_back(P.base.at(p));
    L.structure = P.check_structure();
    L.structure.merge(P.incremental);
    if (l == 1) {
      R.window_lo = P.cov_lo;
      R.window_hi = P.any_covered ? P.cov_hi : P.cov_lo - 1;
    }
    // merge this layer's colours
    const Wood& W = P.ex.wood;
    R.wood.ensure(H.map.ne());
    R.edge_layer.resize(H.map.ne(), 0);
    for (int e = 0; e < static_cast<int>(W.color.size()); ++e) {
      if (W.color[e] < 0) continue;
      ++R.overlap.checks;
      if (R.wood.color[e] >= 0 && e == R.layers.back().root_edge) {
        // the previous layer's last root edge lies on this layer's base line
        R.wood.set(W.out[e], W.color[e]);
        R.edge_layer[e] = l;
        continue;
      }
      if (R.wood.color[e] >= 0) {
        R.overlap.fail("edge " + std::to_string(e) + " coloured by layers " + std::to_string(R.edge_layer[e]) +
                       " and " + std::to_string(l));
        continue;
      }
      R.wood.set(W.out[e], W.color[e]);
      R.edge_layer[e] = l;
    }
    R.layers.push_back(std::move(L));
    if (R.blocked || R.layers.back().exhausted) break;
  }

  const PlanarMap& M = H.map;
  const int nv = M.nv();
  R.wood.ensure(M.ne());
  R.edge_layer.resize(M.ne(), 0);
  R.initial.assign(nv, 0);
  R.opaque.assign(nv, 0);
  R.levels.assign(nv, 0);
  R.junction.assign(nv, 0);
  for (int l = 0; l + 1 < static_cast<int>(R.layers.size()); ++l) {
    R.junction[R.layers[l].tail] = 1;
    R.junction[R.layers[l].head] = 1;
  }
  for (int v = 0; v < nv; ++v) R.initial[v] = H.is_initial(v);
  for (int h = 0; h < H.nholes(); ++h)
    if (H.hole_opaque(h))
      for (int v : H.hole_vertices(h)) R.opaque[v] = 1;
  const int nl = static_cast<int>(R.layers.size());
  std::vector<std::unordered_set<int>> pathset(3 * nl);
  for (int l = 0; l < nl; ++l) {
    const auto& L = R.layers[l];
    const std::vector<int>* paths[3] = {&L.yellow, &L.red, &L.blue};
    for (int c = 0; c < 3; ++c)
      for (int v : *paths[c]) {
        R.levels[v] |= std::uint64_t{1} << (3 * l + c);
        pathset[3 * l + c].insert(v);
      }
  }

  std::vector<int> colored;
  for (int v = 0; v < nv; ++v)
    if (M.vdart[v] >= 0)
      for (int d : M.darts_ccw(v))
        if (R.wood.color_of(d) >= 0) {
          colored.push_back(v);
          break;
        }

  // every directed triangle a -> b -> c -> a with a the least vertex
  for (int a : colored) {
    for (int d1 : M.darts_ccw(a)) {
      if (!R.wood.is_out(d1) || M.head(d1) < a) continue;
      const int b = M.head(d1);
      for (int d2 : M.darts_ccw(b)) {
        if (!R.wood.is_out(d2) || M.head(d2) <= a) continue;
        const int c = M.head(d2);
        const int d3 = M.find_dart(c, a);
        if (d3 < 0 || !R.wood.is_out(d3)) continue;
        ++R.triangles.checks;
        bool acw;
        if (M.face[d1] >= 0 && M.fnext(d1) == d2 && M.fnext(d2) == d3) acw = true;
        else if (M.face[d1 ^ 1] >= 0 && M.fnext(d1 ^ 1) == (d3 ^ 1)) acw = false;
        else acw = left_side_bounded(M, {d1, d2, d3});
        if (!acw) continue;
        std::string what = "anticlockwise triangle " + std::to_string(a) + " " + std::to_string(b) + " " +
                           std::to_string(c);
        if (R.junction[a] || R.junction[b] || R.junction[c]) ++R.triangles.deferred;
        else R.triangles.fail(what);
      }
    }
  }

  // each distinguished path points to the one before it, in that path's colour
  auto points_to = [&](StructureReport& rep, int v, int level, const std::string& what) {
    ++rep.checks;
    int d = out_dart(M, R.wood, v, level_color(level));
    if (d >= 0 && pathset[level].count(M.head(d))) return;
    if (R.opaque[v] || R.junction[v]) ++rep.deferred;
    else rep.fail(what + " " + std::to_string(v));
  };
  for (int l = 0; l < nl; ++l) {
    const auto& L = R.layers[l];
    for (int v : L.red) points_to(R.order, v, 3 * l, "red path vertex without yellow edge to its yellow path:");
    for (int v : L.blue) points_to(R.order, v, 3 * l + 1, "blue path vertex without red edge to its red path:");
    for (int v : L.yellow) {
      if (R.initial[v]) {
        ++R.order.checks;
        continue;
      }
      if (l == 0) {
        ++R.order.checks;
        R.order.fail("first yellow path leaves the initial boundary at " + std::to_string(v));
        continue;
      }
      points_to(R.order, v, 3 * l - 1, "yellow path vertex without blue edge to the blue path below:");
    }
    for (int u : L.upper) points_to(R.upper, u, 3 * l + 2, "upper boundary vertex without blue edge to its blue path:");
  }

  // interface vertices are interior once the next layer covers them
  for (int l = 0; l + 1 < nl; ++l) {
    std::unordered_set<int> next(R.layers[l + 1].lower.begin(), R.layers[l + 1].lower.end());
    for (int u : R.layers[l].upper) {
      if (!next.count(u)) continue;
      ++R.interface.checks;
      std::string word = vertex_word(M, R.wood, u, M.vdart[u]);
      if (word.find('?') == std::string::npos && interior_condition(word)) continue;
      if (R.opaque[u] || R.junction[u]) ++R.interface.deferred;
      else R.interface.fail("interface vertex " + std::to_string(u) + " has word " + word);
    }
  }

  // leftmost walks from random coloured vertices
  Rng rng = Rng(seed).split("chisel-walks");
  std::vector<int> starts;
  for (int v : colored)
    if (!R.initial[v]) starts.push_back(v);
  for (int i = 0; i < cfg.walks && !starts.empty(); ++i) {
    int v = starts[rng.below(starts.size())];
    std::vector<int> outs;
    for (int d : M.darts_ccw(v))
      if (R.wood.is_out(d) && R.wood.color_of(d) >= 0) outs.push_back(d);
    if (outs.empty()) continue;
    int e = outs[rng.below(outs.size())];
    Walk W = leftmost_walk(M, R.wood, e, nv + 1, [&](int u) { return R.initial[u] != 0; }, false);
    ++R.walks.checks;
    auto vs = W.vertices(M);
    bool committed = false, deferred = false, bad = false;
    std::uint64_t F = 0;
    std::string why;
    // the clockwise search at w passed an unmaterialised hole
    auto blind = [&](int in, int out) {
      for (int x = M.rotp[in];; x = M.rotp[x]) {
        if (is_hole(M.face[x]) && !H.hole_materialized(hole_of(M.face[x]))) return true;
        if (x == out || x == in) return false;
      }
    };
    for (size_t j = 1; j < vs.size() && !bad && !deferred; ++j) {
      const int u = vs[j - 1], w = vs[j];
      const int in = PlanarMap::twin(W.darts[j - 1]);
      if (R.junction[w] || (R.opaque[w] && blind(in, j < W.darts.size() ? W.darts[j] : in))) {
        deferred = true;
        break;
      }
      const int c = R.wood.color_of(W.darts[j - 1]);
      // levels of w reachable by one step down from the allowed levels at u, along an edge of the right colour
      std::uint64_t from = committed ? F : R.levels[u];
      std::uint64_t D = 0;
      for (int L = 1; L < 3 * nl; ++L)
        if (((from >> L) & 1) && ((R.levels[w] >> (L - 1)) & 1) && level_color(L - 1) == c)
          D |= std::uint64_t{1} << (L - 1);
      if (D) {
        committed = true;
        F = D;
      } else if (committed && !R.initial[w]) {
        bad = true;
        why = "walk from " + std::to_string(v) + " stops descending at " + std::to_string(w);
      }
    }
    if (deferred) {
      ++R.walks.deferred;
      continue;
    }
    if (!bad && W.end != Walk::End::Boundary) {
      bad = true;
      why = "walk from " + std::to_string(v) + " never reaches the initial boundary";
    }
    if (bad) R.walks.fail(why);
    R.walks_anchored += committed;
  }

  R.map = H.map;
  return R;
}

}  // namespace sw
