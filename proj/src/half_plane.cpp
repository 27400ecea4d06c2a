#include <cassert>
#include <unordered_set>

#include "sw/errors.hpp"
#include "sw/samplers.hpp"

namespace sw {

LazyHalfPlane::LazyHalfPlane(std::uint64_t seed, int cap, int ncap)
    : hole_cap(cap), hole_ncap(ncap), steps_(Rng(seed).split("steps")), holes_rng_(Rng(seed).split("hole")) {
  int b0 = new_vertex(), b1 = new_vertex();
  right_ = {b0, b1};
  zhi_ = 1;
  init_has_[b0] = init_has_[b1] = 1;
  init_index_[b0] = 0;
  init_index_[b1] = 1;
  int d = map.add_edge(b0, b1);
  map.attach_single(d);
  map.attach_single(d ^ 1);
  map.face[d] = kUnexplored;
  map.face[d ^ 1] = kExterior;
  gnext_[b0] = b1;
  gprev_[b1] = b0;
  gfront_[b0] = d;
  root = d;
}

void LazyHalfPlane::ensure_vertex(int v) {
  if (v >= static_cast<int>(gnext_.size())) {
    int n = v + 1;
    gnext_.resize(n, -1);
    gprev_.resize(n, -1);
    gfront_.resize(n, -1);
    init_index_.resize(n, 0);
    init_has_.resize(n, 0);
  }
}

int LazyHalfPlane::new_vertex() {
  int v = map.add_vertex();
  ensure_vertex(v);
  return v;
}

int LazyHalfPlane::b(long long z) {
  while (z > zhi_) extend_right();
  while (z < zlo_) extend_left();
  return z >= 0 ? right_[z] : left_[-z - 1];
}

void LazyHalfPlane::extend_right() {
  // zhi_ >= 1 always
  int v = right_[zhi_], prev = right_[zhi_ - 1];
  int w = new_vertex();
  ++zhi_;
  right_.push_back(w);
  init_has_[w] = 1;
  init_index_[w] = zhi_;
  int d = map.add_edge(v, w);
  map.insert_after(map.find_dart(v, prev), d);
  map.attach_single(d ^ 1);
  map.face[d] = kUnexplored;
  map.face[d ^ 1] = kExterior;
  gnext_[v] = w;
  gprev_[w] = v;
  gfront_[v] = d;
}

void LazyHalfPlane::extend_left() {
  int v = zlo_ >= 0 ? right_[zlo_] : left_[-zlo_ - 1];
  int nxt = zlo_ + 1 >= 0 ? right_[zlo_ + 1] : left_[-(zlo_ + 1) - 1];
  int w = new_vertex();
  --zlo_;
  left_.push_back(w);
  init_has_[w] = 1;
  init_index_[w] = zlo_;
  int d = map.add_edge(v, w);
  map.insert_before(map.find_dart(v, nxt), d);
  map.attach_single(d ^ 1);
  map.face[d] = kExterior;
  map.face[d ^ 1] = kUnexplored;
  gnext_[w] = v;
  gprev_[v] = w;
  gfront_[w] = d ^ 1;
}

int LazyHalfPlane::gnext(int v) {
  if (gnext_[v] < 0 && is_initial(v) && index_of(v) == zhi_) extend_right();
  return gnext_[v];
}

int LazyHalfPlane::gprev(int v) {
  if (gprev_[v] < 0 && is_initial(v) && index_of(v) == zlo_) extend_left();
  return gprev_[v];
}

const StepOutcome* LazyHalfPlane::recorded(int dart) const {
  auto it = by_dart_.find(dart);
  return it == by_dart_.end() ? nullptr : &ledger_[it->second];
}

int LazyHalfPlane::make_hole(const std::vector<int>& verts, const std::vector<int>& darts, int ms, int step) {
  int h = static_cast<int>(holes_.size());
  holes_.push_back({verts, darts, ms, step, false, false});
  for (int d : darts) map.face[d] = hole_label(h);
  return h;
}

StepOutcome LazyHalfPlane::peel(int dart) {
  if (auto* r = recorded(dart)) return *r;
  const int v0 = map.org[dart];
  if (map.face[dart] != kUnexplored || gfront_[v0] != dart)
    throw Error(Errc::NotBoundary, "peel requested away from the frontier");
  const int v1 = gnext(v0);
  StepDraw st = draw_step(steps_);
  StepOutcome out;
  out.side = st.side;
  out.k = st.k;
  out.ms = st.ms;
  out.dart = dart;
  out.v0 = v0;
  out.v1 = v1;
  const int k = st.k;
  const bool left = st.side == Side::Left;

  // p: v_c .. v_0 (left step) or v_1 .. v_c (right step) along the frontier
  std::vector<int> p;
  if (left) {
    const int j = st.ms + 1;
    p.assign(j + 1, -1);
    p[j] = v0;
    for (int i = j - 1; i >= 0; --i) p[i] = gprev(p[i + 1]);
  } else {
    const int c = st.ms + 2 - k;
    p.push_back(v1);
    for (int i = 2; i <= c; ++i) p.push_back(gnext(p.back()));
  }
  const int vc = left ? p.front() : p.back();
  out.vc = vc;
  // darts captured before the frontier changes
  std::vector<int> front(p.size());
  for (size_t i = 0; i < p.size(); ++i) front[i] = gfront_[p[i]];

  std::vector<int> u(k + 2);
  u[0] = v1;
  for (int i = 1; i <= k; ++i) u[i] = new_vertex();
  u[k + 1] = vc;
  out.u.assign(u.begin() + 1, u.begin() + 1 + k);

  std::vector<int> A(k + 2), E(k + 1);
  A[0] = dart;
  for (int i = 1; i <= k; ++i) A[i] = map.add_edge(v0, u[i]);
  const bool chord_exists = left && st.ms == 0;
  A[k + 1] = chord_exists ? (front[0] ^ 1) : map.add_edge(v0, vc);
  const bool e0_exists = !left && st.ms == 0;
  for (int i = 0; i <= k; ++i) E[i] = (i == 0 && e0_exists) ? front[0] : map.add_edge(u[i], u[i + 1]);
  const int chord = A[k + 1];
  out.chord = chord;

  int at = dart;
  for (int i = 1; i <= k; ++i) {
    map.insert_after(at, A[i]);
    at = A[i];
  }
  if (!chord_exists) map.insert_after(at, chord);
  for (int i = 1; i <= k; ++i) {
    map.attach_single(E[i]);
    map.insert_after(E[i], A[i] ^ 1);
    map.insert_after(A[i] ^ 1, E[i - 1] ^ 1);
  }
  if (!e0_exists) map.insert_before(dart ^ 1, E[0]);
  if (left) {
    if (!chord_exists) map.insert_after(front[0], chord ^ 1);
    map.insert_after(chord ^ 1, E[k] ^ 1);
  } else {
    if (!e0_exists) map.insert_before(front[p.size() - 2] ^ 1, E[k] ^ 1);
    map.insert_before(E[k] ^ 1, chord ^ 1);
  }
  for (int i = 0; i <= k; ++i) map.add_triangle(A[i], E[i], A[i + 1] ^ 1);

  const int idx = static_cast<int>(ledger_.size());
  out.index = idx;
  if (left) {
    const int j = st.ms + 1;
    if (st.ms >= 1) {
      std::vector<int> verts{p[j - 1], v0}, darts{front[j - 1], chord};
      for (int i = 0; i <= j - 2; ++i) {
        verts.push_back(p[i]);
        darts.push_back(front[i]);
      }
      out.hole = make_hole(verts, darts, st.ms, idx);
    }
    for (int i = 0; i <= k; ++i) map.face[E[i] ^ 1] = kUnexplored;
    for (int i = 1; i <= j; ++i) gfront_[p[i]] = gnext_[p[i]] = gprev_[p[i]] = -1;
    int prev = vc;
    for (int i = k; i >= 0; --i) {
      gnext_[prev] = u[i];
      gprev_[u[i]] = prev;
      gfront_[prev] = E[i] ^ 1;
      prev = u[i];
    }
  } else {
    const int c = static_cast<int>(p.size());
    if (st.ms >= 1) {
      std::vector<int> verts, darts;
      if (k >= 1) {
        verts.push_back(u[1]);
        darts.push_back(E[0] ^ 1);
      } else {
        verts.push_back(vc);
        darts.push_back(E[0] ^ 1);
      }
      for (int i = 0; i < c - 1; ++i) {
        verts.push_back(p[i]);
        darts.push_back(front[i]);
      }
      if (k >= 1) {
        verts.push_back(vc);
        darts.push_back(E[k] ^ 1);
        for (int i = k; i >= 2; --i) {
          verts.push_back(u[i]);
          darts.push_back(E[i - 1] ^ 1);
        }
      }
      out.hole = make_hole(verts, darts, st.ms, idx);
    }
    map.face[chord] = kUnexplored;
    for (int i = 0; i < c - 1; ++i) gfront_[p[i]] = gnext_[p[i]] = gprev_[p[i]] = -1;
    gnext_[v0] = vc;
    gprev_[vc] = v0;
    gfront_[v0] = chord;
  }
  ledger_.push_back(std::move(out));
  by_dart_[dart] = idx;
  return ledger_.back();
}

void LazyHalfPlane::materialize_hole(int h) {
  Hole& H = holes_[h];
  if (H.filled) return;
  if (H.opaque) return;
  Rng r = holes_rng_.split(static_cast<std::uint64_t>(h));
  int n = -1;
  if (H.ms <= hole_cap) {
    try {
      n = sample_free_size(H.ms, r, hole_ncap);
    } catch (const Error&) {
      n = -1;
    }
  }
  if (n < 0) {
    H.opaque = true;
    ++skipped_holes;
    return;
  }
  Triangulation T = sample_uniform(H.ms, n, r);
  const int nb = static_cast<int>(H.verts.size());
  std::vector<int> vmap(T.nv(), -1);
  for (int i = 0; i < nb; ++i) vmap[T.boundary[i]] = H.verts[i];
  for (int v = 0; v < T.nv(); ++v)
    if (vmap[v] < 0) vmap[v] = new_vertex();
  std::vector<int> dmap(T.nd(), -1);
  for (int i = 0; i < nb; ++i) {
    int td = T.boundary_dart(i);
    dmap[td] = H.darts[i];
    dmap[td ^ 1] = H.darts[i] ^ 1;
  }
  for (int e = 0; e < T.ne(); ++e) {
    int d = 2 * e;
    if (dmap[d] >= 0) continue;
    int a = vmap[T.org[d]], c = vmap[T.head(d)];
    if (T.on_boundary(T.org[d]) && T.on_boundary(T.head(d)) && map.find_dart(a, c) >= 0)
      throw Error(Errc::NotSimple, "hole chord duplicates an existing edge");
    int nd = map.add_edge(a, c);
    dmap[d] = nd;
    dmap[d ^ 1] = nd ^ 1;
  }
  for (int v = 0; v < T.nv(); ++v) {
    if (T.on_boundary(v)) {
      int i = T.bpos[v];
      int hd = H.darts[i];
      int back = H.darts[(i + nb - 1) % nb] ^ 1;
      if (map.rot[hd] != back) throw Error(Errc::BadInput, "hole corner is not empty");
      auto ds = T.darts_ccw(v, T.boundary_dart(i));
      int at = hd;
      for (size_t t = 1; t + 1 < ds.size(); ++t) {
        map.insert_after(at, dmap[ds[t]]);
        at = dmap[ds[t]];
      }
    } else {
      auto ds = T.darts_ccw(v);
      map.attach_single(dmap[ds[0]]);
      for (size_t t = 1; t < ds.size(); ++t) map.insert_after(dmap[ds[t - 1]], dmap[ds[t]]);
    }
  }
  for (auto& tr : T.tri) map.add_triangle(dmap[tr[0]], dmap[tr[1]], dmap[tr[2]]);
  H.filled = true;
}

void LazyHalfPlane::resolve(int d) {
  int f = map.face[d];
  if (f == kUnexplored) peel(d);
  else if (is_hole(f)) materialize_hole(hole_of(f));
}

std::string LazyHalfPlane::audit() const {
  const PlanarMap& M = map;
  for (int d = 0; d < M.nd(); ++d) {
    if (M.rotp[M.rot[d]] != d) return "rotation is not a permutation at dart " + std::to_string(d);
    if (M.org[M.rot[d]] != M.org[d]) return "rotation leaves its vertex at dart " + std::to_string(d);
  }
  for (int f = 0; f < M.ntri(); ++f) {
    auto t = M.tri[f];
    for (int i = 0; i < 3; ++i) {
      if (M.face[t[i]] != f) return "triangle label mismatch at face " + std::to_string(f);
      if (M.fnext(t[i]) != t[(i + 1) % 3]) return "triangle is not a rotation face at " + std::to_string(f);
    }
  }
  for (int v = 0; v < M.nv(); ++v) {
    std::unordered_set<int> heads;
    for (int d : M.darts_ccw(v))
      if (!heads.insert(M.head(d)).second) return "parallel edge at vertex " + std::to_string(v);
    if (v < static_cast<int>(gfront_.size()) && gfront_[v] >= 0) {
      int d = gfront_[v];
      if (M.org[d] != v || M.head(d) != gnext_[v]) return "frontier dart mismatch at " + std::to_string(v);
      if (M.face[d] != kUnexplored) return "frontier dart is labelled at " + std::to_string(v);
      if (gprev_[gnext_[v]] != v) return "frontier links disagree at " + std::to_string(v);
    }
  }
  return {};
}

void LazyHalfPlane::reroot(int u, int v) {
  if (!on_frontier(u) || gnext(u) != v) throw Error(Errc::NotBoundary, "new root is not a frontier edge");
  root = gfront_[u];
}

}  // namespace sw
