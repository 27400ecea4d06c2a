#include "sw/analysis.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "sw/errors.hpp"

namespace sw {

std::vector<int> Walk::vertices(const PlanarMap& m) const {
  std::vector<int> vs{start};
  for (int d : darts) vs.push_back(m.head(d));
  return vs;
}

Walk leftmost_walk(const PlanarMap& m, const Wood& w, int e, int budget, const std::function<bool(int)>& stop,
                   bool throw_on_budget) {
  Walk L;
  L.start = m.org[e];
  if (!w.is_out(e)) throw Error(Errc::BadInput, "leftmost walk must start on an outgoing dart");
  int d = e;
  for (;;) {
    L.darts.push_back(d);
    const int v = m.head(d);
    if (stop && stop(v)) {
      L.end = Walk::End::Boundary;
      return L;
    }
    if (L.length() >= budget) {
      if (throw_on_budget) throw Error(Errc::BudgetExhausted, "leftmost walk did not terminate");
      L.end = Walk::End::Budget;
      return L;
    }
    const int in = PlanarMap::twin(d);
    int next = -1;
    for (int x = m.rotp[in]; x != in; x = m.rotp[x])
      if (w.is_out(x)) {
        next = x;
        break;
      }
    if (next < 0) {
      L.end = Walk::End::Sink;
      return L;
    }
    d = next;
  }
}

namespace {

// x strictly inside the anticlockwise interval (a, b) around their common origin
bool in_ccw_open(const PlanarMap& m, int a, int b, int x) {
  for (int d = m.rot[a]; d != b; d = m.rot[d])
    if (d == x) return true;
  return false;
}

}  // namespace

int winding_number(const PlanarMap& m, const std::vector<int>& P, const std::vector<int>& Q) {
  if (P.empty() || Q.empty() || P[0] != Q[0]) throw Error(Errc::NotSharedStart, "paths must start at the same vertex");
  std::unordered_map<int, int> at;   // vertex -> index on P
  for (int i = 0; i < static_cast<int>(P.size()); ++i) at[P[i]] = i;
  const int last = static_cast<int>(P.size()) - 1;
  // side of dart x (leaving P[i]) relative to P: +1 left, -1 right, 0 along P.
  // At P's last vertex P continues into the outer face when it lies on the boundary.
  auto side = [&](int i, int x) {
    int back = m.find_dart(P[i], P[i - 1]);
    if (x == back) return 0;
    if (i == last) {
      for (int d : m.darts_ccw(P[i]))
        if (m.face[d] == kExterior) return (d == x || in_ccw_open(m, back, d, x)) ? -1 : 1;
      return 0;
    }
    int fwd = m.find_dart(P[i], P[i + 1]);
    if (x == fwd) return 0;
    return in_ccw_open(m, fwd, back, x) ? 1 : -1;
  };
  int w = 0;
  int j = 1;
  const int nq = static_cast<int>(Q.size());
  while (j < nq) {
    auto it = at.find(Q[j]);
    if (it == at.end()) {
      ++j;
      continue;
    }
    // maximal stretch Q[j..k] running along P in one direction
    int k = j;
    int dir = 0;
    while (k + 1 < nq) {
      auto nx = at.find(Q[k + 1]);
      if (nx == at.end()) break;
      int step = nx->second - at[Q[k]];
      if (step != 1 && step != -1) break;
      if (dir != 0 && step != dir) break;
      dir = step;
      ++k;
    }
    const int a = at[Q[j]], b = at[Q[k]];
    if (a > 0 && b > 0) {
      int s_in = side(a, m.find_dart(Q[j], Q[j - 1]));
      // a path ending on P's boundary end leaves into the outer face
      int s_out = k + 1 < nq ? side(b, m.find_dart(Q[k], Q[k + 1])) : (b == last ? -s_in : 0);
      if (s_in == 1 && s_out == -1) ++w;
      if (s_in == -1 && s_out == 1) --w;
    }
    j = k + 1;
  }
  return w;
}

std::vector<int> geodesic(const Triangulation& t, int v) {
  if (t.on_boundary(v)) return {v};
  std::vector<int> sources;
  for (int b : t.boundary) sources.push_back(b);
  auto dist = bfs_distances(t, sources);
  std::vector<int> p{v};
  while (!t.on_boundary(p.back())) {
    int u = p.back(), best = -1;
    for (int y : t.neighbors(u))
      if (dist[y] == dist[u] - 1 && (best < 0 || y < best)) best = y;
    p.push_back(best);
  }
  return p;
}

}  // namespace sw
