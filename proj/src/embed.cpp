#include "sw/embed.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>

#include "sw/counting.hpp"
#include "sw/errors.hpp"

namespace sw {

namespace {

// faces reachable from f0 without crossing a barrier edge
long long region_faces(const PlanarMap& m, int f0, const std::vector<char>& barrier) {
  std::vector<char> seen(m.ntri(), 0);
  std::deque<int> q{f0};
  seen[f0] = 1;
  long long n = 0;
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    ++n;
    for (int d : m.tri[f]) {
      if (barrier[PlanarMap::edge_of(d)]) continue;
      int g = m.face[d ^ 1];
      if (g >= 0 && !seen[g]) {
        seen[g] = 1;
        q.push_back(g);
      }
    }
  }
  return n;
}

int inner_face_on(const Triangulation& t, int a, int b) {
  int d = t.find_dart(a, b);
  if (d < 0) throw Error(Errc::BadInput, "boundary edge missing");
  return t.face[d] >= 0 ? t.face[d] : t.face[d ^ 1];
}

}  // namespace

Embedding schnyder_grid_embedding(const Triangulation& t, const Wood& w) {
  if (t.m != 1) throw Error(Errc::NotTriangleBoundary, "grid embedding needs a triangular boundary");
  const int v0 = t.boundary[0], v1 = t.boundary[1], v2 = t.boundary[2];
  const long long F = t.ntri();
  Embedding E;
  E.kind = Embedding::Kind::SchnyderGrid;
  E.gx.assign(t.nv(), 0);
  E.gy.assign(t.nv(), 0);
  E.gx[v1] = F;
  E.gy[v2] = F;
  const int fr = inner_face_on(t, v2, v0), fy = inner_face_on(t, v0, v1);
  std::vector<char> barrier(t.ne(), 0);
  auto mark = [&](int v, int c, char on) {
    auto p = path_from(t, w, v, c);
    for (size_t i = 0; i + 1 < p.size(); ++i) barrier[PlanarMap::edge_of(t.find_dart(p[i], p[i + 1]))] = on;
  };
  for (int v = 0; v < t.nv(); ++v) {
    if (t.on_boundary(v)) continue;
    mark(v, kYellow, 1);
    mark(v, kBlue, 1);
    E.gx[v] = region_faces(t, fr, barrier);
    mark(v, kYellow, 0);
    mark(v, kBlue, 0);
    mark(v, kBlue, 1);
    mark(v, kRed, 1);
    E.gy[v] = region_faces(t, fy, barrier);
    mark(v, kBlue, 0);
    mark(v, kRed, 0);
  }
  E.x.assign(E.gx.begin(), E.gx.end());
  E.y.assign(E.gy.begin(), E.gy.end());
  return E;
}

Embedding tutte_embedding(const Triangulation& t, std::vector<std::pair<double, double>> polygon, double tol,
                          int max_sweeps, double omega) {
  const int b = static_cast<int>(t.boundary.size());
  if (polygon.empty()) {
    const double pi = std::acos(-1.0);
    for (int i = 0; i < b; ++i) {
      double a = pi / 2 + 2 * pi * i / b;
      polygon.push_back({std::cos(a), std::sin(a)});
    }
  }
  if (static_cast<int>(polygon.size()) != b) throw Error(Errc::BadInput, "polygon size differs from the boundary");
  for (int i = 0; i < b; ++i) {
    auto [ax, ay] = polygon[i];
    auto [bx, by] = polygon[(i + 1) % b];
    auto [cx, cy] = polygon[(i + 2) % b];
    if ((bx - ax) * (cy - ay) - (by - ay) * (cx - ax) <= 0)
      throw Error(Errc::BadInput, "boundary polygon is not strictly convex and anticlockwise");
  }
  Embedding E;
  E.kind = Embedding::Kind::Tutte;
  E.x.assign(t.nv(), 0.0);
  E.y.assign(t.nv(), 0.0);
  double cx = 0, cy = 0;
  for (int i = 0; i < b; ++i) {
    E.x[t.boundary[i]] = polygon[i].first;
    E.y[t.boundary[i]] = polygon[i].second;
    cx += polygon[i].first / b;
    cy += polygon[i].second / b;
  }
  std::vector<int> inner;
  std::vector<std::vector<int>> nb(t.nv());
  for (int v = 0; v < t.nv(); ++v) {
    if (t.on_boundary(v)) continue;
    inner.push_back(v);
    E.x[v] = cx;
    E.y[v] = cy;
    for (int d : t.darts_ccw(v)) nb[v].push_back(t.head(d));
  }
  auto residual = [&] {
    double r = 0;
    for (int v : inner) {
      double sx = 0, sy = 0;
      for (int u : nb[v]) {
        sx += E.x[u];
        sy += E.y[u];
      }
      const double k = static_cast<double>(nb[v].size());
      r = std::max({r, std::abs(sx / k - E.x[v]), std::abs(sy / k - E.y[v])});
    }
    return r;
  };
  E.residual = residual();
  while (E.residual >= tol) {
    if (E.iterations >= max_sweeps) throw Error(Errc::NonConvergence, "barycentric sweeps did not converge");
    for (int v : inner) {
      double sx = 0, sy = 0;
      for (int u : nb[v]) {
        sx += E.x[u];
        sy += E.y[u];
      }
      const double k = static_cast<double>(nb[v].size());
      E.x[v] += omega * (sx / k - E.x[v]);
      E.y[v] += omega * (sy / k - E.y[v]);
    }
    ++E.iterations;
    if (E.iterations % 8 == 0) E.residual = residual();
  }
  return E;
}

namespace {

template <class T>
struct Pt {
  T x, y;
};

template <class T>
int orient(const Pt<T>& a, const Pt<T>& b, const Pt<T>& c) {
  T v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

// c on the closed segment ab, given collinear
template <class T>
bool on_segment(const Pt<T>& a, const Pt<T>& b, const Pt<T>& c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
         c.y <= std::max(a.y, b.y);
}

template <class T>
bool segments_meet(const Pt<T>& a, const Pt<T>& b, const Pt<T>& c, const Pt<T>& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

template <class T>
long long crossings(const PlanarMap& m, const std::vector<Pt<T>>& P) {
  struct Seg {
    int a, b;
    double x0, x1, y0, y1;
  };
  std::vector<Seg> segs;
  for (int e = 0; e < m.ne(); ++e) {
    int a = m.org[2 * e], b = m.org[2 * e + 1];
    double ax = static_cast<double>(P[a].x), bx = static_cast<double>(P[b].x);
    double ay = static_cast<double>(P[a].y), by = static_cast<double>(P[b].y);
    segs.push_back({a, b, std::min(ax, bx), std::max(ax, bx), std::min(ay, by), std::max(ay, by)});
  }
  std::vector<int> order(segs.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return segs[i].x0 < segs[j].x0; });
  long long n = 0;
  for (size_t oi = 0; oi < order.size(); ++oi) {
    const Seg& s = segs[order[oi]];
    for (size_t oj = oi + 1; oj < order.size(); ++oj) {
      const Seg& r = segs[order[oj]];
      if (r.x0 > s.x1) break;
      if (r.y0 > s.y1 || s.y0 > r.y1) continue;
      std::set<int> ends{s.a, s.b, r.a, r.b};
      if (ends.size() == 2) {
        ++n;   // parallel edges drawn on top of each other
        continue;
      }
      if (ends.size() == 3) {
        // shared endpoint p: they overlap iff the other ends lie on one ray from p
        int p = (s.a == r.a || s.a == r.b) ? s.a : s.b;
        int q1 = s.a == p ? s.b : s.a, q2 = r.a == p ? r.b : r.a;
        if (orient(P[p], P[q1], P[q2]) != 0) continue;
        T dot = (P[q1].x - P[p].x) * (P[q2].x - P[p].x) + (P[q1].y - P[p].y) * (P[q2].y - P[p].y);
        if (dot > 0) ++n;
        continue;
      }
      if (segments_meet(P[s.a], P[s.b], P[r.a], P[r.b])) ++n;
    }
  }
  return n;
}

}  // namespace

long long count_crossings(const PlanarMap& m, const Embedding& e) {
  if (e.kind == Embedding::Kind::SchnyderGrid && !e.gx.empty()) {
    std::vector<Pt<long long>> P(m.nv());
    for (int v = 0; v < m.nv(); ++v) P[v] = {e.gx[v], e.gy[v]};
    return crossings(m, P);
  }
  std::vector<Pt<Rational>> P(m.nv());
  for (int v = 0; v < m.nv(); ++v) P[v] = {Rational(e.x[v]), Rational(e.y[v])};
  return crossings(m, P);
}

std::string render_svg(const PlanarMap& m, const Embedding& e, const Wood* w, const std::vector<Highlight>& hl) {
  const double W = 800, pad = 20;
  double x0 = *std::min_element(e.x.begin(), e.x.end()), x1 = *std::max_element(e.x.begin(), e.x.end());
  double y0 = *std::min_element(e.y.begin(), e.y.end()), y1 = *std::max_element(e.y.begin(), e.y.end());
  double s = (W - 2 * pad) / std::max({x1 - x0, y1 - y0, 1e-9});
  auto X = [&](int v) { return pad + (e.x[v] - x0) * s; };
  auto Y = [&](int v) { return W - pad - (e.y[v] - y0) * s; };
  static const char* stroke[3] = {"#d62728", "#e6b400", "#1f4fd6"};
  std::ostringstream os;
  os.precision(6);
  os << std::fixed;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W << "\" height=\"" << W
     << "\" viewBox=\"0 0 " << W << " " << W << "\">\n<defs>\n";
  for (int c = 0; c < 3; ++c)
    os << "<marker id=\"arrow" << c << "\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"5\" "
       << "markerHeight=\"5\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"" << stroke[c] << "\"/></marker>\n";
  os << "</defs>\n<g id=\"edges\" stroke-width=\"1\">\n";
  for (int ed = 0; ed < m.ne(); ++ed) {
    int d = 2 * ed, c = kNone;
    if (w && w->color_of(d) >= 0) {
      c = w->color_of(d);
      if (w->oriented(d)) d = w->out[ed];
    }
    int a = m.org[d], b = m.head(d);
    os << "<line x1=\"" << X(a) << "\" y1=\"" << Y(a) << "\" x2=\"" << X(b) << "\" y2=\"" << Y(b) << "\" stroke=\""
       << (c >= 0 ? stroke[c] : "#999999") << "\"";
    if (c >= 0) os << " marker-end=\"url(#arrow" << c << ")\"";
    os << "/>\n";
  }
  os << "</g>\n";
  for (const auto& h : hl) {
    if (h.path.size() < 2) continue;
    os << "<polyline fill=\"none\" stroke-width=\"3\" stroke=\"" << h.color << "\" points=\"";
    for (int v : h.path) os << X(v) << "," << Y(v) << " ";
    os << "\"/>\n";
  }
  os << "<g id=\"vertices\" fill=\"black\">\n";
  for (int v = 0; v < m.nv(); ++v) os << "<circle cx=\"" << X(v) << "\" cy=\"" << Y(v) << "\" r=\"1.5\"/>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace sw
