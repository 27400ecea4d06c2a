#include "sw/planar_map.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "sw/counting.hpp"
#include "sw/errors.hpp"

namespace sw {

int PlanarMap::add_vertex() {
  vdart.push_back(-1);
  return nv() - 1;
}

int PlanarMap::add_edge(int u, int v) {
  int d = nd();
  org.push_back(u);
  org.push_back(v);
  rot.push_back(d);
  rot.push_back(d + 1);
  rotp.push_back(d);
  rotp.push_back(d + 1);
  face.push_back(kUnexplored);
  face.push_back(kUnexplored);
  return d;
}

void PlanarMap::insert_after(int at, int d) {
  int nx = rot[at];
  rot[at] = d;
  rotp[d] = at;
  rot[d] = nx;
  rotp[nx] = d;
  if (vdart[org[d]] < 0) vdart[org[d]] = d;
}

void PlanarMap::insert_before(int at, int d) { insert_after(rotp[at], d); }

void PlanarMap::attach_single(int d) {
  rot[d] = d;
  rotp[d] = d;
  vdart[org[d]] = d;
}

int PlanarMap::add_triangle(int d0, int d1, int d2) {
  int id = ntri();
  tri.push_back({d0, d1, d2});
  face[d0] = face[d1] = face[d2] = id;
  return id;
}

int PlanarMap::find_dart(int u, int v) const {
  int s = vdart[u];
  if (s < 0) return -1;
  int d = s;
  do {
    if (head(d) == v) return d;
    d = rot[d];
  } while (d != s);
  return -1;
}

int PlanarMap::degree(int v) const {
  int s = vdart[v];
  if (s < 0) return 0;
  int k = 0, d = s;
  do {
    ++k;
    d = rot[d];
  } while (d != s);
  return k;
}

std::vector<int> PlanarMap::darts_ccw(int v, int start) const {
  std::vector<int> out;
  int s = start >= 0 ? start : vdart[v];
  if (s < 0) return out;
  int d = s;
  do {
    out.push_back(d);
    d = rot[d];
  } while (d != s);
  return out;
}

std::vector<int> PlanarMap::neighbors(int v) const {
  std::vector<int> out;
  for (int d : darts_ccw(v)) out.push_back(head(d));
  return out;
}

int Triangulation::boundary_dart(int i) const {
  int k = static_cast<int>(boundary.size());
  return find_dart(boundary[((i % k) + k) % k], boundary[(((i + 1) % k) + k) % k]);
}

namespace {

using EdgeKey = std::pair<int, int>;
EdgeKey ekey(int a, int b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

bool has_dart(const Face& f, int a, int b) {
  for (int i = 0; i < 3; ++i)
    if (f[i] == a && f[(i + 1) % 3] == b) return true;
  return false;
}

}  // namespace

Triangulation build_from_faces(const std::vector<Face>& faces_in, const std::vector<int>& boundary_in,
                               std::pair<int, int> root) {
  const int nb = static_cast<int>(boundary_in.size());
  if (nb < 3) throw Error(Errc::BadInput, "boundary needs at least 3 vertices");
  if (faces_in.empty()) throw Error(Errc::BadInput, "empty face list");

  int vmax = -1;
  for (auto& f : faces_in)
    for (int x : f) {
      if (x < 0) throw Error(Errc::BadInput, "negative vertex id");
      vmax = std::max(vmax, x);
    }
  for (int x : boundary_in) {
    if (x < 0) throw Error(Errc::BadInput, "negative vertex id");
    vmax = std::max(vmax, x);
  }
  const int V = vmax + 1;
  std::vector<char> seen(V, 0);
  for (auto& f : faces_in) {
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) throw Error(Errc::NotSimple, "face with a repeated vertex");
    for (int x : f) seen[x] = 1;
  }
  for (int x : boundary_in)
    if (!seen[x]) throw Error(Errc::NonPlanar, "boundary vertex not on any face");
  for (int x = 0; x < V; ++x)
    if (!seen[x]) throw Error(Errc::BadInput, "vertex ids must be dense 0..V-1");

  {
    std::vector<char> inb(V, 0);
    for (int x : boundary_in) {
      if (inb[x]) throw Error(Errc::NotTwoConnected, "boundary walk repeats a vertex");
      inb[x] = 1;
    }
  }

  // incidence of undirected edges
  std::map<EdgeKey, std::vector<int>> inc;
  for (int i = 0; i < static_cast<int>(faces_in.size()); ++i) {
    auto& f = faces_in[i];
    for (int j = 0; j < 3; ++j) inc[ekey(f[j], f[(j + 1) % 3])].push_back(i);
  }
  {
    std::set<Face> uniq;
    for (auto f : faces_in) {
      std::sort(f.begin(), f.end());
      if (!uniq.insert(f).second) throw Error(Errc::NotSimple, "repeated face");
    }
  }
  std::set<EdgeKey> bedges;
  for (int i = 0; i < nb; ++i) bedges.insert(ekey(boundary_in[i], boundary_in[(i + 1) % nb]));
  if (static_cast<int>(bedges.size()) != nb) throw Error(Errc::NotSimple, "boundary repeats an edge");
  for (auto& [e, fl] : inc) {
    bool b = bedges.count(e) > 0;
    if (fl.size() > 2 || (b && fl.size() > 1)) throw Error(Errc::NotSimple, "edge shared by too many faces");
    if (!b && fl.size() != 2) throw Error(Errc::NonPlanar, "interior edge bounds a single face");
  }
  for (auto& e : bedges)
    if (!inc.count(e)) throw Error(Errc::NonPlanar, "boundary edge not on any face");

  // orient faces consistently, starting from the face on boundary edge b0 b1
  const int F = static_cast<int>(faces_in.size());
  std::vector<Face> faces(faces_in);
  std::vector<int> state(F, 0);  // 0 unset, 1 fixed
  {
    int f0 = inc[ekey(boundary_in[0], boundary_in[1])][0];
    if (!has_dart(faces[f0], boundary_in[0], boundary_in[1])) std::swap(faces[f0][1], faces[f0][2]);
    state[f0] = 1;
    std::deque<int> q{f0};
    while (!q.empty()) {
      int f = q.front();
      q.pop_front();
      for (int j = 0; j < 3; ++j) {
        int a = faces[f][j], b = faces[f][(j + 1) % 3];
        for (int g : inc[ekey(a, b)]) {
          if (g == f) continue;
          bool ok = has_dart(faces[g], b, a);
          if (state[g]) {
            if (!ok) throw Error(Errc::NonPlanar, "faces cannot be oriented consistently");
            continue;
          }
          if (!ok) std::swap(faces[g][1], faces[g][2]);
          state[g] = 1;
          q.push_back(g);
        }
      }
    }
    for (int f = 0; f < F; ++f)
      if (!state[f]) throw Error(Errc::NonPlanar, "face set is disconnected");
    for (int i = 0; i < nb; ++i) {
      int a = boundary_in[i], b = boundary_in[(i + 1) % nb];
      int g = inc[ekey(a, b)][0];
      if (!has_dart(faces[g], a, b)) throw Error(Errc::NonPlanar, "boundary orientation disagrees with faces");
    }
  }

  Triangulation t;
  t.vdart.assign(V, -1);
  std::map<std::pair<int, int>, int> dart_of;
  for (auto& [e, fl] : inc) {
    int d = t.add_edge(e.first, e.second);
    dart_of[{e.first, e.second}] = d;
    dart_of[{e.second, e.first}] = d + 1;
  }
  std::vector<int> nextd(t.nd(), -1);
  for (int f = 0; f < F; ++f) {
    std::array<int, 3> ds;
    for (int j = 0; j < 3; ++j) {
      int a = faces[f][j], b = faces[f][(j + 1) % 3], c = faces[f][(j + 2) % 3];
      int d = dart_of[{a, b}];
      ds[j] = d;
      if (nextd[d] >= 0) throw Error(Errc::NonPlanar, "dart bounds two faces");
      nextd[d] = dart_of[{a, c}];
    }
    t.tri.push_back(ds);
    for (int d : ds) t.face[d] = f;
  }
  for (int i = 0; i < nb; ++i) {
    int a = boundary_in[i], b = boundary_in[(i + 1) % nb], c = boundary_in[(i + 2) % nb];
    int d = dart_of[{b, a}];
    t.face[d] = kExterior;
    nextd[d] = dart_of[{b, c}];
  }
  for (int d = 0; d < t.nd(); ++d)
    if (nextd[d] < 0) throw Error(Errc::NonPlanar, "incomplete rotation");
  t.rot = nextd;
  t.rotp.assign(t.nd(), -1);
  for (int d = 0; d < t.nd(); ++d) {
    if (t.rotp[t.rot[d]] >= 0) throw Error(Errc::NonPlanar, "rotation is not a permutation");
    t.rotp[t.rot[d]] = d;
    if (t.org[t.rot[d]] != t.org[d]) throw Error(Errc::NonPlanar, "rotation leaves its vertex");
  }
  for (int d = 0; d < t.nd(); ++d)
    if (t.vdart[t.org[d]] < 0) t.vdart[t.org[d]] = d;
  // one rotation cycle per vertex
  {
    std::vector<char> mark(t.nd(), 0);
    int cycles = 0;
    for (int d = 0; d < t.nd(); ++d) {
      if (mark[d]) continue;
      ++cycles;
      int x = d;
      do {
        mark[x] = 1;
        x = t.rot[x];
      } while (x != d);
    }
    if (cycles != V) throw Error(Errc::NonPlanar, "a vertex star is pinched");
  }
  const int E = t.ne();
  if (V - E + (F + 1) != 2) throw Error(Errc::NonPlanar, "Euler characteristic is not 2");

  // 2-connectivity: no articulation point
  {
    std::vector<int> disc(V, -1), low(V, 0);
    int timer = 0;
    bool cut = false;
    std::function<void(int, int)> dfs = [&](int v, int parent) {
      disc[v] = low[v] = timer++;
      int children = 0;
      for (int d : t.darts_ccw(v)) {
        int w = t.head(d);
        if (w == parent) continue;
        if (disc[w] >= 0) {
          low[v] = std::min(low[v], disc[w]);
        } else {
          ++children;
          dfs(w, v);
          low[v] = std::min(low[v], low[w]);
          if (parent >= 0 && low[w] >= disc[v]) cut = true;
        }
      }
      if (parent < 0 && children > 1) cut = true;
    };
    dfs(0, -1);
    for (int x = 0; x < V; ++x)
      if (disc[x] < 0) throw Error(Errc::NonPlanar, "graph is disconnected");
    if (cut) throw Error(Errc::NotTwoConnected, "cut vertex present");
  }

  int ri = -1;
  for (int i = 0; i < nb; ++i)
    if (boundary_in[i] == root.first && boundary_in[(i + 1) % nb] == root.second) ri = i;
  if (ri < 0) throw Error(Errc::BadRoot, "root is not an anticlockwise boundary edge");
  t.boundary.resize(nb);
  for (int i = 0; i < nb; ++i) t.boundary[i] = boundary_in[((ri - 1 + i) % nb + nb) % nb];
  t.bpos.assign(V, -1);
  for (int i = 0; i < nb; ++i) t.bpos[t.boundary[i]] = i;
  t.root = dart_of[{root.first, root.second}];
  t.m = nb - 2;
  t.n = V - nb;
  t.faces = faces;
  return t;
}

std::string to_tri(const Triangulation& t) {
  std::ostringstream os;
  os << "TRI " << t.m << ' ' << t.n << '\n';
  for (auto& f : t.faces) os << "f " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
  os << 'B';
  for (int v : t.boundary) os << ' ' << v;
  os << '\n';
  os << "R " << t.org[t.root] << ' ' << t.head(t.root) << '\n';
  return os.str();
}

Triangulation parse_tri(const std::string& text) {
  std::istringstream is(text);
  std::string line, tag;
  int m = -1, n = -1;
  std::vector<Face> faces;
  std::vector<int> boundary;
  std::pair<int, int> root{-1, -1};
  bool have_root = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    ls >> tag;
    if (tag == "TRI") {
      ls >> m >> n;
    } else if (tag == "f") {
      Face f;
      if (!(ls >> f[0] >> f[1] >> f[2])) throw Error(Errc::BadInput, "bad face line: " + line);
      faces.push_back(f);
    } else if (tag == "B") {
      int v;
      while (ls >> v) boundary.push_back(v);
    } else if (tag == "R") {
      if (!(ls >> root.first >> root.second)) throw Error(Errc::BadInput, "bad root line");
      have_root = true;
    } else {
      throw Error(Errc::BadInput, "unknown line: " + line);
    }
  }
  if (m < 0 || !have_root) throw Error(Errc::BadInput, "missing TRI header or root");
  Triangulation t = build_from_faces(faces, boundary, root);
  if (t.m != m || t.n != n) throw Error(Errc::BadInput, "header does not match content");
  return t;
}

std::vector<Face> extract_faces(const PlanarMap& m) {
  std::vector<Face> out;
  for (auto& ds : m.tri) {
    Face f{m.org[ds[0]], m.org[ds[1]], m.org[ds[2]]};
    std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> canonical_code(const Triangulation& t) {
  std::vector<int> label(t.nv(), -1);
  std::vector<int> code;
  std::deque<std::pair<int, int>> q;
  int next = 0;
  label[t.org[t.root]] = next++;
  q.push_back({t.org[t.root], t.root});
  while (!q.empty()) {
    auto [v, s] = q.front();
    q.pop_front();
    int d = s;
    do {
      int w = t.head(d);
      if (label[w] < 0) {
        label[w] = next++;
        q.push_back({w, PlanarMap::twin(d)});
      }
      code.push_back(label[w]);
      d = t.rot[d];
    } while (d != s);
    code.push_back(-1);
  }
  return code;
}

namespace {

void polygon_triangulations(const std::vector<int>& poly, std::vector<std::vector<Face>>& out) {
  // poly in anticlockwise order; recurse on the triangle over edge (poly[0], poly.back())
  if (poly.size() < 3) {
    out.push_back({});
    return;
  }
  const int k = static_cast<int>(poly.size());
  for (int i = 1; i < k - 1; ++i) {
    std::vector<int> left(poly.begin(), poly.begin() + i + 1);
    std::vector<int> right(poly.begin() + i, poly.end());
    std::vector<std::vector<Face>> a, b;
    polygon_triangulations(left, a);
    polygon_triangulations(right, b);
    for (auto& fa : a)
      for (auto& fb : b) {
        std::vector<Face> f = fa;
        f.insert(f.end(), fb.begin(), fb.end());
        f.push_back({poly.back(), poly[0], poly[i]});
        out.push_back(std::move(f));
      }
  }
}

}  // namespace

std::vector<Triangulation> enumerate_all(int m, int n) {
  if (m < 1) throw Error(Errc::InvalidM, "m must be at least 1");
  if (m > 3 || n > 3 || n < 0) throw Error(Errc::TooLarge, "enumeration is guarded to m <= 3, n <= 3");
  std::vector<int> poly(m + 2);
  for (int i = 0; i < m + 2; ++i) poly[i] = i;
  const std::pair<int, int> root{1, 2};

  std::map<std::vector<int>, Triangulation> level;
  {
    std::vector<std::vector<Face>> tris;
    polygon_triangulations(poly, tris);
    for (auto& f : tris) {
      Triangulation t = build_from_faces(f, poly, root);
      level.emplace(canonical_code(t), std::move(t));
    }
  }
  for (int step = 1; step <= n; ++step) {
    std::map<std::vector<int>, Triangulation> next;
    std::vector<std::vector<Face>> work;
    for (auto& [c, t] : level) {
      const int nv = t.nv();
      for (int fi = 0; fi < static_cast<int>(t.faces.size()); ++fi) {
        std::vector<Face> f = t.faces;
        Face g = f[fi];
        f.erase(f.begin() + fi);
        f.push_back({g[0], g[1], nv});
        f.push_back({g[1], g[2], nv});
        f.push_back({g[2], g[0], nv});
        work.push_back(std::move(f));
      }
    }
    // closure under flips that keep the map simple
    while (!work.empty()) {
      std::vector<Face> f = std::move(work.back());
      work.pop_back();
      Triangulation t;
      try {
        t = build_from_faces(f, poly, root);
      } catch (const Error&) {
        continue;
      }
      auto code = canonical_code(t);
      if (next.count(code)) continue;
      next.emplace(code, t);
      std::set<EdgeKey> edges;
      for (auto& x : t.faces)
        for (int j = 0; j < 3; ++j) edges.insert(ekey(x[j], x[(j + 1) % 3]));
      for (int d = 0; d < t.nd(); d += 2) {
        int fa = t.face[d], fb = t.face[d + 1];
        if (fa < 0 || fb < 0) continue;
        int a = t.org[d], b = t.head(d);
        int c = t.head(t.rot[d]);      // face a b c on the left of a->b
        int e = t.head(t.rotp[d]);     // face b a e on the right
        if (edges.count(ekey(c, e))) continue;
        std::vector<Face> g;
        for (int i = 0; i < static_cast<int>(t.faces.size()); ++i)
          if (i != fa && i != fb) g.push_back(t.faces[i]);
        g.push_back({a, e, c});
        g.push_back({e, b, c});
        work.push_back(std::move(g));
      }
    }
    level = std::move(next);
  }
  std::vector<Triangulation> out;
  for (auto& [c, t] : level) out.push_back(std::move(t));
  return out;
}

Triangulation reroot(const Triangulation& t, int u, int v) {
  int d = (u >= 0 && u < t.nv()) ? t.find_dart(u, v) : -1;
  if (d < 0 || t.face[d] < 0 || t.face[d ^ 1] != kExterior)
    throw Error(Errc::NotBoundary, "new root is not an anticlockwise boundary edge");
  Triangulation r = t;
  const int k = static_cast<int>(t.boundary.size());
  int i = t.bpos[u];
  for (int j = 0; j < k; ++j) r.boundary[j] = t.boundary[(i - 1 + j + k) % k];
  for (int j = 0; j < k; ++j) r.bpos[r.boundary[j]] = j;
  r.root = d;
  return r;
}

std::vector<int> bfs_distances(const PlanarMap& m, const std::vector<int>& sources, int limit) {
  std::vector<int> dist(m.nv(), -1);
  std::deque<int> q;
  for (int s : sources)
    if (dist[s] < 0) {
      dist[s] = 0;
      q.push_back(s);
    }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (limit >= 0 && dist[v] >= limit) continue;
    int s = m.vdart[v];
    if (s < 0) continue;
    int d = s;
    do {
      int w = m.head(d);
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
      d = m.rot[d];
    } while (d != s);
  }
  return dist;
}

Ball ball(const PlanarMap& m, int v, int rho) {
  Ball b;
  b.center = v;
  std::unordered_map<int, int> dist;
  std::deque<int> q{v};
  dist[v] = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    b.vertices.push_back(x);
    b.dist.push_back(dist[x]);
    if (dist[x] >= rho) continue;
    for (int d : m.darts_ccw(x)) {
      int w = m.head(d);
      if (!dist.count(w)) {
        dist[w] = dist[x] + 1;
        q.push_back(w);
      }
    }
  }
  for (int x : b.vertices)
    for (int d : m.darts_ccw(x)) {
      int w = m.head(d);
      if (x < w && dist.count(w)) b.edges.push_back(d);
    }
  return b;
}

}  // namespace sw
