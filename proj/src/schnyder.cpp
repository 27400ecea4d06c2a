#include "sw/schnyder.hpp"

#include <algorithm>
#include <deque>
#include <regex>
#include <set>
#include <sstream>

#include "sw/errors.hpp"

namespace sw {

const char* color_name(int c) {
  switch (c) {
    case kRed: return "red";
    case kYellow: return "yellow";
    case kBlue: return "blue";
    default: return "none";
  }
}

int parse_color(const std::string& s) {
  if (s == "red" || s == "r") return kRed;
  if (s == "yellow" || s == "y") return kYellow;
  if (s == "blue" || s == "b") return kBlue;
  if (s == "none" || s == "-") return kNone;
  throw Error(Errc::BadInput, "unknown colour '" + s + "'");
}

int Wood::ncolored() const {
  int k = 0;
  for (auto c : color) k += c >= 0;
  return k;
}

bool Wood::complete(const PlanarMap& m) const {
  if (static_cast<int>(color.size()) < m.ne()) return false;
  for (int e = 0; e < m.ne(); ++e)
    if (color[e] < 0 || out[e] < 0) return false;
  return true;
}

std::string WoodReport::str() const {
  if (ok) return deferred ? "pass (" + std::to_string(deferred) + " deferred)" : "pass";
  std::ostringstream os;
  os << "fail: " << condition << " at vertex " << vertex << " word " << word;
  return os.str();
}

std::string vertex_word(const PlanarMap& m, const Wood& w, int v, int start) {
  std::string s;
  for (int d : m.darts_ccw(v, start)) {
    int c = w.color_of(d);
    if (c < 0 || !w.oriented(d)) {
      s.push_back('?');
      continue;
    }
    char ch = "RYB"[c];
    s.push_back(w.is_out(d) ? ch : static_cast<char>(ch - 'A' + 'a'));
  }
  return s;
}

bool interior_condition(const std::string& word) {
  static const std::regex re("By*Rb*Yr*");
  auto p = word.find('B');
  if (p == std::string::npos || word.find('B', p + 1) != std::string::npos) return false;
  std::string r = word.substr(p) + word.substr(0, p);
  return std::regex_match(r, re);
}

bool boundary_condition(const std::string& word) {
  static const std::regex re("y*Rb*Yr*");
  return std::regex_match(word, re);
}

namespace {

int count_out(const std::string& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](char c) { return c >= 'A' && c <= 'Z'; }));
}

bool distinct_out(const std::string& w) {
  std::set<char> s;
  for (char c : w)
    if (c >= 'A' && c <= 'Z' && !s.insert(c).second) return false;
  return true;
}

}  // namespace

WoodReport verify_wood(const Triangulation& t, const Wood& w) {
  WoodReport r;
  auto fail = [&](const std::string& cond, int v, const std::string& word) {
    r.ok = false;
    r.condition = cond;
    r.vertex = v;
    r.word = word;
    return r;
  };
  for (int e = 0; e < t.ne(); ++e)
    if (w.color_of(2 * e) < 0 || !w.oriented(2 * e))
      return fail("uncoloured edge", t.org[2 * e], vertex_word(t, w, t.org[2 * e], 2 * e));
  static const std::regex root_r("Yr*"), root_y("y*");
  for (int v = 0; v < t.nv(); ++v) {
    if (v == t.vr()) {
      auto word = vertex_word(t, w, v, t.root);
      if (count_out(word) != 1) return fail("root out-degree at v_r", v, word);
      if (!std::regex_match(word, root_r)) return fail("root condition at v_r", v, word);
    } else if (v == t.vy()) {
      auto word = vertex_word(t, w, v, t.boundary_dart(2));
      if (count_out(word) != 0) return fail("root out-degree at v_y", v, word);
      if (!std::regex_match(word, root_y)) return fail("root condition at v_y", v, word);
    } else if (t.on_boundary(v)) {
      auto word = vertex_word(t, w, v, t.boundary_dart(t.bpos[v]));
      if (count_out(word) != 2) return fail("boundary out-degree != 2", v, word);
      if (!distinct_out(word)) return fail("duplicate outgoing color", v, word);
      if (!boundary_condition(word)) return fail("boundary condition", v, word);
    } else {
      auto word = vertex_word(t, w, v, t.vdart[v]);
      if (count_out(word) != 3) return fail("interior out-degree != 3", v, word);
      if (!distinct_out(word)) return fail("duplicate outgoing color", v, word);
      if (!interior_condition(word)) return fail("schnyder condition", v, word);
    }
  }
  return r;
}

bool left_side_bounded(const PlanarMap& m, const std::vector<int>& cyc) {
  std::set<int> cut;
  for (int d : cyc) cut.insert(PlanarMap::edge_of(d));
  // two interleaved flood fills; the first to finish without meeting an
  // unbounded face identifies the bounded side
  struct Side {
    std::deque<int> q;
    std::set<int> seen;
    bool unbounded = false;
  } side[2];
  auto push = [&](Side& s, int f) {
    if (f == kExterior || f == kUnexplored) {
      s.unbounded = true;
      return;
    }
    if (f < 0) return;  // holes are finite
    if (s.seen.insert(f).second) s.q.push_back(f);
  };
  for (int d : cyc) {
    push(side[0], m.face[d]);
    push(side[1], m.face[PlanarMap::twin(d)]);
  }
  for (;;) {
    for (int i = 0; i < 2; ++i) {
      Side& s = side[i];
      if (s.unbounded) return i == 1;
      if (s.q.empty()) return i == 0;
      int f = s.q.front();
      s.q.pop_front();
      for (int d : m.tri[f]) {
        if (cut.count(PlanarMap::edge_of(d))) continue;
        push(s, m.face[PlanarMap::twin(d)]);
      }
    }
  }
}

std::optional<DirectedTriangle> find_anticlockwise_triangle_map(const PlanarMap& m, const Wood& w,
                                                                const std::vector<int>& vertices) {
  for (int a : vertices) {
    if (m.vdart[a] < 0) continue;
    for (int d1 : m.darts_ccw(a)) {
      if (!w.is_out(d1)) continue;
      int b = m.head(d1);
      if (b < a) continue;
      for (int d2 : m.darts_ccw(b)) {
        if (!w.is_out(d2)) continue;
        int c = m.head(d2);
        if (c <= a) continue;
        int d3 = m.find_dart(c, a);
        if (d3 < 0 || !w.is_out(d3)) continue;
        bool acw;
        if (m.face[d1] >= 0 && m.fnext(d1) == d2 && m.fnext(d2) == d3) {
          acw = true;
        } else if (m.face[d1 ^ 1] >= 0 && m.fnext(d1 ^ 1) == (d3 ^ 1)) {
          acw = false;
        } else {
          acw = left_side_bounded(m, {d1, d2, d3});
        }
        if (acw) return DirectedTriangle{a, b, c};
      }
    }
  }
  return std::nullopt;
}

void check_3_orientation(const Triangulation& t, const Wood& w) {
  for (int e = 0; e < t.ne(); ++e)
    if (!w.oriented(2 * e)) throw Error(Errc::Not3Orientation, "edge " + std::to_string(e) + " not oriented");
  for (int v = 0; v < t.nv(); ++v) {
    int out = 0;
    for (int d : t.darts_ccw(v)) out += w.is_out(d);
    int want = v == t.vr() ? 1 : v == t.vy() ? 0 : t.on_boundary(v) ? 2 : 3;
    if (out != want)
      throw Error(Errc::Not3Orientation, "vertex " + std::to_string(v) + " has out-degree " + std::to_string(out));
  }
}

std::optional<DirectedTriangle> find_anticlockwise_triangle(const Triangulation& t, const Wood& w) {
  check_3_orientation(t, w);
  std::vector<int> all(t.nv());
  for (int v = 0; v < t.nv(); ++v) all[v] = v;
  return find_anticlockwise_triangle_map(t, w, all);
}

int cycle_interior_outdegree(const PlanarMap& m, const Wood& w, const std::vector<int>& cycle) {
  const int b = static_cast<int>(cycle.size());
  if (b < 3) throw Error(Errc::NotACycle, "cycle needs at least 3 vertices");
  std::set<int> vs(cycle.begin(), cycle.end());
  if (static_cast<int>(vs.size()) != b) throw Error(Errc::NotACycle, "repeated vertex");
  std::vector<int> ds(b);
  for (int i = 0; i < b; ++i) {
    if (cycle[i] < 0 || cycle[i] >= m.nv()) throw Error(Errc::NotACycle, "unknown vertex");
    ds[i] = m.find_dart(cycle[i], cycle[(i + 1) % b]);
    if (ds[i] < 0) throw Error(Errc::NotACycle, "consecutive vertices not adjacent");
  }
  bool left = left_side_bounded(m, ds);
  int count = 0;
  for (int i = 0; i < b; ++i) {
    int out = ds[i], in = PlanarMap::twin(ds[(i + b - 1) % b]);
    int from = left ? out : in, to = left ? in : out;
    for (int d = m.rot[from]; d != to; d = m.rot[d]) count += w.is_out(d);
  }
  return count;
}

int out_dart(const PlanarMap& m, const Wood& w, int v, int c) {
  if (m.vdart[v] < 0) return -1;
  int s = m.vdart[v], d = s;
  do {
    if (w.is_out(d) && w.color_of(d) == c) return d;
    d = m.rot[d];
  } while (d != s);
  return -1;
}

std::vector<int> path_from(const PlanarMap& m, const Wood& w, int v, int c, int budget) {
  if (budget < 0) budget = m.nv() + 1;
  std::vector<int> p{v};
  for (;;) {
    int d = out_dart(m, w, p.back(), c);
    if (d < 0) return p;
    if (static_cast<int>(p.size()) > budget)
      throw Error(Errc::BudgetExhausted, std::string(color_name(c)) + " path did not terminate");
    p.push_back(m.head(d));
  }
}

Forest monochrome_forest(const Triangulation& t, const Wood& w, int c) {
  Forest f;
  f.color = c;
  f.parent.assign(t.nv(), -1);
  std::vector<int> children(t.nv(), 0);
  for (int v = 0; v < t.nv(); ++v) {
    int k = 0;
    for (int d : t.darts_ccw(v))
      if (w.is_out(d) && w.color_of(d) == c) {
        ++k;
        f.parent[v] = t.head(d);
      }
    if (k > 1) {
      f.ok = false;
      f.message = "vertex " + std::to_string(v) + " has two outgoing edges of one colour";
      return f;
    }
    if (f.parent[v] >= 0) ++children[f.parent[v]];
  }
  // acyclicity and root of each vertex
  std::vector<int> root(t.nv(), -2);
  for (int v = 0; v < t.nv(); ++v) {
    std::vector<int> chain;
    int x = v;
    while (root[x] == -2) {
      root[x] = -3;  // on the current chain
      chain.push_back(x);
      if (f.parent[x] < 0) break;
      x = f.parent[x];
    }
    int r;
    if (root[x] == -3 && f.parent[x] >= 0) {
      f.ok = false;
      f.message = "directed cycle through vertex " + std::to_string(x);
      return f;
    }
    r = root[x] == -3 ? x : root[x];
    for (int y : chain) root[y] = r;
  }
  for (int v = 0; v < t.nv(); ++v)
    if (f.parent[v] < 0 && children[v] > 0) f.roots.push_back(v);
  auto bad = [&](const std::string& msg) {
    f.ok = false;
    f.message = msg;
  };
  for (int v = 0; v < t.nv(); ++v) {
    bool interior = !t.on_boundary(v);
    if (c == kRed && v != t.vy() && root[v] != t.vr()) bad("red tree misses vertex " + std::to_string(v));
    if (c == kYellow && root[v] != t.vy()) bad("yellow tree misses vertex " + std::to_string(v));
    if (c == kBlue) {
      if (interior && (f.parent[v] < 0 || !t.on_boundary(root[v]) || root[v] == t.vr() || root[v] == t.vy()))
        bad("blue tree of vertex " + std::to_string(v) + " not rooted at a non-root boundary vertex");
      if (!interior && f.parent[v] >= 0) bad("boundary vertex " + std::to_string(v) + " has a blue out-edge");
    }
    if (!f.ok) return f;
  }
  return f;
}

BraidReport check_braid(const Triangulation& t, const Wood& w, int v) {
  BraidReport r;
  auto pb = path_from(t, w, v, kBlue), pr = path_from(t, w, v, kRed), py = path_from(t, w, v, kYellow);
  std::set<int> sb(pb.begin(), pb.end()), sr(pr.begin(), pr.end()), sy(py.begin(), py.end());
  auto fail = [&](const std::string& s) {
    r.ok = false;
    r.message = s + " (v=" + std::to_string(v) + ")";
    return r;
  };
  for (int x : pb) {
    int d = out_dart(t, w, x, kRed);
    if (d < 0 || !sr.count(t.head(d))) return fail("blue path vertex " + std::to_string(x) + " lacks red edge into P_r");
  }
  for (int x : pr) {
    int d = out_dart(t, w, x, kYellow);
    if (x == t.vy()) continue;
    if (d < 0 || !sy.count(t.head(d)))
      return fail("red path vertex " + std::to_string(x) + " lacks yellow edge into P_y");
  }
  for (int x : py) {
    if (t.on_boundary(x)) continue;
    int d = out_dart(t, w, x, kBlue);
    if (d < 0 || !sb.count(t.head(d))) return fail("yellow path vertex " + std::to_string(x) + " lacks blue edge into P_b");
  }
  if (!paths_disjoint(t, w, v)) return fail("monochromatic paths intersect");
  return r;
}

bool paths_disjoint(const PlanarMap& m, const Wood& w, int v) {
  auto pb = path_from(m, w, v, kBlue), pr = path_from(m, w, v, kRed), py = path_from(m, w, v, kYellow);
  std::set<int> seen;
  for (auto* p : {&pb, &pr, &py})
    for (size_t i = 1; i < p->size(); ++i)
      if (!seen.insert((*p)[i]).second || (*p)[i] == v) return false;
  return true;
}

std::vector<Wood> all_3_orientations(const Triangulation& t) {
  const int E = t.ne();
  if (E > 18) throw Error(Errc::TooLarge, "orientation enumeration is limited to 18 edges");
  std::vector<int> need(t.nv()), rem(t.nv(), 0);
  for (int v = 0; v < t.nv(); ++v) {
    need[v] = v == t.vr() ? 1 : v == t.vy() ? 0 : t.on_boundary(v) ? 2 : 3;
    rem[v] = t.degree(v);
  }
  std::vector<Wood> out;
  Wood cur;
  cur.ensure(E);
  auto feasible = [&](int v) { return need[v] >= 0 && need[v] <= rem[v]; };
  auto rec = [&](auto&& self, int e) -> void {
    if (e == E) {
      out.push_back(cur);
      return;
    }
    for (int side = 0; side < 2; ++side) {
      int d = 2 * e + side;
      int a = t.org[d], b = t.head(d);
      --need[a];
      --rem[a];
      --rem[b];
      if (feasible(a) && feasible(b)) {
        cur.out[e] = d;
        self(self, e + 1);
        cur.out[e] = -1;
      }
      ++need[a];
      ++rem[a];
      ++rem[b];
    }
  };
  rec(rec, 0);
  return out;
}

bool has_anticlockwise_cycle(const Triangulation& t, const Wood& o) {
  // every simple directed cycle, found from its least vertex; the bounded side decides the sense
  std::vector<int> path;
  std::vector<char> on(t.nv(), 0);
  bool found = false;
  auto dfs = [&](auto&& self, int s, int v) -> void {
    for (int d : t.darts_ccw(v)) {
      if (found) return;
      if (!o.is_out(d)) continue;
      int w = t.head(d);
      if (w == s) {
        path.push_back(d);
        if (path.size() >= 3 && left_side_bounded(t, path)) found = true;
        path.pop_back();
      } else if (w > s && !on[w]) {
        on[w] = 1;
        path.push_back(d);
        self(self, s, w);
        path.pop_back();
        on[w] = 0;
      }
    }
  };
  for (int s = 0; s < t.nv() && !found; ++s) {
    on[s] = 1;
    dfs(dfs, s, s);
    on[s] = 0;
  }
  return found;
}

Wood colour_orientation(const Triangulation& t, const Wood& o) {
  // try every assignment of colours to out-edges that is locally plausible, keep verified ones
  struct Slot {
    std::vector<int> outs;
    int nchoices;
  };
  std::vector<Slot> slots;
  for (int v = 0; v < t.nv(); ++v) {
    Slot s;
    int start = v == t.vr() ? t.root : t.on_boundary(v) ? t.boundary_dart(t.bpos[v]) : t.vdart[v];
    for (int d : t.darts_ccw(v, start))
      if (o.is_out(d)) s.outs.push_back(d);
    s.nchoices = s.outs.size() == 3 ? 3 : s.outs.size() == 2 ? 2 : 1;
    slots.push_back(s);
  }
  std::vector<Wood> good;
  Wood cur = o;
  cur.ensure(t.ne());
  auto rec = [&](auto&& self, int v) -> void {
    if (v == t.nv()) {
      if (verify_wood(t, cur).ok) good.push_back(cur);
      return;
    }
    const Slot& s = slots[v];
    for (int ch = 0; ch < s.nchoices; ++ch) {
      if (s.outs.size() == 3) {
        static const int cyc[3] = {kBlue, kRed, kYellow};
        for (int i = 0; i < 3; ++i) cur.set(s.outs[i], cyc[(i + ch) % 3]);
      } else if (s.outs.size() == 2) {
        cur.set(s.outs[0], ch ? kYellow : kRed);
        cur.set(s.outs[1], ch ? kRed : kYellow);
      } else if (s.outs.size() == 1) {
        cur.set(s.outs[0], kYellow);
      }
      self(self, v + 1);
    }
  };
  rec(rec, 0);
  if (good.size() != 1)
    throw Error(Errc::OracleContradiction,
                "orientation induces " + std::to_string(good.size()) + " Schnyder woods, expected 1");
  return good[0];
}

Wood brute_force_maximal(const Triangulation& t, int* survivors) {
  auto all = all_3_orientations(t);
  std::vector<Wood> keep;
  for (auto& o : all)
    if (!has_anticlockwise_cycle(t, o)) keep.push_back(o);
  if (survivors) *survivors = static_cast<int>(keep.size());
  if (keep.size() != 1)
    throw Error(Errc::OracleContradiction,
                std::to_string(keep.size()) + " anticlockwise-free 3-orientations, expected exactly 1");
  return colour_orientation(t, keep[0]);
}

std::string to_wood(const PlanarMap& m, const Wood& w) {
  std::ostringstream os;
  os << "WOOD v1 " << m.ne() << "\n";
  for (int e = 0; e < m.ne(); ++e) {
    int head = w.oriented(2 * e) ? m.head(w.out[e]) : -1;
    os << "e " << m.org[2 * e] << ' ' << m.org[2 * e + 1] << ' ' << head << ' ' << color_name(w.color_of(2 * e))
       << "\n";
  }
  return os.str();
}

Wood parse_wood(const PlanarMap& m, const std::string& text) {
  std::istringstream is(text);
  std::string line;
  Wood w;
  w.ensure(m.ne());
  int e = 0;
  bool header = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "WOOD") {
      std::string ver;
      ls >> ver;
      if (ver != "v1") throw Error(Errc::BadInput, "unsupported WOOD version");
      header = true;
      continue;
    }
    if (tag != "e") throw Error(Errc::BadInput, "bad WOOD line: " + line);
    int u, v, h;
    std::string col;
    if (!(ls >> u >> v >> h >> col)) throw Error(Errc::BadInput, "bad WOOD line: " + line);
    int d = m.find_dart(u, v);
    if (d < 0) throw Error(Errc::BadInput, "WOOD edge not in map: " + line);
    int c = parse_color(col);
    if (h >= 0) {
      if (h != u && h != v) throw Error(Errc::BadInput, "head is not an endpoint: " + line);
      int od = h == v ? d : PlanarMap::twin(d);
      w.set(od, c);
    }
    ++e;
  }
  if (!header) throw Error(Errc::BadInput, "missing WOOD v1 header");
  return w;
}

std::vector<int> colored_ball_code(const Triangulation& t, const Wood& w, int rho) {
  Ball b = ball(t, t.vr(), rho);
  std::vector<char> inball(t.nv(), 0);
  for (int v : b.vertices) inball[v] = 1;
  std::vector<int> label(t.nv(), -1);
  std::vector<int> code;
  std::deque<std::pair<int, int>> q;
  int next = 0;
  label[t.vr()] = next++;
  q.push_back({t.vr(), t.root});
  while (!q.empty()) {
    auto [v, s] = q.front();
    q.pop_front();
    int d = s;
    do {
      int x = t.head(d);
      if (inball[x]) {
        if (label[x] < 0) {
          label[x] = next++;
          q.push_back({x, PlanarMap::twin(d)});
        }
        int tag = (w.is_out(d) ? 8 : 0) + (w.color_of(d) + 1) * 2 + (t.face[d] == kExterior ? 1 : 0);
        code.push_back(label[x] * 16 + tag);
      }
      d = t.rot[d];
    } while (d != s);
    code.push_back(-1);
  }
  return code;
}

}  // namespace sw
