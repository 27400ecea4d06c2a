#include <cassert>

#include "sw/errors.hpp"
#include "sw/schnyder.hpp"

namespace sw {

void Explorer::grow() {
  if (static_cast<int>(explored_.size()) < map_->ntri()) explored_.resize(map_->ntri(), 0);
  if (static_cast<int>(revealed_.size()) < map_->nv()) revealed_.resize(map_->nv(), 0);
  wood.ensure(map_->ne());
}

void Explorer::reveal(int v) {
  grow();
  revealed_[v] = 1;
}

bool Explorer::unexplored(int d) {
  int f = map_->face[d];
  if (f < 0 && f != kExterior && resolve) {
    resolve(d);
    f = map_->face[d];
  }
  grow();
  return f >= 0 && !explored_[f];
}

Explorer::Shape Explorer::scan(int s) {
  Shape sh;
  sh.s = s;
  sh.v0 = map_->org[s];
  int cur = s;
  for (;;) {
    if (!unexplored(cur)) {
      if (is_hole(map_->face[cur])) throw Error(Errc::TooLarge, "peeling scan reached an unmaterialised region");
      throw Error(Errc::BadInput, "peeling scan left the unexplored region");
    }
    int f = map_->face[cur];
    explored_[f] = 1;
    sh.faces.push_back(f);
    int nd = map_->rot[cur];
    int w = map_->head(nd);
    if (revealed(w)) {
      sh.chord = nd;
      break;
    }
    reveal(w);
    sh.udarts.push_back(nd);
    cur = nd;
  }
  wood.ensure(map_->ne());
  wood.set(s, kRed);
  wood.set(sh.chord, kYellow);
  for (int d : sh.udarts) wood.set(PlanarMap::twin(d), kBlue);
  if (on_step) on_step(sh);
  return sh;
}

void Explorer::fill(int root_dart) {
  std::vector<int> stack{root_dart};
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    if (!unexplored(d)) continue;
    // v_0 is the last neighbour of v_1 inside the region, scanning anticlockwise from d
    int e = d;
    while (unexplored(map_->rot[e])) e = map_->rot[e];
    e = map_->rot[e];
    Shape sh = scan(PlanarMap::twin(e));
    if (left_first) {
      stack.push_back(d);
      stack.push_back(sh.chord);
    } else {
      stack.push_back(sh.chord);
      stack.push_back(d);
    }
  }
}

Wood peel_finite(const Triangulation& t, bool left_first) {
  // no resolve hook is installed, so the map is only read
  Explorer ex(const_cast<Triangulation&>(t));
  ex.left_first = left_first;
  for (int v : t.boundary) ex.reveal(v);
  ex.wood.ensure(t.ne());
  ex.wood.set(t.root, kYellow);
  ex.fill(t.root);
  return ex.wood;
}

}  // namespace sw
