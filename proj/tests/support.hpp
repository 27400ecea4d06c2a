#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "sw/planar_map.hpp"
#include "sw/rng.hpp"

namespace sw::testing {

// Boundary cycle of a random disk of inner faces, grown from a random inner
// face by attaching neighbouring triangles. Never contains the exterior face.
inline std::vector<int> random_disk_cycle(const Triangulation& t, Rng& rng, int grow_steps) {
  const auto& f0 = t.faces[rng.below(t.faces.size())];
  std::vector<int> cyc{f0[0], f0[1], f0[2]};   // anticlockwise, region on the left
  std::set<int> inside;                         // region vertices not on the cycle
  for (int s = 0; s < grow_steps; ++s) {
    const int b = static_cast<int>(cyc.size());
    const int i = static_cast<int>(rng.below(b));
    const int u = cyc[i], w = cyc[(i + 1) % b];
    const int out = t.find_dart(w, u);   // the face beyond edge u -> w
    if (t.face[out] < 0) continue;
    const int x = t.head(t.fnext(out));
    const int prev = cyc[(i + b - 1) % b], next = cyc[(i + 2) % b];
    if (std::find(cyc.begin(), cyc.end(), x) == cyc.end()) {
      if (inside.count(x)) continue;
      cyc.insert(cyc.begin() + i + 1, x);
    } else if (x == next && b > 3) {
      inside.insert(w);
      cyc.erase(cyc.begin() + (i + 1) % b);
    } else if (x == prev && b > 3) {
      inside.insert(u);
      cyc.erase(cyc.begin() + i);
    }
  }
  return cyc;
}

// Signed number of clockwise passes of a path Q (starting at the centre c)
// through the ray from c at angle theta, from vertex coordinates. Q must
// not pass through c again and must not start or end on the ray.
inline int ray_crossings(const std::vector<double>& x, const std::vector<double>& y, int c, double theta,
                         const std::vector<int>& Q) {
  double phi = std::atan2(y[Q[1]] - y[c], x[Q[1]] - x[c]);
  const double start = phi;
  for (size_t i = 2; i < Q.size(); ++i) {
    double a = std::atan2(y[Q[i]] - y[c], x[Q[i]] - x[c]);
    double d = a - std::remainder(phi, 2 * M_PI);
    d = std::remainder(d, 2 * M_PI);
    phi += d;
  }
  // passes of theta + 2 pi k strictly between start and the final angle
  auto below = [&](double p) { return std::floor((p - theta) / (2 * M_PI)); };
  return static_cast<int>(below(start) - below(phi));
}

}  // namespace sw::testing
