#include "sw/segment.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_set>

#include "sw/errors.hpp"

namespace sw {

BaseBoundary BaseBoundary::initial(LazyHalfPlane& H) {
  BaseBoundary B;
  B.H_ = &H;
  B.mid_ = {H.b(0)};
  B.pos_[B.mid_[0]] = 0;
  return B;
}

BaseBoundary BaseBoundary::snapshot(LazyHalfPlane& H, long long zl, long long zr) {
  BaseBoundary B;
  B.H_ = &H;
  B.zL_ = zl;
  B.zR_ = zr;
  int v = H.b(zl), end = H.b(zr);
  if (!H.on_frontier(v) || !H.on_frontier(end)) throw Error(Errc::NotBoundary, "snapshot ends are not on the frontier");
  for (;;) {
    B.pos_[v] = static_cast<long long>(B.mid_.size());
    B.mid_.push_back(v);
    if (v == end) break;
    v = H.gnext(v);
  }
  return B;
}

int BaseBoundary::at(long long p) {
  const long long M = mid_size();
  if (p < 0) return H_->b(zL_ + p);
  if (p < M) return mid_[p];
  return H_->b(zR_ + p - M + 1);
}

std::optional<long long> BaseBoundary::position(int v) const {
  auto it = pos_.find(v);
  if (it != pos_.end()) return it->second;
  if (!H_->is_initial(v)) return std::nullopt;
  long long z = H_->index_of(v);
  if (z < zL_) return z - zL_;
  if (z > zR_) return z - zR_ + mid_size() - 1;
  return std::nullopt;
}

void StructureReport::merge(const StructureReport& o) {
  checks += o.checks;
  violations += o.violations;
  deferred += o.deferred;
  for (auto& m : o.messages)
    if (messages.size() < 20) messages.push_back(m);
}

SegmentProcess::SegmentProcess(LazyHalfPlane& h, BaseBoundary b, long long x0, bool existing_explored)
    : H(h), base(std::move(b)), x(x0), ex(h.map) {
  ex.resolve = [this](int d) { H.resolve(d); };
  ex.base_revealed = [this](int v) { return base.contains(v); };
  tail = base.at(x);
  tail_pos = x;
  hi = x + 1;
  zl = x - 1;
  base.at(zl);
  if (existing_explored)
    for (int f = 0; f < H.map.ntri(); ++f) ex.mark_explored(f);
  tails = {tail};
  heads = {head()};
  peel_vertex = {-1};
  int r = root_dart();
  if (r < 0) throw Error(Errc::NotBoundary, "root is not an edge of the base line");
  ex.wood.ensure(H.map.ne());
  ex.wood.set(r, kYellow);
}

void SegmentProcess::cover(long long p) {
  if (!covered_.insert(p).second) incremental.fail("position " + std::to_string(p) + " covered twice");
  if (!any_covered) {
    any_covered = true;
    cov_lo = cov_hi = p;
    return;
  }
  cov_lo = std::min(cov_lo, p);
  cov_hi = std::max(cov_hi, p);
}

// Covered positions plus a base-line tail must form one segment. The tail
// itself stays on the boundary until the next right step, so a left step can
// cover the vertex left of it first.
void SegmentProcess::check_contiguous() {
  if (!any_covered) return;
  ++incremental.checks;
  long long span = cov_hi - cov_lo + 1, have = static_cast<long long>(covered_.size());
  if (tail_pos && *tail_pos > cov_lo && *tail_pos < cov_hi && !covered_.count(*tail_pos)) ++have;
  if (have != span)
    incremental.fail("covered positions [" + std::to_string(cov_lo) + ", " + std::to_string(cov_hi) +
                     "] have gaps");
}

int SegmentProcess::birth_of(int v) const {
  auto it = birth.find(v);
  return it == birth.end() ? 0 : it->second;
}

const SegmentStepRecord& SegmentProcess::step() {
  const int a = v0();
  const int s = H.map.find_dart(a, tail);
  if (s < 0) throw Error(Errc::BadInput, "boundary edge at the peeling vertex is missing");
  const int i = nsteps() + 1;
  Explorer::Shape sh = ex.scan(s);
  const int vc = H.map.head(sh.chord);
  const int k = static_cast<int>(sh.udarts.size());
  peel_vertex.push_back(a);
  for (int d : sh.udarts) {
    int u = H.map.head(d);
    birth[u] = i;
    // every new frontier vertex is within distance 3 of the base line
    ++incremental.checks;
    std::deque<std::pair<int, int>> q{{u, 0}};
    std::unordered_set<int> seen{u};
    bool near = false;
    while (!q.empty() && !near) {
      auto [w, dist] = q.front();
      q.pop_front();
      if (base.contains(w)) near = true;
      if (dist == 3) continue;
      for (int e : H.map.darts_ccw(w)) {
        int y = H.map.head(e);
        if (seen.insert(y).second) q.push_back({y, dist + 1});
      }
    }
    if (!near) incremental.fail("frontier vertex " + std::to_string(u) + " farther than 3 from the base line");
  }

  SegmentStepRecord rec;
  rec.step = i;
  rec.k = k;
  rec.v0 = a;
  rec.chord = sh.chord;
  auto pc = base.position(vc);
  if (pc && *pc >= hi) {
    const long long h = *pc;
    rec.side = Side::Right;
    rec.ms = static_cast<int>(h - hi) + k;
    rec.xi = -1;
    ex.fill(root_dart());
    if (tail_pos) cover(*tail_pos);
    for (long long p = hi; p < h; ++p) cover(p);
    tails.push_back(a);
    heads.push_back(vc);
    if (!left.empty()) {
      tail = left.back();
      left.pop_back();
      tail_pos.reset();
    } else {
      tail = base.at(zl);
      tail_pos = zl;
      --zl;
      base.at(zl);
    }
    hi = h;
  } else {
    rec.side = Side::Left;
    long long j = -1;
    for (long long p = static_cast<long long>(left.size()) - 1; p >= 0; --p)
      if (left[p] == vc) {
        j = static_cast<long long>(left.size()) - 1 - p;
        left.resize(p + 1);
        break;
      }
    if (j < 0) {
      if (!pc || *pc > zl) throw Error(Errc::BadInput, "chord endpoint is not on the process boundary");
      const long long z = *pc;
      j = static_cast<long long>(left.size()) + (zl - z);
      for (long long p = zl; p > z; --p) cover(p);
      left.clear();
      zl = z;
      base.at(zl - 1);
    }
    for (int t = k - 1; t >= 0; --t) left.push_back(H.map.head(sh.udarts[t]));
    ex.fill(sh.chord);
    rec.ms = static_cast<int>(j - 1);
    rec.xi = k - static_cast<int>(j);
  }
  check_contiguous();
  rec.head_pos = hi;
  rec.cov_lo = cov_lo;
  rec.cov_hi = any_covered ? cov_hi : cov_lo - 1;
  history.push_back(rec);
  return history.back();
}

std::vector<int> SegmentProcess::blue_chain() const {
  // best[t]: last step whose peeling vertex was born at step t or earlier
  const int n = nsteps();
  std::vector<int> best(n + 1, 0);
  for (int s = 1; s <= n; ++s) {
    int b = birth_of(peel_vertex[s]);
    best[b] = std::max(best[b], s);
  }
  for (int t = 1; t <= n; ++t) best[t] = std::max(best[t], best[t - 1]);
  std::vector<int> chain;
  for (int prev = 0; prev < n && best[prev] > prev; prev = best[prev]) chain.push_back(peel_vertex[best[prev]]);
  return chain;
}

StructureReport SegmentProcess::check_structure() {
  StructureReport R;
  const PlanarMap& M = H.map;
  const Wood& W = ex.wood;
  const int nv = M.nv();
  std::vector<std::uint8_t> inc(nv, 0);
  for (int e = 0; e < static_cast<int>(W.color.size()) && e < M.ne(); ++e) {
    if (W.color[e] < 0) continue;
    inc[M.org[2 * e]] |= 1 << W.color[e];
    inc[M.org[2 * e + 1]] |= 1 << W.color[e];
  }
  std::vector<char> opaque(nv, 0);
  for (int h = 0; h < H.nholes(); ++h)
    if (H.hole_opaque(h))
      for (int v : H.hole_vertices(h)) opaque[v] = 1;
  const std::unordered_set<int> leftset(left.begin(), left.end());
  const int cor = corner(), hd = head(), bx = base.at(x), bx1 = base.at(x + 1);
  // successor along each colour, then memoised path ends
  std::vector<int> nxt[3] = {std::vector<int>(nv, -1), std::vector<int>(nv, -1), std::vector<int>(nv, -1)};
  for (int e = 0; e < static_cast<int>(W.color.size()) && e < M.ne(); ++e) {
    if (W.color[e] < 0) continue;
    int d = W.is_out(2 * e) ? 2 * e : 2 * e + 1;
    if (!W.is_out(d)) continue;
    nxt[W.color[e]][M.org[d]] = M.head(d);
  }
  std::vector<int> endv[3] = {std::vector<int>(nv, -1), std::vector<int>(nv, -1), std::vector<int>(nv, -1)};
  auto path_end = [&](int v, int c) {
    std::vector<int> stack;
    int w = v;
    while (endv[c][w] < 0 && nxt[c][w] >= 0) {
      if (static_cast<int>(stack.size()) > nv) throw Error(Errc::BudgetExhausted, "monochromatic cycle");
      stack.push_back(w);
      w = nxt[c][w];
    }
    int e = endv[c][w] >= 0 ? endv[c][w] : w;
    endv[c][w] = e;
    for (int y : stack) endv[c][y] = e;
    return e;
  };
  auto judge = [&](bool good, int end, const std::string& what) {
    ++R.checks;
    if (good) return;
    if (opaque[end]) ++R.deferred;
    else R.fail(what);
  };

  ++R.checks;
  int rd = root_dart();
  if (rd < 0 || W.color_of(rd) != kYellow || !W.is_out(rd)) R.fail("root edge is not an outgoing yellow edge of the tail");

  for (int v = 0; v < nv; ++v) {
    if (inc[v] & (1 << kRed)) {
      int e = path_end(v, kRed);
      judge(e == bx, e, "red path from " + std::to_string(v) + " ends at " + std::to_string(e));
    }
    if (inc[v] & (1 << kYellow)) {
      int e = path_end(v, kYellow);
      judge(e == bx1 || e == cor || leftset.count(e), e,
            "yellow path from " + std::to_string(v) + " ends at " + std::to_string(e));
    }
    if (inc[v] & (1 << kBlue)) {
      int e = path_end(v, kBlue);
      judge(base.contains(e), e, "blue path from " + std::to_string(v) + " ends off the base line");
    }
  }
  for (size_t j = 1; j < tails.size(); ++j) {
    ++R.checks;
    int d = out_dart(M, W, tails[j], kRed);
    if (d < 0 || M.head(d) != tails[j - 1]) R.fail("tail " + std::to_string(j) + " has no red edge to the previous tail");
  }
  {
    auto p = path_from(M, W, hd, kYellow);
    size_t want = heads.size();   // match heads from the back (current head) to h_0
    for (int v : p)
      while (want > 0 && v == heads[want - 1]) --want;
    judge(want == 0, p.back(), "yellow path from the head misses earlier heads");
  }
  auto chain = blue_chain();
  std::unordered_set<int> chainset(chain.begin(), chain.end());
  for (size_t l = 0; l + 1 < chain.size(); ++l) {
    ++R.checks;
    int d = out_dart(M, W, chain[l + 1], kBlue);
    if (d < 0 || M.head(d) != chain[l]) R.fail("peeling chain is not joined by a blue edge");
  }
  if (!chain.empty()) {
    ++R.checks;
    if (!base.contains(chain[0])) R.fail("first chain vertex is off the base line");
  }
  for (size_t idx = 0; idx < left.size(); ++idx) {
    int u = left[idx];
    int ln = idx > 0 ? left[idx - 1] : cor;
    int rn = idx + 1 < left.size() ? left[idx + 1] : tail;
    int start = M.find_dart(u, ln), stop = M.find_dart(u, rn);
    ++R.checks;
    if (start < 0 || stop < 0) {
      R.fail("upper boundary vertex " + std::to_string(u) + " lost a boundary edge");
      continue;
    }
    std::string word;
    for (int d = start;; d = M.rot[d]) {
      int c = W.color_of(d);
      if (c >= 0 && W.oriented(d)) {
        char ch = "RYB"[c];
        word.push_back(W.is_out(d) ? ch : static_cast<char>(ch - 'A' + 'a'));
      }
      if (d == stop) break;
    }
    bool good = !word.empty() && word[0] == 'B' && word.find_first_not_of('y', 1) == std::string::npos;
    if (!good) {
      if (opaque[u]) ++R.deferred;
      else R.fail("upper boundary word at " + std::to_string(u) + " is " + word);
    }
    ++R.checks;
    int d = out_dart(M, W, u, kBlue);
    if (d < 0 || !chainset.count(M.head(d))) {
      if (opaque[u]) ++R.deferred;
      else R.fail("upper boundary vertex " + std::to_string(u) + " has no blue edge into the peeling chain");
    }
  }
  if (cor != tail) {
    ++R.checks;
    for (int d : M.darts_ccw(cor)) {
      int c = W.color_of(d);
      if (c >= 0 && (c != kYellow || W.is_out(d))) {
        R.fail("corner has an edge other than an incoming yellow one");
        break;
      }
    }
  }
  return R;
}

SegmentReport run_segment(LazyHalfPlane& H, long long x, const SegmentRunConfig& cfg) {
  SegmentProcess P(H, BaseBoundary::initial(H), x);
  SegmentReport rep;
  long long xi_sum = 0;
  while (P.nsteps() < cfg.budget) {
    if (cfg.target_hi >= 0 && P.hi >= cfg.target_hi) break;
    const auto& r = P.step();
    xi_sum += r.xi;
    rep.lefts += r.side == Side::Left;
    if (cfg.check_every > 0 && P.nsteps() % cfg.check_every == 0) rep.structure.merge(P.check_structure());
  }
  if (cfg.target_hi >= 0 && P.hi < cfg.target_hi) rep.budget_exhausted = true;
  if (cfg.check_every == 0 || (cfg.check_every > 0 && P.nsteps() % cfg.check_every != 0))
    rep.structure.merge(P.check_structure());
  rep.structure.merge(P.incremental);
  rep.steps = P.nsteps();
  rep.mean_xi = rep.steps ? static_cast<double>(xi_sum) / rep.steps : 0.0;
  rep.leftward_coverage = P.leftward_coverage();
  rep.cov_lo = P.cov_lo;
  rep.cov_hi = P.any_covered ? P.cov_hi : P.cov_lo - 1;
  rep.history = std::move(P.history);
  return rep;
}

namespace {

// exact marginals of (side, m_s) for m_s < kExact, as doubles
struct OracleTables {
  static constexpr int kExact = 64;
  std::vector<double> left, right;
  long double c_last;   // C_kExact / 4^kExact
  OracleTables() {
    for (int m = 0; m < kExact; ++m) {
      Rational l = 0, r = 0;
      l = Rational(3, 4) * q_prob(m + 1);
      for (int k = 0; k <= m; ++k) r += step_probability(Side::Right, k, m);
      left.push_back(l.convert_to<double>());
      right.push_back(r.convert_to<double>());
    }
    c_last = catalan_over_4pow(kExact).convert_to<long double>();
  }
};

const OracleTables& oracle_tables() {
  static const OracleTables t;
  return t;
}

}  // namespace

long long coverage_oracle(Rng& rng, int steps) {
  const auto& T = oracle_tables();
  long long A = 0, zl = -1, hi = 1;
  std::optional<long long> tail_pos = 0;
  bool any = false;
  long long lo = 0;
  auto cover = [&](long long p) {
    if (!any || p < lo) lo = p;
    any = true;
  };
  for (int it = 0; it < steps; ++it) {
    const double U = rng.uniform();
    long double acc = 0;
    bool is_left = false;
    long long m = 0;
    long double c = T.c_last;   // C_m / 4^m once m >= kExact
    for (;; ++m) {
      long double pl, pr;
      if (m < OracleTables::kExact) {
        pl = T.left[m];
        pr = T.right[m];
      } else {
        // q_{m+1} = c_m - c_{m+1} = c_m * 3 / (2m + 4)
        long double q = c * 3.0L / (2.0L * m + 4.0L);
        pl = 0.75L * q;
        pr = 0.75L * q * (1.0L - std::pow(0.75L, static_cast<long double>(m + 1)));
        c -= q;
      }
      acc += pl;
      if (acc >= U) {
        is_left = true;
        break;
      }
      acc += pr;
      if (acc >= U) break;
      if (m > 100'000'000) throw Error(Errc::TooLarge, "oracle step draw ran away");
    }
    // k given the side: geometric (3/4)^k, truncated at m for right steps
    long long k = 0;
    {
      const double V = rng.uniform();
      long double norm = is_left ? 1.0L : 1.0L - std::pow(0.75L, static_cast<long double>(m + 1));
      long double cum = 0, w = 0.25L / norm;
      for (k = 0;; ++k) {
        cum += w;
        if (cum >= V || (!is_left && k == m)) break;
        w *= 0.75L;
      }
    }
    if (is_left) {
      const long long j = m + 1;
      if (j <= A - 1) {
        A = A - j + k;
      } else {
        const long long z = zl - (j - A);
        for (long long p = zl; p > z; --p) cover(p);
        A = k;
        zl = z;
      }
    } else {
      const long long h = hi + (m + 2 - k) - 2;
      if (tail_pos) cover(*tail_pos);
      for (long long p = hi; p < h; ++p) cover(p);
      if (A > 0) {
        --A;
        tail_pos.reset();
      } else {
        tail_pos = zl;
        --zl;
      }
      hi = h;
    }
  }
  return any ? std::max(0LL, -lo) : 0;
}

}  // namespace sw
