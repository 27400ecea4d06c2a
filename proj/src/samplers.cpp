#include "sw/samplers.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "sw/errors.hpp"

namespace sw {

namespace {

constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();

// log phi_{m,n} from a log-factorial table
struct LogPhi {
  std::vector<long double> lf{0.0L};
  void reserve(int k) {
    while (static_cast<int>(lf.size()) <= k) {
      long double i = static_cast<long double>(lf.size());
      lf.push_back(lf.back() + std::log(i));
    }
  }
  long double operator()(int m, int n) {
    if (m == 0) return n == 0 ? 0.0L : kNegInf;
    reserve(4 * n + 2 * m + 2);
    return std::log(2.0L) + lf[2 * m + 1] + lf[4 * n + 2 * m - 1] - lf[m - 1] - lf[m + 1] - lf[n] -
           lf[3 * n + 2 * m + 1];
  }
};

struct Region {
  std::vector<int> cyc;   // w_0 .. w_{M+1}, root w_1 -> w_2
  int N;
};

struct Split {
  int c = -1, k = 0, nl = 0;
};

// Choose (c, k, n_l) with probability proportional to the number of completions.
// Cells are visited in order of the size of the smaller side plus k, so the
// usual draw stops after a handful of cells.
Split choose_split(LogPhi& L, int M, int N, double U) {
  const int S = M + N - 1;
  const long double base = L(M, N);
  long double acc = 0;
  Split last;
  auto visit = [&](int c, int k, int nl) {
    long double lw = L(M - c + 1, nl) + L(c + k - 2, N - k - nl) - base;
    if (lw == kNegInf) return false;
    acc += std::exp(lw);
    last = {c, k, nl};
    return acc >= U;
  };
  for (int pass = 0; pass < 2; ++pass) {
    acc = 0;
    for (int t = 0; t <= S + N; ++t) {
      for (int k = 0; k <= std::min(t, N); ++k) {
        int s = t - k;
        if (2 * s <= S) {
          for (int c = std::max(2, M + 1 - s); c <= M + 1; ++c) {
            int nl = s - (M - c + 1);
            if (nl > N - k) continue;
            if (visit(c, k, nl)) return last;
          }
        }
        if (2 * s < S) {
          for (int c = std::max(2, s + 2 - N); c <= std::min(M + 1, s + 2 - k); ++c) {
            if (visit(c, k, c - 2 + N - s)) return last;
          }
        }
      }
    }
    if (last.c < 0) break;
    // rounding left the total a hair under 1
    U *= static_cast<double>(acc);
  }
  if (last.c < 0) throw Error(Errc::Empty, "no triangulation with these parameters");
  return last;
}

}  // namespace

Triangulation sample_uniform(int m, int n, Rng& rng) {
  if (m < 1 || n < 0) throw Error(Errc::Empty, "sample_uniform needs m >= 1, n >= 0");
  LogPhi L;
  L.reserve(4 * (m + n) + 4);
  std::vector<Face> faces;
  faces.reserve(2 * n + m);
  int next_id = m + 2;
  std::vector<Region> stack;
  Region top;
  top.cyc.resize(m + 2);
  std::iota(top.cyc.begin(), top.cyc.end(), 0);
  top.N = n;
  stack.push_back(std::move(top));
  while (!stack.empty()) {
    Region R = std::move(stack.back());
    stack.pop_back();
    const auto& w = R.cyc;
    const int M = static_cast<int>(w.size()) - 2;
    Split sp = choose_split(L, M, R.N, rng.uniform_pos());
    const int c = sp.c, k = sp.k;
    std::vector<int> u(k + 2);
    u[0] = w[1];
    for (int i = 1; i <= k; ++i) u[i] = next_id++;
    u[k + 1] = w[c];
    for (int i = 0; i <= k; ++i) faces.push_back({w[0], u[i], u[i + 1]});

    Region Tr;
    if (k >= 1) {
      Tr.cyc.push_back(u[1]);
      for (int i = 1; i <= c; ++i) Tr.cyc.push_back(w[i]);
      for (int i = k; i >= 2; --i) Tr.cyc.push_back(u[i]);
    } else {
      Tr.cyc.push_back(w[c]);
      for (int i = 1; i < c; ++i) Tr.cyc.push_back(w[i]);
    }
    Tr.N = R.N - k - sp.nl;
    Region Tl;
    Tl.cyc = {w[M + 1], w[0]};
    for (int i = c; i <= M; ++i) Tl.cyc.push_back(w[i]);
    Tl.N = sp.nl;
    // right region is pushed first so the left one is decomposed first
    if (Tr.cyc.size() > 2) stack.push_back(std::move(Tr));
    if (Tl.cyc.size() > 2) stack.push_back(std::move(Tl));
  }
  std::vector<int> boundary(m + 2);
  std::iota(boundary.begin(), boundary.end(), 0);
  return build_from_faces(faces, boundary, {1, 2});
}

Triangulation sample_uniform(int m, int n, std::uint64_t seed) {
  Rng r(seed);
  return sample_uniform(m, n, r);
}

int sample_free_size(int m, Rng& rng, int max_n) {
  if (m < 1) throw Error(Errc::InvalidM, "sample_free needs m >= 1");
  auto lf = [](long double k) { return std::lgamma(k + 1.0L); };
  const long double lz =
      std::log(2.0L) + lf(2.0L * m) - lf(m) - lf(m + 2.0L) + m * std::log(16.0L / 9.0L);
  const long double la = std::log(256.0L / 27.0L);
  double U;
  do U = rng.uniform_pos();
  while (U > 1.0 - 1e-12);
  long double acc = 0;
  for (int n = 0; n <= max_n; ++n) {
    long double lp = std::log(2.0L) + lf(2.0L * m + 1) + lf(4.0L * n + 2 * m - 1) - lf(m - 1.0L) -
                     lf(m + 1.0L) - lf(n) - lf(3.0L * n + 2 * m + 1) - n * la - lz;
    acc += std::exp(lp);
    if (acc >= U) return n;
  }
  throw Error(Errc::TooLarge, "free size draw exceeded max_n");
}

Triangulation sample_free(int m, Rng& rng) {
  int n = sample_free_size(m, rng);
  return sample_uniform(m, n, rng);
}

Triangulation sample_free(int m, std::uint64_t seed) {
  Rng r(seed);
  return sample_free(m, r);
}

long long draw_J(Rng& rng) {
  const double U = rng.uniform_pos();
  long double c = 1.0L;
  for (long long j = 1; j <= 4096; ++j) {
    c *= static_cast<long double>(2 * j - 1) / static_cast<long double>(2 * j + 2);
    if (c < U) return j;
  }
  auto logc = [](long long j) {
    long double x = static_cast<long double>(j);
    return std::lgamma(2 * x + 1) - std::lgamma(x + 1) - std::lgamma(x + 2) - x * std::log(4.0L);
  };
  const long double lu = std::log(static_cast<long double>(U));
  long long lo = 4096, hi = 1LL << 50;   // logc(lo) >= lu > logc(hi)
  while (hi - lo > 1) {
    long long mid = lo + (hi - lo) / 2;
    if (logc(mid) < lu) hi = mid;
    else lo = mid;
  }
  return hi;
}

int draw_K(Rng& rng, long long kmax) {
  const double r = 0.75;
  if (kmax < 0) {
    double U = rng.uniform_pos();
    return static_cast<int>(std::floor(std::log(U) / std::log(r)));
  }
  double U = rng.uniform();
  double tail = std::pow(r, static_cast<double>(kmax + 1));
  long long k = static_cast<long long>(std::floor(std::log1p(-U * (1 - tail)) / std::log(r)));
  return static_cast<int>(std::min(k, kmax));
}

StepDraw draw_step(Rng& rng) {
  StepDraw s;
  long long J;
  if (rng.uniform() < 0.75) {
    s.side = Side::Left;
    J = draw_J(rng);
    s.k = draw_K(rng);
  } else {
    s.side = Side::Right;
    do J = draw_J(rng);
    while (rng.uniform() >= 1.0 - std::pow(0.75, static_cast<double>(J)));
    s.k = draw_K(rng, J - 1);
  }
  if (J > (1LL << 28)) throw Error(Errc::TooLarge, "step enclosed region too large to materialise");
  s.ms = static_cast<int>(J - 1);
  return s;
}

}  // namespace sw
