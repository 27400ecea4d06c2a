#include "sw/counting.hpp"

#include <boost/math/constants/constants.hpp>
#include <cmath>
#include <limits>
#include <mutex>

#include "sw/errors.hpp"

namespace sw {

const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

BigInt factorial(int k) {
  static std::mutex mu;
  static std::vector<BigInt> memo{1};
  if (k < 0) throw Error(Errc::OutOfRange, "negative factorial");
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(memo.size()) <= k) memo.push_back(memo.back() * static_cast<int>(memo.size()));
  return memo[k];
}

BigInt catalan(int x) {
  if (x < 0) throw Error(Errc::OutOfRange, "negative Catalan index");
  return factorial(2 * x) / (factorial(x) * factorial(x + 1));
}

BigInt count_triangulations(int m, int n) {
  if (m < 1) throw Error(Errc::InvalidM, "m must be at least 1");
  if (n < 0) throw Error(Errc::OutOfRange, "n must be nonnegative");
  BigInt num = 2 * factorial(2 * m + 1) * factorial(4 * n + 2 * m - 1);
  BigInt den = factorial(m - 1) * factorial(m + 1) * factorial(n) * factorial(3 * n + 2 * m + 1);
  return num / den;
}

long double log_count(int m, int n) {
  if (m == 0) return n == 0 ? 0.0L : -std::numeric_limits<long double>::infinity();
  auto lf = [](int k) { return std::lgamma(static_cast<long double>(k) + 1.0L); };
  return std::log(2.0L) + lf(2 * m + 1) + lf(4 * n + 2 * m - 1) - lf(m - 1) - lf(m + 1) - lf(n) -
         lf(3 * n + 2 * m + 1);
}

std::string rat_str(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational pow_rat(const Rational& x, int e) {
  if (e < 0) return Rational(1) / pow_rat(x, -e);
  Rational r(1), b(x);
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

const Rational& alpha() {
  static const Rational a(256, 27);
  return a;
}
const Rational& alpha_inv() {
  static const Rational a(27, 256);
  return a;
}

namespace {

Rational theta_poly(const Rational& th) { return th * pow_rat(1 - th, 3); }

// closed form in theta; the prefactor uses (1-4θ)m + 2 - 2θ
Rational z_closed(int m, const Rational& th) {
  Rational pre(factorial(2 * m), factorial(m) * factorial(m + 2));
  return pre * ((1 - 4 * th) * m + 2 - 2 * th) * pow_rat(1 - th, -(2 * m + 1));
}

HighFloat z_closed_f(int m, const HighFloat& th) {
  HighFloat pre = HighFloat(factorial(2 * m)) / HighFloat(factorial(m) * factorial(m + 2));
  return pre * ((1 - 4 * th) * m + 2 - 2 * th) * pow(1 - th, -(2 * m + 1));
}

// best rational approximations of x by continued fractions, denominators <= dmax
std::vector<Rational> convergents(const HighFloat& x, const BigInt& dmax) {
  std::vector<Rational> out;
  BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  HighFloat y = x;
  for (int it = 0; it < 80; ++it) {
    HighFloat fl = floor(y);
    BigInt a = fl.convert_to<BigInt>();
    BigInt h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > dmax) break;
    out.emplace_back(h2, k2);
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    HighFloat frac = y - fl;
    if (frac < HighFloat("1e-40")) break;
    y = 1 / frac;
  }
  return out;
}

}  // namespace

PartitionValue partition_function(int m, const Rational& t) {
  if (m < 0) throw Error(Errc::InvalidM, "m must be nonnegative");
  if (t <= 0 || t > alpha_inv()) throw Error(Errc::OutOfRange, "t must lie in (0, 27/256]");
  PartitionValue pv;
  if (t == alpha_inv()) {
    pv.exact = true;
    pv.theta = Rational(1, 4);
    pv.value = partition_critical(m);
    pv.lo = pv.hi = HighFloat(numerator(pv.value)) / HighFloat(denominator(pv.value));
    return pv;
  }
  // θ(1-θ)^3 is increasing on [0, 1/4]; bisect in high precision
  HighFloat tf = HighFloat(numerator(t)) / HighFloat(denominator(t));
  HighFloat a = 0, b = HighFloat(1) / 4;
  for (int it = 0; it < 170; ++it) {
    HighFloat mid = (a + b) / 2;
    if (mid * pow(1 - mid, 3) < tf) a = mid;
    else b = mid;
  }
  for (auto& c : convergents(a, BigInt("1000000000000"))) {
    if (c > 0 && c <= Rational(1, 4) && theta_poly(c) == t) {
      pv.exact = true;
      pv.theta = c;
      pv.value = z_closed(m, c);
      pv.lo = pv.hi = HighFloat(numerator(pv.value)) / HighFloat(denominator(pv.value));
      return pv;
    }
  }
  // Z is increasing in θ on this branch, so the θ bracket maps to a value bracket
  pv.lo = z_closed_f(m, a);
  pv.hi = z_closed_f(m, b);
  if (pv.lo > pv.hi) std::swap(pv.lo, pv.hi);
  return pv;
}

Rational partition_critical(int m) {
  if (m < 0) throw Error(Errc::InvalidM, "m must be nonnegative");
  return Rational(2 * factorial(2 * m), factorial(m) * factorial(m + 2)) * pow_rat(Rational(16, 9), m);
}

Rational free_size_probability(int m, int n) {
  if (m < 1) throw Error(Errc::InvalidM, "m must be at least 1");
  if (n < 0) return 0;
  return Rational(count_triangulations(m, n)) * pow_rat(alpha_inv(), n) / partition_critical(m);
}

Bracket free_weight_bracket(int m, int N) {
  if (m < 1) throw Error(Errc::InvalidM, "m must be at least 1");
  if (N < 2) throw Error(Errc::OutOfRange, "need N >= 2");
  // t_n = phi_{m,n} alpha^{-n}. For n >= N the ratio t_{n+1}/t_n is at most (n/(n+1))^2 when
  //   256 n^2 (n+1)(3n+2m+4)(3n+2m+3)(3n+2m+2) - 27 (n+1)^2 prod_{i=0..3}(4n+2m+i) >= 0,
  // which is checked by expanding around n = N + s and requiring nonnegative coefficients in s.
  // Then sum_{n>N} t_n <= t_N sum_{n>N} N^2/n^2 <= t_N N.
  using Poly = std::vector<BigInt>;  // coefficients in s, n = N + s
  auto mul = [](const Poly& p, const Poly& q) {
    Poly r(p.size() + q.size() - 1, BigInt(0));
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
  };
  auto lin = [&](int a, int c) { return Poly{BigInt(a) * N + c, BigInt(a)}; };  // a n + c
  Poly rhs{BigInt(256)};
  for (auto p : {lin(1, 0), lin(1, 0), lin(1, 1), lin(3, 2 * m + 4), lin(3, 2 * m + 3), lin(3, 2 * m + 2)})
    rhs = mul(rhs, p);
  Poly lhs{BigInt(27)};
  for (auto p : {lin(1, 1), lin(1, 1), lin(4, 2 * m), lin(4, 2 * m + 1), lin(4, 2 * m + 2), lin(4, 2 * m + 3)})
    lhs = mul(lhs, p);
  bool ok = true;
  for (size_t i = 0; i < rhs.size(); ++i)
    if (rhs[i] - lhs[i] < 0) ok = false;
  if (!ok) throw Error(Errc::OutOfRange, "tail bound needs a larger N");

  Rational z = partition_critical(m);
  Rational partial = 0, tn = 0;
  for (int n = 0; n <= N; ++n) {
    tn = Rational(count_triangulations(m, n)) * pow_rat(alpha_inv(), n);
    partial += tn;
  }
  Bracket b;
  b.lo = partial / z;
  b.hi = (partial + tn * N) / z;
  return b;
}

Rational catalan_over_4pow(int j) {
  return Rational(catalan(j), BigInt(1) << (2 * j));
}

Rational q_prob(int j) {
  if (j < 1) return 0;
  // 4^{-j} (4 C_{j-1} - C_j)
  return Rational(4 * catalan(j - 1) - catalan(j), BigInt(1) << (2 * j));
}

Rational r_prob(int k) {
  if (k < 0) return 0;
  return Rational(1, 4) * pow_rat(Rational(3, 4), k);
}

Rational step_probability(Side s, int k, int ms) {
  if (k < 0 || ms < 0) throw Error(Errc::OutOfRange, "k and m_s must be nonnegative");
  if (s == Side::Right && ms < k) throw Error(Errc::Infeasible, "right step needs m_s >= k");
  Rational a(4 * catalan(ms) - catalan(ms + 1), BigInt(1) << (2 * ms));
  return Rational(3, 64) * a * pow_rat(Rational(3, 4), k);
}

NormalizationReport normalization_bracket(int K, int M) {
  // a_m = 4^{-m}(4C_m - C_{m+1}) = 4(c_m - c_{m+1}) with c_m = C_m/4^m decreasing to 0,
  // so sum_{m>M} a_m = 4 c_{M+1} exactly; sum_m a_m = 4; geometric sums in k are exact.
  NormalizationReport rep;
  rep.K = K;
  rep.M = M;
  const Rational x(3, 4);
  Rational lp = 0, rp = 0;
  for (int k = 0; k <= K; ++k)
    for (int m = 0; m <= M; ++m) {
      lp += step_probability(Side::Left, k, m);
      if (m >= k) rp += step_probability(Side::Right, k, m);
    }
  rep.left_partial = lp;
  rep.right_partial = rp;
  const Rational c_next = catalan_over_4pow(M + 1);
  // left tail: cells with m > M (any k) plus cells with m <= M, k > K
  Rational sum_a_upto_M = 4 * (1 - c_next);
  Rational left_tail = Rational(3, 64) * (4 * c_next * 4 + sum_a_upto_M * 4 * pow_rat(x, K + 1));
  rep.left.lo = rep.left.hi = lp + left_tail;
  // right tail: cells with m > M (k <= m), assuming K >= M so no m <= M cell is cut off.
  //   (3/64) sum_{m>M} a_m 4 (1 - x^{m+1}) = (3/16)(4 c_{M+1} - S),  S = sum_{m>M} a_m x^{m+1}.
  // S is summed exactly for L terms; the rest is bounded by a_{M+L+1} x^{M+L+2}/(1-x) since a_m decreases.
  Rational right_tail_lo, right_tail_hi;
  {
    const int L = 40;
    Rational s = 0;
    for (int m = M + 1; m <= M + L; ++m) s += 4 * (catalan_over_4pow(m) - catalan_over_4pow(m + 1)) * pow_rat(x, m + 1);
    int mm = M + L + 1;
    Rational a_next = 4 * (catalan_over_4pow(mm) - catalan_over_4pow(mm + 1));
    Rational s_rest_hi = a_next * pow_rat(x, mm + 1) * 4;
    right_tail_hi = Rational(3, 16) * (4 * c_next - s);
    right_tail_lo = Rational(3, 16) * (4 * c_next - s - s_rest_hi);
    if (K < M) {
      // cells m <= M with K < k <= m are outside the box: bound them by their exact sum
      Rational extra = 0;
      for (int m = K + 1; m <= M; ++m)
        for (int k = K + 1; k <= m; ++k) extra += step_probability(Side::Right, k, m);
      right_tail_lo += extra;
      right_tail_hi += extra;
    }
  }
  rep.right.lo = rp + right_tail_lo;
  rep.right.hi = rp + right_tail_hi;
  rep.total.lo = rep.left.lo + rep.right.lo;
  rep.total.hi = rep.left.hi + rep.right.hi;
  return rep;
}

CoverageLaw coverage_walk_law(int jmax, int kmax) {
  CoverageLaw law;
  law.q.assign(jmax + 1, Rational(0));
  Rational qs = 0;
  for (int j = 1; j <= jmax; ++j) {
    law.q[j] = q_prob(j);
    qs += law.q[j];
  }
  // tail: sum_{j > jmax} q_j = c_{jmax} (telescoping)
  law.q_sum.lo = law.q_sum.hi = qs + catalan_over_4pow(jmax);
  Rational rs = 0;
  for (int k = 0; k <= kmax; ++k) {
    law.r.push_back(r_prob(k));
    rs += law.r.back();
  }
  law.r_sum.lo = law.r_sum.hi = rs + pow_rat(Rational(3, 4), kmax + 1);
  // E[J] = sum_{j>=0} P(J > j) = sum_j c_j = c(1/4) with c(x) = (1 - sqrt(1-4x))/(2x); sqrt(0) = 0
  const Rational x4(1, 4);
  law.EJ = (1 - Rational(0)) / (2 * x4);
  // E[K] for P(K = k) = (1/4)(3/4)^k is (3/4)/(1/4)
  law.EK = Rational(3, 4) / Rational(1, 4);
  law.p_left = Rational(3, 4);
  law.p_right = Rational(1, 4);
  law.Exi = law.p_left * (law.EK - law.EJ) - law.p_right;
  return law;
}

HighFloat asymptotic_constant(int m) {
  if (m < 1) throw Error(Errc::InvalidM, "m must be at least 1");
  const HighFloat pi = boost::math::constants::pi<HighFloat>();
  HighFloat num = 2 * HighFloat(factorial(2 * m + 1));
  HighFloat den = 6 * sqrt(6 * pi) * HighFloat(factorial(m - 1) * factorial(m + 1));
  return num / den * pow(HighFloat(16) / 9, m);
}

HighFloat asymptotic_ratio(int m, int n) {
  if (m < 1 || n < 1) throw Error(Errc::OutOfRange, "need m >= 1 and n >= 1");
  HighFloat phi(count_triangulations(m, n));
  HighFloat a = HighFloat(256) / 27;
  return phi / (asymptotic_constant(m) * pow(a, n) * pow(HighFloat(n), HighFloat(-2.5)));
}

}  // namespace sw
