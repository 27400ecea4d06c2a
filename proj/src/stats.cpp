#include "sw/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>

#include "sw/errors.hpp"

namespace sw {

ChiSquare chi_square(const std::vector<long long>& observed, const std::vector<double>& expected,
                     double min_expected) {
  if (observed.size() != expected.size() || observed.empty()) throw Error(Errc::BadInput, "chi_square size mismatch");
  long long n = 0;
  double tot = 0;
  for (auto o : observed) n += o;
  for (auto e : expected) tot += e;
  std::vector<double> o2, e2;
  double ob = 0, eb = 0;
  for (size_t i = 0; i < observed.size(); ++i) {
    ob += static_cast<double>(observed[i]);
    eb += expected[i] / tot * static_cast<double>(n);
    if (eb >= min_expected) {
      o2.push_back(ob);
      e2.push_back(eb);
      ob = eb = 0;
    }
  }
  if (eb > 0 || ob > 0) {
    if (e2.empty()) {
      o2.push_back(ob);
      e2.push_back(eb);
    } else {
      o2.back() += ob;
      e2.back() += eb;
    }
  }
  ChiSquare r;
  for (size_t i = 0; i < o2.size(); ++i) r.stat += (o2[i] - e2[i]) * (o2[i] - e2[i]) / e2[i];
  r.dof = static_cast<int>(o2.size()) - 1;
  if (r.dof < 1) return r;
  boost::math::chi_squared dist(r.dof);
  r.p = boost::math::cdf(boost::math::complement(dist, r.stat));
  return r;
}

double kolmogorov_sf(double lambda) {
  if (lambda <= 0) return 1.0;
  if (lambda < 0.3) {
    // small-lambda form converges faster: 1 - sqrt(2 pi)/lambda sum exp(-(2k-1)^2 pi^2 / (8 lambda^2))
    const double pi = 3.14159265358979323846;
    double s = 0;
    for (int k = 1; k <= 50; ++k) {
      double t = (2.0 * k - 1) * pi / lambda;
      s += std::exp(-t * t / 8);
    }
    return std::clamp(1.0 - std::sqrt(2 * pi) / lambda * s, 0.0, 1.0);
  }
  double s = 0;
  for (int k = 1; k <= 100; ++k) {
    double t = 2 * std::exp(-2.0 * k * k * lambda * lambda);
    s += (k % 2 ? t : -t);
    if (t < 1e-16) break;
  }
  return std::clamp(s, 0.0, 1.0);
}

KolmogorovSmirnov ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw Error(Errc::BadInput, "ks_two_sample needs two non-empty samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  size_t i = 0, j = 0;
  double d = 0;
  while (i < a.size() && j < b.size()) {
    double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  KolmogorovSmirnov r;
  r.d = d;
  const double ne = na * nb / (na + nb), sq = std::sqrt(ne);
  r.p = kolmogorov_sf((sq + 0.12 + 0.11 / sq) * d);
  return r;
}

MeanSd mean_sd(const std::vector<double>& x) {
  MeanSd r;
  r.n = static_cast<long long>(x.size());
  if (x.empty()) return r;
  double s = 0;
  for (double v : x) s += v;
  r.mean = s / r.n;
  double q = 0;
  for (double v : x) q += (v - r.mean) * (v - r.mean);
  r.sd = r.n > 1 ? std::sqrt(q / (r.n - 1)) : 0.0;
  return r;
}

}  // namespace sw
