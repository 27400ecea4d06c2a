#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

namespace sw {

struct ChiSquare {
  double stat = 0;
  int dof = 0;
  double p = 1;
};
// Pearson goodness of fit; expected are probabilities (renormalised), cells with
// expectation below min_expected are pooled into their neighbour.
ChiSquare chi_square(const std::vector<long long>& observed, const std::vector<double>& expected,
                     double min_expected = 5.0);

struct KolmogorovSmirnov {
  double d = 0;
  double p = 1;
};
// two-sample test; p from the asymptotic Kolmogorov distribution
KolmogorovSmirnov ks_two_sample(std::vector<double> a, std::vector<double> b);
// P(K > lambda) for the Kolmogorov distribution
double kolmogorov_sf(double lambda);

// total variation between two empirical distributions over arbitrary keys
template <class K>
double tv_distance(const std::map<K, long long>& a, const std::map<K, long long>& b) {
  long long na = 0, nb = 0;
  for (auto& [k, c] : a) na += c;
  for (auto& [k, c] : b) nb += c;
  if (na == 0 || nb == 0) return na == nb ? 0.0 : 1.0;
  double s = 0;
  for (auto& [k, c] : a) {
    auto it = b.find(k);
    double q = it == b.end() ? 0.0 : static_cast<double>(it->second) / nb;
    s += std::abs(static_cast<double>(c) / na - q);
  }
  for (auto& [k, c] : b)
    if (!a.count(k)) s += static_cast<double>(c) / nb;
  return s / 2;
}

struct MeanSd {
  double mean = 0, sd = 0;
  long long n = 0;
};
MeanSd mean_sd(const std::vector<double>& x);

}  // namespace sw
