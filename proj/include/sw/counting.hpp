#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace sw {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using HighFloat = boost::multiprecision::cpp_dec_float_50;

enum class Side { Left, Right };
const char* side_name(Side s);

BigInt factorial(int k);
BigInt catalan(int x);
BigInt count_triangulations(int m, int n);
// log of count_triangulations, -inf when the count is 0; valid for m >= 0
long double log_count(int m, int n);

std::string rat_str(const Rational& r);
Rational pow_rat(const Rational& x, int e);

const Rational& alpha();      // 256/27
const Rational& alpha_inv();  // 27/256

// Z_m(t) = sum_n phi_{m,n} t^n
struct PartitionValue {
  bool exact = false;
  Rational value;        // valid when exact
  HighFloat lo, hi;      // always valid
  Rational theta;        // valid when exact
};
PartitionValue partition_function(int m, const Rational& t);
Rational partition_critical(int m);                  // Z_m(27/256)
Rational free_size_probability(int m, int n);        // phi_{m,n} alpha^{-n} / Z_m

struct Bracket {
  Rational lo, hi;
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational width() const { return hi - lo; }
};

// partial sum over n <= N plus a rigorous tail bound
Bracket free_weight_bracket(int m, int N);

Rational step_probability(Side s, int k, int ms);
Rational q_prob(int j);   // law of J >= 1
Rational r_prob(int k);   // law of K >= 0
Rational catalan_over_4pow(int j);  // C_j / 4^j, the survival function of J

struct NormalizationReport {
  int K = 0, M = 0;
  Rational left_partial, right_partial;
  Bracket left, right, total;
};
NormalizationReport normalization_bracket(int K, int M);

struct CoverageLaw {
  std::vector<Rational> q;   // q[j], q[0] unused (= 0)
  std::vector<Rational> r;   // r[k]
  Bracket q_sum, r_sum;
  Rational EJ, EK, Exi, p_left, p_right;
};
CoverageLaw coverage_walk_law(int jmax = 60, int kmax = 60);

HighFloat asymptotic_constant(int m);   // C_m prefactor
HighFloat asymptotic_ratio(int m, int n);

}  // namespace sw
