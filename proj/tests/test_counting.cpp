#include <doctest.h>

#include "sw/counting.hpp"
#include "sw/errors.hpp"
#include "sw/planar_map.hpp"

using namespace sw;

TEST_CASE("catalan") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(10) == 16796);
  // recurrence C_{n+1} = sum C_i C_{n-i}
  for (int n = 0; n < 25; ++n) {
    BigInt s = 0;
    for (int i = 0; i <= n; ++i) s += catalan(i) * catalan(n - i);
    CHECK(s == catalan(n + 1));
  }
}

TEST_CASE("counts against enumeration") {
  CHECK(count_triangulations(1, 0) == 1);
  CHECK(count_triangulations(1, 1) == 1);
  CHECK(count_triangulations(1, 2) == 3);
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= 2; ++n) CHECK(count_triangulations(m, n) == enumerate_all(m, n).size());
  // polygon triangulations: Catalan
  for (int m = 1; m < 12; ++m) CHECK(count_triangulations(m, 0) == catalan(m));
  CHECK_THROWS_AS(count_triangulations(0, 3), Error);
}

TEST_CASE("partition function at criticality") {
  const Rational tc(27, 256);
  CHECK(partition_function(0, tc).value == 1);
  CHECK(partition_function(1, tc).value == Rational(32, 27));
  CHECK(partition_function(2, tc).value == Rational(256, 81));
  // normalised partial sums approach 1 from below; the tail bracket holds 1
  Rational s = 0;
  for (int n = 0; n <= 30; ++n) s += free_size_probability(1, n);
  CHECK(s < 1);
  CHECK(s > Rational(99, 100));
  auto b = free_weight_bracket(1, 30);
  CHECK(b.contains(1));   // normalised weights
  CHECK(free_size_probability(1, 0) == Rational(27, 32));
}

TEST_CASE("step law") {
  CHECK(step_probability(Side::Left, 0, 0) == Rational(9, 64));
  CHECK_THROWS_AS(step_probability(Side::Right, 2, 1), Error);
  auto N = normalization_bracket(60, 60);
  CHECK(N.left.contains(Rational(3, 4)));
  CHECK(N.right.contains(Rational(1, 4)));
  CHECK(N.total.contains(Rational(1)));
  CHECK(N.total.width() < Rational(1, 1'000'000'000'000LL));
}

TEST_CASE("coverage walk law") {
  CHECK(q_prob(1) == Rational(3, 4));
  CHECK(r_prob(0) == Rational(1, 4));
  auto L = coverage_walk_law(60, 60);
  CHECK(L.Exi == Rational(1, 2));
  CHECK(L.p_left == Rational(3, 4));
  CHECK(L.q_sum.contains(1));
  CHECK(L.r_sum.contains(1));
}

TEST_CASE("asymptotics") {
  auto r20 = asymptotic_ratio(1, 20), r2000 = asymptotic_ratio(1, 2000);
  CHECK(r20 > 0);
  CHECK(abs(r2000 - 1) < abs(r20 - 1));
  auto r = asymptotic_ratio(2, 5000);
  CHECK(r > HighFloat("0.9"));
  CHECK(r < HighFloat("1.1"));
  CHECK(asymptotic_ratio(1, 1) > 0);
}

TEST_CASE("log count") {
  for (int n : {5, 50, 300}) {
    long double exact = log(HighFloat(count_triangulations(2, n))).convert_to<long double>();
    CHECK(std::abs(static_cast<double>(log_count(2, n) - exact)) < 1e-9 * static_cast<double>(exact));
  }
}
