#include <doctest.h>

#include <map>

#include "sw/counting.hpp"
#include "sw/samplers.hpp"
#include "sw/stats.hpp"

using namespace sw;

TEST_CASE("rng splits are stable and independent of call order") {
  Rng a(7), b(7);
  CHECK(a.split("x").key() == b.split("x").key());
  CHECK(a.split("x").key() != a.split("y").key());
  CHECK(a.split({1, 2}).key() == a.split(1).split(2).key());
  Rng c = a.split(3);
  for (int i = 0; i < 1000; ++i) CHECK(c.below(7) < 7);
  for (int i = 0; i < 1000; ++i) {
    double u = c.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("uniform sampler support") {
  auto t = sample_uniform(1, 0, 3ULL);
  CHECK(t.nv() == 3);
  auto all21 = enumerate_all(2, 1);
  std::map<std::vector<int>, int> known;
  for (auto& u : all21) known[canonical_code(u)] = 1;
  for (std::uint64_t s = 0; s < 50; ++s) CHECK(known.count(canonical_code(sample_uniform(2, 1, s))) == 1);
}

TEST_CASE("uniform sampler on T_2^1 is uniform") {
  auto all = enumerate_all(1, 2);
  std::map<std::vector<int>, int> idx;
  for (size_t i = 0; i < all.size(); ++i) idx[canonical_code(all[i])] = static_cast<int>(i);
  std::vector<long long> cnt(all.size(), 0);
  for (std::uint64_t s = 1; s <= 30000; ++s) ++cnt[idx.at(canonical_code(sample_uniform(1, 2, s)))];
  auto x = chi_square(cnt, std::vector<double>(all.size(), 1.0));
  CHECK(x.p > 0.01);
}

TEST_CASE("free sampler size law") {
  Rng r(11);
  const int N = 100000;
  std::vector<long long> obs(7, 0);
  for (int i = 0; i < N; ++i) ++obs[std::min(sample_free_size(1, r), 6)];
  std::vector<double> p(7, 0.0);
  double tail = 1;
  for (int n = 0; n < 6; ++n) tail -= (p[n] = free_size_probability(1, n).convert_to<double>());
  p[6] = tail;
  CHECK(chi_square(obs, p).p > 0.01);
  CHECK(to_tri(sample_free(3, 77ULL)) == to_tri(sample_free(3, 77ULL)));
}

TEST_CASE("step draws follow the side and drift law") {
  Rng r = Rng(21).split("steps-test");
  // m_s has infinite variance, so the mean converges slowly; 10^6 draws
  long long left = 0;
  double xi = 0;
  const int N = 1000000;
  for (int i = 0; i < N; ++i) {
    auto s = draw_step(r);
    if (s.side == Side::Left) {
      ++left;
      xi += s.k - (s.ms + 1);
    } else {
      xi -= 1;
    }
  }
  CHECK(std::abs(static_cast<double>(left) / N - 0.75) < 0.01);
  CHECK(std::abs(xi / N - 0.5) < 0.02);
}

TEST_CASE("half-plane ledger is deterministic") {
  LazyHalfPlane H(5);
  int d = H.frontier_dart(H.b(0));
  auto a = H.peel(d);
  auto b = H.peel(d);
  CHECK(a.index == b.index);
  CHECK(a.k == b.k);
  CHECK(a.ms == b.ms);
  CHECK(a.vc == b.vc);
  CHECK(H.ledger().size() == 1);
  LazyHalfPlane G(5);
  auto c = G.peel(G.frontier_dart(G.b(0)));
  CHECK(c.side == a.side);
  CHECK(c.k == a.k);
  CHECK(c.ms == a.ms);
}
