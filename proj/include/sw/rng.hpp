#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace sw {

// Splittable counter-based stream. A stream is a 64-bit key; draw i is
// mix(key + (i+1)*gamma). Children are derived by hashing the key with the
// child index, so (seed, path) always names the same stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : key_(mix(seed ^ 0x5851F42D4C957F2DULL)) {}

  static Rng from_key(std::uint64_t key) {
    Rng r;
    r.key_ = key;
    return r;
  }

  Rng split(std::uint64_t child) const {
    return from_key(mix(key_ ^ mix(child + 0x632BE59BD9B4E019ULL)));
  }
  Rng split(std::string_view tag) const { return split(hash_tag(tag)); }
  Rng split(std::initializer_list<std::uint64_t> path) const {
    Rng r = *this;
    for (auto c : path) r = r.split(c);
    return r;
  }

  std::uint64_t next() {
    ++ctr_;
    return mix(key_ + ctr_ * 0x9E3779B97F4A7C15ULL);
  }

  // uniform in [0,1) with 53 random bits
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // uniform in (0,1]
  double uniform_pos() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }
  // uniform integer in [0, n), n > 0; Lemire's rejection keeps it unbiased
  std::uint64_t below(std::uint64_t n);

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return ctr_; }

  // UniformRandomBitGenerator interface
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type(0); }
  result_type operator()() { return next(); }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  static std::uint64_t hash_tag(std::string_view s);

 private:
  std::uint64_t key_ = 0;
  std::uint64_t ctr_ = 0;
};

}  // namespace sw
