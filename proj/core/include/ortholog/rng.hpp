#pragma once

#include <cstdint>
#include <random>

namespace ortholog {

// Seeded generator with a platform-independent bounded draw, so sampled
// verification runs are reproducible from the recorded seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = gen_();
      if (r >= threshold) return r % n;
    }
  }

  bool coin() { return (gen_() >> 63) != 0; }

  std::uint64_t next() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace ortholog
