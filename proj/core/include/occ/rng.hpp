#pragma once

#include <cstdint>

namespace occ {

// Counter-based generator: every draw is a pure function of (seed, index,
// stream), so sample streams can be partitioned by index across threads and
// still reproduce bit-identical aggregates. The mixing function is
// splitmix64.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t bits(std::uint64_t index, std::uint64_t stream = 0) const {
    std::uint64_t z = seed_ + 0x9E3779B97F4A7C15ULL * (index + 1) +
                      0xBF58476D1CE4E5B9ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform draw in the open interval (0, 1); both endpoints excluded so the
  // value is safe to pass through a quantile function.
  double uniform01(std::uint64_t index, std::uint64_t stream = 0) const {
    const std::uint64_t u = bits(index, stream) >> 11;  // 53 bits
    return (static_cast<double>(u) + 0.5) * 0x1.0p-53;
  }

 private:
  std::uint64_t seed_;
};

}  // namespace occ
