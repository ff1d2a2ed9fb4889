#ifndef LOGITLAB_RNG_HPP
#define LOGITLAB_RNG_HPP

#include <cstdint>
#include <span>

namespace logitlab {

// Counter-based generator: output t of stream (seed, stream) is a pure
// function of (seed, stream, t), so runs are reproducible across platforms
// and independent streams can be split off without coordination.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(stream ^ mix(seed))), counter_(0) {}

  // Derive an independent stream of the same seed material.
  SplitRng split(std::uint64_t stream) const { return SplitRng(key_, stream + 1); }

  std::uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) {
    // Desk-scale n: the modulo bias (< n / 2^64) is far below any tolerance here.
    return next_u64() % n;
  }

  // Sample an index from an unnormalized nonnegative weight vector.
  std::size_t sample(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double r = next_unit() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      acc += weights[i];
      if (r < acc) return i;
    }
    return weights.size() - 1;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;
  std::uint64_t counter_;
};

}  // namespace logitlab

#endif  // LOGITLAB_RNG_HPP
