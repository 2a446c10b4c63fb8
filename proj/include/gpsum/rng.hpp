#ifndef GPSUM_RNG_HPP
#define GPSUM_RNG_HPP

#include <cmath>
#include <cstdint>

namespace gpsum {

// Counter-based generator: output i of stream (seed, stream) is
// splitmix64(key + i * GAMMA), key = mix(seed) ^ mix(stream ^ PHI).
// Streams are independent of evaluation order, so parallel sample batches
// reproduce bit-identically regardless of scheduling.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix(seed) ^ mix(stream ^ 0x9e3779b97f4a7c15ull)), counter_(0) {}

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * kGamma); }

  // uniform in (0,1): 53 mantissa bits, never exactly 0 or 1
  double next_double() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
  }

  // standard normal via Box-Muller (deterministic given the stream)
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_double(), u2 = next_double();
    double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return mag * std::cos(2.0 * M_PI * u2);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;

  static std::uint64_t mix(std::uint64_t z) {
    z += kGamma;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace gpsum

#endif
