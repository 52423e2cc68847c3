#pragma once

#include <cmath>
#include <cstdint>

namespace ffc {

// Counter-mode generator: output k is the splitmix64 finalizer applied to
// key + (k+1) * golden-ratio increment. Substreams re-key through a second
// finalizer pass, so (seed, index) pairs give unrelated streams and a sample
// loop can be split across workers without changing any draw. All state is
// two 64-bit words; identical seeds reproduce identical streams.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(finalize(seed ^ kKeyTweak)) {}

  CounterRng substream(std::uint64_t index) const {
    return CounterRng(raw_key{}, finalize(key_ ^ finalize(index + kStreamTweak)));
  }

  std::uint64_t next_u64() {
    counter_ += kGolden;
    return finalize(key_ ^ counter_);
  }

  // Uniform on (0, 1]; never zero, so logarithms are safe.
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; consumes exactly two draws.
  double next_gaussian() {
    double u1 = next_unit();
    double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  // Uniform integer in [0, n), unbiased by rejection.
  std::uint64_t next_below(std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t x = next_u64();
      if (x >= threshold) return x % n;
    }
  }

  // Uniform integer in [lo, hi] inclusive.
  long next_int(long lo, long hi) {
    return lo + static_cast<long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  struct raw_key {};
  CounterRng(raw_key, std::uint64_t key) : key_(key) {}

  static std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kKeyTweak = 0xA0761D6478BD642Full;
  static constexpr std::uint64_t kStreamTweak = 0xE7037ED1A0B428DBull;

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace ffc
