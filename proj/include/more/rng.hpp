#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace more {

// splitmix64 finalizer, used to derive decorrelated substream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Derives the seed of a named substream. Every stochastic stage of a run
// (per-task shuffles, memory sampling, initializers, ...) gets its own
// (tag, index) pair so that replaying any stage is independent of the others.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t tag,
                               std::uint64_t index = 0) {
  return mix64(seed ^ mix64(tag ^ mix64(index)));
}

namespace stream {
inline constexpr std::uint64_t kSynthetic = 0x53594e54;   // dataset generation
inline constexpr std::uint64_t kClassOrder = 0x4f524452;  // class permutation
inline constexpr std::uint64_t kModelInit = 0x494e4954;   // shared weights
inline constexpr std::uint64_t kTaskInit = 0x54494e49;    // embeddings + head
inline constexpr std::uint64_t kShuffle = 0x53485546;     // IND batch order
inline constexpr std::uint64_t kMemorySample = 0x4d454d53;
inline constexpr std::uint64_t kMemoryUpdate = 0x4d454d55;
inline constexpr std::uint64_t kBackUpdate = 0x4241434b;
inline constexpr std::uint64_t kReference = 0x52454631;   // FWT baselines
}  // namespace stream

// Deterministic random source. The engine is std::mt19937_64 (exactly
// specified by the standard) and all output transforms are written out
// explicitly, so a seed produces the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1), 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Unbiased integer in [0, n); rejection sampling on the tail.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % n;
  }

  // Standard normal via Box-Muller; consumes two uniforms per pair.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.28318530717958647692528676655900577 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // In-place Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    shuffle(p);
    return p;
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace more
