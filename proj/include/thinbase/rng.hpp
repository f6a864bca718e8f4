#ifndef THINBASE_RNG_HPP
#define THINBASE_RNG_HPP

#include <cstdint>
#include <vector>

namespace thinbase {

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Substream seed for (master, stream).  Attempt k of a randomized run always
// draws from derive_seed(master, k), so results do not depend on how attempts
// are scheduled.
inline uint64_t derive_seed(uint64_t master, uint64_t stream) {
  uint64_t s = master;
  uint64_t a = splitmix64(s);
  s = a + 0x632BE59BD9B4E019ull * (stream + 1);
  return splitmix64(s);
}

// xoshiro256** seeded via splitmix64.  Self-contained so that streams are
// bit-identical across platforms and standard-library versions.
class Rng {
public:
  explicit Rng(uint64_t seed) {
    uint64_t s = seed;
    for (auto& w : state_) w = splitmix64(s);
  }

  uint64_t next() {
    uint64_t result = rotl(state_[1] * 5, 7) * 9;
    uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Unbiased draw in [0, n) by rejection on the top range.
  uint64_t below(uint64_t n) {
    uint64_t threshold = (-n) % n;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  double unit_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform k-subset of `pool` via partial Fisher-Yates; pool order defines
  // the draw, result returned sorted.
  std::vector<int> sample_subset(std::vector<int> pool, int k) {
    for (int i = 0; i < k; ++i) {
      uint64_t j = i + below(pool.size() - static_cast<size_t>(i));
      std::swap(pool[static_cast<size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<size_t>(k));
    return pool;
  }

private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t state_[4];
};

}  // namespace thinbase

#endif
