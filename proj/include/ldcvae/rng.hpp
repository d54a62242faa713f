#pragma once

#include <cstdint>
#include <cmath>
#include <vector>

namespace ldc {

// splitmix64: the usual finalizer, used both as a stream generator and as a
// stateless (seed, counter) -> word hash so noise draws are reproducible by
// index.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a ^ (0x9e3779b97f4a7c15ULL + (b << 6) + (b >> 2));
  return splitmix64(s);
}

// uniform in (0, 1]: never returns 0 so it is safe under log().
inline double unit_from_word(std::uint64_t w) {
  return (static_cast<double>(w >> 11) + 1.0) * 0x1.0p-53;
}

// Sequential deterministic RNG stream. All randomness in the project flows
// through this (no std::*_distribution, whose output is
// implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // decorrelate trivially related seeds
    splitmix64(state_);
  }

  std::uint64_t next_word() { return splitmix64(state_); }

  double uniform() { return unit_from_word(next_word()); }

  // standard normal via Box-Muller
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  // integer in [0, n)
  std::uint64_t below(std::uint64_t n) { return next_word() % n; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

// Counter-indexed reparameterization noise: identical (seed, counter) yields
// identical standard-normal draws regardless of call history elsewhere.
class NoiseSource {
 public:
  explicit NoiseSource(std::uint64_t seed) : seed_(seed) {}

  double next_normal() {
    const double u1 = unit_from_word(word_at(2 * counter_));
    const double u2 = unit_from_word(word_at(2 * counter_ + 1));
    ++counter_;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  std::vector<double> normal_vec(std::size_t n) {
    std::vector<double> out(n);
    for (auto& x : out) x = next_normal();
    return out;
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }
  void reset(std::uint64_t counter = 0) { counter_ = counter; }

 private:
  std::uint64_t word_at(std::uint64_t index) const {
    std::uint64_t s = seed_ ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    return splitmix64(s);
  }

  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace ldc
