#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace rfpuf {

// Seed-derivation namespaces. Every random draw in the artifact is reachable
// only through mix_seed(master, ns, item, index), so parallel and serial
// generation of the same item are bit-identical, and independent draw streams
// (data, channel, noise, model init) can never alias each other.
namespace seed_ns {
inline constexpr std::uint64_t kPopulation = 1;
inline constexpr std::uint64_t kTrainPrbs = 2;
inline constexpr std::uint64_t kTrainChannel = 3;
inline constexpr std::uint64_t kTrainNoise = 4;
inline constexpr std::uint64_t kEvalPrbs = 5;
inline constexpr std::uint64_t kEvalChannel = 6;
inline constexpr std::uint64_t kEvalNoise = 7;
inline constexpr std::uint64_t kModelInit = 8;
inline constexpr std::uint64_t kShuffle = 9;
}  // namespace seed_ns

// One output step of the splitmix64 generator.
std::uint64_t splitmix64(std::uint64_t x);

// Derives an independent stream seed by absorbing (ns, item, index) into the
// master seed, one splitmix64 step per field.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t ns,
                       std::uint64_t item = 0, std::uint64_t index = 0);

// Deterministic draws on top of mt19937_64. The standard distribution
// adaptors are not bit-stable across standard libraries, so the mappings
// from raw engine output to doubles live here and are part of the
// reproducibility contract.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; consumes exactly two engine outputs.
  double normal();

  double normal(double mean, double sigma) { return mean + sigma * normal(); }

  // Fisher-Yates; consumes one engine output per element above the first.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_u64() % i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rfpuf
