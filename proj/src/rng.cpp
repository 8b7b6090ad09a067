#include "rfpuf/rng.hpp"

#include <cmath>
#include <numbers>

namespace rfpuf {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t ns,
                       std::uint64_t item, std::uint64_t index) {
  std::uint64_t x = splitmix64(master);
  x = splitmix64(x ^ ns);
  x = splitmix64(x ^ item);
  x = splitmix64(x ^ index);
  return x;
}

double Rng::normal() {
  // u1 in (0, 1] so the log is finite.
  double u1 = 1.0 - uniform();
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace rfpuf
