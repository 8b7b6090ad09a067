#include "rfpuf/constellation.hpp"

#include <cmath>
#include <cstdint>

namespace rfpuf::constellation {

namespace {

constexpr double kGrayLevel[4] = {-3.0, -1.0, +3.0, +1.0};

std::array<std::complex<double>, kNumPoints> make_points() {
  std::array<std::complex<double>, kNumPoints> pts;
  const double s = scale();
  for (int idx = 0; idx < kNumPoints; ++idx) {
    const int ibits = (idx >> 2) & 3;  // (b3 b2)
    const int qbits = idx & 3;         // (b1 b0)
    pts[static_cast<std::size_t>(idx)] = std::complex<double>(
        kGrayLevel[ibits] * s, kGrayLevel[qbits] * s);
  }
  return pts;
}

// Nearest Gray-pair index for one rail, thresholds at -2, 0, +2 (unscaled).
int quantize_rail(double level) {
  if (level < -2.0) return 0b00;  // -3
  if (level < 0.0) return 0b01;   // -1
  if (level < 2.0) return 0b11;   // +1
  return 0b10;                    // +3
}

}  // namespace

double scale() { return 1.0 / std::sqrt(10.0); }

const std::array<std::complex<double>, kNumPoints>& points() {
  static const auto pts = make_points();
  return pts;
}

int nearest_index(std::complex<double> symbol) {
  // Rails quantize independently on the rectangular grid.
  const double inv = 1.0 / scale();
  const int ibits = quantize_rail(symbol.real() * inv);
  const int qbits = quantize_rail(symbol.imag() * inv);
  return (ibits << 2) | qbits;
}

int ring_of(int point_index) {
  const auto& p = points()[static_cast<std::size_t>(point_index)];
  const double r2 = std::norm(p) * 10.0;  // 2, 10 or 18
  if (r2 < 6.0) return 0;
  if (r2 < 14.0) return 1;
  return 2;
}

double ring_radius(int ring) {
  switch (ring) {
    case 0: return std::sqrt(2.0 / 10.0);
    case 1: return 1.0;
    default: return std::sqrt(18.0 / 10.0);
  }
}

std::array<std::uint8_t, 4> bits_of(int point_index) {
  return {static_cast<std::uint8_t>((point_index >> 3) & 1),
          static_cast<std::uint8_t>((point_index >> 2) & 1),
          static_cast<std::uint8_t>((point_index >> 1) & 1),
          static_cast<std::uint8_t>(point_index & 1)};
}

}  // namespace rfpuf::constellation
