#pragma once

#include <array>
#include <complex>

namespace rfpuf::constellation {

// Gray-mapped 16-QAM on the {+-1, +-3}^2 grid scaled to unit average symbol
// energy. The grid has three amplitude rings:
//   ring 0: |s| = sqrt(2/10)   (corners of the inner square)
//   ring 1: |s| = sqrt(10/10)  (the eight mixed-level points)
//   ring 2: |s| = sqrt(18/10)  (outer corners)
inline constexpr int kNumPoints = 16;
inline constexpr int kNumRings = 3;

double scale();  // 1/sqrt(10)

const std::array<std::complex<double>, kNumPoints>& points();

// Index of the nearest ideal point (Euclidean distance).
int nearest_index(std::complex<double> symbol);

int ring_of(int point_index);
double ring_radius(int ring);

// The 4-bit group (b3 b2 b1 b0) for an ideal point, MSB first.
std::array<std::uint8_t, 4> bits_of(int point_index);

}  // namespace rfpuf::constellation
