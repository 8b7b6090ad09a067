#pragma once

#include <Eigen/Dense>
#include <array>
#include <stdexcept>
#include <string>

#include "rfpuf/rxchain.hpp"

namespace rfpuf {

inline constexpr int kNumFeatures = 9;

// Raised when no recovered symbol maps to some amplitude ring; the caller
// retries the frame with the next derived seed.
struct empty_ring_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The fixed-length response vector extracted from one received frame.
struct FeatureVector {
  Eigen::VectorXd values;  // length kNumFeatures

  static const std::array<std::string, kNumFeatures>& names();
};

// Per-feature population statistics from the training set. Degenerate
// features get their scale clamped to the floor and flagged.
struct NormalizationParams {
  Eigen::VectorXd mean;
  Eigen::VectorXd scale;
  std::vector<int> floored;

  static constexpr double kScaleFloor = 1e-12;
};

// Features, in order: cfo_ppm (carrier-relative), per-ring amplitude ratios,
// per-ring circular-mean phase errors, AGC gain, noise variance estimate.
FeatureVector extract_features(const RxOutput& rx, double carrier_freq_hz);

NormalizationParams fit_normalization(const Eigen::MatrixXd& training_rows);

FeatureVector apply_normalization(const FeatureVector& v,
                                  const NormalizationParams& p);

// Samples as rows; used for both training and evaluation splits.
struct Dataset {
  Eigen::MatrixXd features;
  Eigen::VectorXi labels;

  Eigen::Index size() const { return features.rows(); }
};

}  // namespace rfpuf
