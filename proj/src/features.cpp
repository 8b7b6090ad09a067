#include "rfpuf/features.hpp"

#include <cmath>

#include "rfpuf/constellation.hpp"

namespace rfpuf {

namespace {

double wrap_angle(double a) {
  while (a > M_PI) a -= 2.0 * M_PI;
  while (a <= -M_PI) a += 2.0 * M_PI;
  return a;
}

}  // namespace

const std::array<std::string, kNumFeatures>& FeatureVector::names() {
  static const std::array<std::string, kNumFeatures> n = {
      "cfo_ppm",           "ring1_amp",          "ring2_amp",
      "ring3_amp",         "ring1_phase_err_rad", "ring2_phase_err_rad",
      "ring3_phase_err_rad", "agc_gain_db",        "noise_var_estimate"};
  return n;
}

FeatureVector extract_features(const RxOutput& rx, double carrier_freq_hz) {
  if (!(carrier_freq_hz > 0.0))
    throw std::invalid_argument("extract_features: carrier_freq_hz must be > 0");
  const Eigen::Index n = rx.symbols.size();
  if (n < 16 * constellation::kNumRings)
    throw std::invalid_argument("extract_features: frame too short");

  double mag_sum[constellation::kNumRings] = {};
  double sin_sum[constellation::kNumRings] = {};
  double cos_sum[constellation::kNumRings] = {};
  int counts[constellation::kNumRings] = {};

  for (Eigen::Index k = 0; k < n; ++k) {
    const std::complex<double> y = rx.symbols[k];
    const int idx = constellation::nearest_index(y);
    const int ring = constellation::ring_of(idx);
    const auto ideal = constellation::points()[static_cast<std::size_t>(idx)];
    const double err = wrap_angle(std::arg(y) - std::arg(ideal));
    mag_sum[ring] += std::abs(y);
    sin_sum[ring] += std::sin(err);
    cos_sum[ring] += std::cos(err);
    ++counts[ring];
  }

  FeatureVector fv;
  fv.values.resize(kNumFeatures);
  fv.values[0] = rx.cfo_estimate_hz / carrier_freq_hz * 1e6;
  for (int r = 0; r < constellation::kNumRings; ++r) {
    if (counts[r] == 0)
      throw empty_ring_error("extract_features: empty constellation ring " +
                             std::to_string(r + 1));
    fv.values[1 + r] =
        mag_sum[r] / counts[r] / constellation::ring_radius(r);
    fv.values[4 + r] = std::atan2(sin_sum[r], cos_sum[r]);
  }
  fv.values[7] = rx.agc_gain_db;
  fv.values[8] = rx.noise_var_estimate;

  for (int i = 0; i < kNumFeatures; ++i)
    if (!std::isfinite(fv.values[i]))
      throw std::runtime_error("extract_features: non-finite feature " +
                               FeatureVector::names()[static_cast<std::size_t>(i)]);
  return fv;
}

NormalizationParams fit_normalization(const Eigen::MatrixXd& training_rows) {
  if (training_rows.rows() < 2)
    throw std::invalid_argument("fit_normalization: need at least 2 vectors");

  NormalizationParams p;
  const Eigen::Index d = training_rows.cols();
  p.mean = training_rows.colwise().mean();
  p.scale.resize(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const double var =
        (training_rows.col(j).array() - p.mean[j]).square().mean();
    double sd = std::sqrt(var);
    if (sd < NormalizationParams::kScaleFloor) {
      sd = NormalizationParams::kScaleFloor;
      p.floored.push_back(static_cast<int>(j));
    }
    p.scale[j] = sd;
  }
  return p;
}

FeatureVector apply_normalization(const FeatureVector& v,
                                  const NormalizationParams& p) {
  if (v.values.size() != p.mean.size() || v.values.size() != p.scale.size())
    throw std::invalid_argument("apply_normalization: length mismatch");
  FeatureVector out;
  out.values = (v.values - p.mean).cwiseQuotient(p.scale);
  return out;
}

}  // namespace rfpuf
