#pragma once

#include <cstdint>

#include "rfpuf/txmodel.hpp"

namespace rfpuf {

struct ChannelConfig {
  double ebn0_mean_db = 20.0;
  double ebn0_sigma_db = 5.0;
  double attenuation_min_db = 0.0;
  double attenuation_max_db = 6.0;
  double doppler_max_hz = 200.0;
  bool awgn_enabled = true;

  void validate() const;
};

// Realized channel conditions for one frame; recorded alongside the frame
// for traceability.
struct ChannelState {
  double ebn0_db = 0.0;
  double attenuation_db = 0.0;
  double doppler_hz = 0.0;
  bool ebn0_clamped = false;
};

// Eb/N0 draws are clamped here to avoid degenerate all-noise frames; the
// harness reports the clamp rate.
inline constexpr double kEbn0FloorDb = -5.0;

// Draw order: ebn0 (normal), attenuation (uniform), doppler (uniform).
ChannelState sample_channel(const ChannelConfig& cfg, std::uint64_t seed);

// Complex AWGN variance per sample that realizes the requested Eb/N0 at the
// matched-filter output for unit-energy 16-QAM symbols shaped by a
// unit-energy RRC (4 bits/symbol).
double awgn_variance_per_sample(double ebn0_db);

// Attenuation, Doppler rotation, then AWGN.
IqFrame apply_channel(const IqFrame& frame, const ChannelState& state,
                      std::uint64_t seed, bool awgn_enabled = true);

}  // namespace rfpuf
