#include "rfpuf/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "rfpuf/rng.hpp"

namespace rfpuf {

void ChannelConfig::validate() const {
  if (ebn0_sigma_db < 0.0)
    throw std::invalid_argument("ChannelConfig: ebn0_sigma_db must be >= 0");
  if (attenuation_min_db < 0.0 || attenuation_min_db > attenuation_max_db)
    throw std::invalid_argument(
        "ChannelConfig: need 0 <= attenuation_min_db <= attenuation_max_db");
  if (doppler_max_hz < 0.0)
    throw std::invalid_argument("ChannelConfig: doppler_max_hz must be >= 0");
}

ChannelState sample_channel(const ChannelConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  Rng rng(seed);
  ChannelState st;
  st.ebn0_db = rng.normal(cfg.ebn0_mean_db, cfg.ebn0_sigma_db);
  if (st.ebn0_db < kEbn0FloorDb) {
    st.ebn0_db = kEbn0FloorDb;
    st.ebn0_clamped = true;
  }
  st.attenuation_db = rng.uniform(cfg.attenuation_min_db, cfg.attenuation_max_db);
  st.doppler_hz = rng.uniform(-cfg.doppler_max_hz, cfg.doppler_max_hz);
  return st;
}

double awgn_variance_per_sample(double ebn0_db) {
  // Per-sample signal power of the unit-energy-symbol stream is Es/os, so
  // noise occupying the full sample bandwidth (os times the symbol rate)
  // needs variance os * (Es/os) / (4 * Eb/N0) = Es / (4 * Eb/N0); the
  // unit-energy matched filter then sees Es/N0 = 4 * Eb/N0 exactly.
  return 1.0 / (4.0 * std::pow(10.0, ebn0_db / 10.0));
}

IqFrame apply_channel(const IqFrame& frame, const ChannelState& state,
                      std::uint64_t seed, bool awgn_enabled) {
  frame.validate();
  if (!std::isfinite(state.ebn0_db) || !std::isfinite(state.attenuation_db) ||
      !std::isfinite(state.doppler_hz))
    throw std::invalid_argument("apply_channel: non-finite channel state");

  IqFrame out = frame;
  out.samples *= std::pow(10.0, -state.attenuation_db / 20.0);
  if (state.doppler_hz != 0.0)
    out.samples =
        rotate_frequency(out.samples, state.doppler_hz, out.sample_rate_hz);

  if (awgn_enabled) {
    Rng rng(seed);
    const double sigma_rail =
        std::sqrt(awgn_variance_per_sample(state.ebn0_db) / 2.0);
    for (Eigen::Index k = 0; k < out.samples.size(); ++k) {
      out.samples[k] += std::complex<double>(sigma_rail * rng.normal(),
                                             sigma_rail * rng.normal());
    }
  }
  return out;
}

}  // namespace rfpuf
