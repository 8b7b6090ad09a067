#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace rfpuf {

// Statistical spread of the transmitter impairments across a population.
// Each impairment is drawn independently around its nominal value.
struct VariationConfig {
  double carrier_freq_hz = 2.412e9;
  double cfo_sigma_hz = 20.1e3;  // 25 ppm of 2.412 GHz is the 3-sigma bound
  double gain_imbalance_sigma_db = 0.5;
  double phase_imbalance_sigma_deg = 1.0;
  double dc_offset_sigma = 0.01;
  double pa_sat_nominal = 2.0;
  double pa_sat_sigma = 0.1;
  double pa_smoothness = 2.0;  // Rapp knee sharpness, > 0

  void validate() const;  // throws std::invalid_argument
};

// One transmitter's impairment parameter set. Immutable once sampled.
struct TxProfile {
  int device_id = 0;
  double cfo_hz = 0.0;
  double gain_i = 1.0;
  double gain_q = 1.0;
  double phase_imbalance_rad = 0.0;
  double dc_i = 0.0;
  double dc_q = 0.0;
  double pa_sat = 2.0;
  double pa_smoothness = 2.0;  // shared knee, carried so the profile is self-contained
};

struct BitStream {
  std::vector<std::uint8_t> bits;
  std::uint64_t seed = 0;
};

// Complex baseband sample stream. group_delay_samples accumulates the delay
// of every shaping/matched filter applied so far; symbol k of the original
// stream sits at sample group_delay_samples + k * oversampling.
struct IqFrame {
  Eigen::ArrayXcd samples;
  double sample_rate_hz = 0.0;
  double symbol_rate_hz = 0.0;
  int oversampling = 0;
  int group_delay_samples = 0;

  void validate() const;
};

struct RrcParams {
  double rolloff = 0.35;
  int span_symbols = 10;  // even, >= 4
  int oversampling = 8;

  void validate() const;
};

// Draws n device profiles around the configured nominals. Per-device seeds
// are derived as mix_seed(seed, seed_ns::kPopulation, device_id), so the
// population is reproducible item by item.
std::vector<TxProfile> sample_population(int n, const VariationConfig& cfg,
                                         std::uint64_t seed);

// Maximal-length PRBS-15 (x^15 + x^14 + 1). The low 15 bits of the seed set
// the LFSR state; an all-zero state is remapped to 0x4D2E.
BitStream generate_prbs(int n_bits, std::uint64_t seed);

// Gray-mapped 16-QAM, unit average symbol energy. Bit group (b3 b2 b1 b0)
// maps I from (b3 b2) and Q from (b1 b0) via {00:-3, 01:-1, 11:+1, 10:+3}.
Eigen::ArrayXcd map_bits_to_symbols(const BitStream& bits);

// Unit-energy root-raised-cosine impulse response, span*oversampling+1 taps.
Eigen::ArrayXd rrc_taps(const RrcParams& p);

// Full (zero-padded) linear convolution.
Eigen::ArrayXcd convolve_full(const Eigen::ArrayXcd& x,
                              const Eigen::ArrayXd& taps);

// Zero-insertion upsampling followed by the RRC; output length is
// (n_symbols + span) * oversampling samples.
IqFrame pulse_shape(const Eigen::ArrayXcd& symbols, const RrcParams& p,
                    double symbol_rate_hz = 1.0e6);

// Rapp AM/AM gain for an input of the given magnitude: strictly compressive,
// output magnitude bounded by sat.
double rapp_compression_factor(double magnitude, double sat,
                               double smoothness);

// Applies, in this order: I/Q imbalance, Rapp PA compression, CFO rotation.
// The ordering is part of the contract.
IqFrame apply_tx_impairments(const IqFrame& frame, const TxProfile& profile);

// Rotates sample k by exp(+j*2*pi*freq_hz*k/fs). CFO, Doppler and their
// correction all go through this one helper so they compose additively.
Eigen::ArrayXcd rotate_frequency(const Eigen::ArrayXcd& samples,
                                 double freq_hz, double sample_rate_hz);

}  // namespace rfpuf
