#pragma once

#include <utility>

#include "rfpuf/txmodel.hpp"

namespace rfpuf {

// Output of the receiver front end: symbol-rate samples after AGC, matched
// filtering and frequency correction, plus the side information the
// classifier consumes.
struct RxOutput {
  Eigen::ArrayXcd symbols;
  double cfo_estimate_hz = 0.0;  // device CFO + Doppler, not disentangled
  double agc_gain_db = 0.0;
  double noise_var_estimate = 0.0;
};

// Scales the frame so its mean power equals target_power.
std::pair<IqFrame, double> agc(const IqFrame& frame, double target_power);

// Receive-side RRC, identical to the transmit filter.
IqFrame matched_filter(const IqFrame& frame, const RrcParams& p);

// Blind combined-offset estimator: raises the samples to the 4th power,
// Welch-averages periodograms (segment fft_size, 50% overlap, Hann window),
// refines the peak by quadratic interpolation and divides by 4. Usable range
// is +-sample_rate/8.
double estimate_cfo(const IqFrame& frame, int fft_size);

// Multiplies sample k by exp(-j*2*pi*offset_hz*k/fs).
IqFrame correct_cfo(const IqFrame& frame, double offset_hz);

// Samples at group-delay-aligned symbol instants, discarding span/2 edge
// symbols at each end; a frame of n symbols yields n - span symbols.
Eigen::ArrayXcd recover_symbols(const IqFrame& frame, const RrcParams& p);

// Minimum-distance 16-QAM hard decisions, inverse Gray mapping. Sanity-check
// path only; authentication runs on features, not bits.
BitStream demodulate(const Eigen::ArrayXcd& symbols);

struct RxChainOptions {
  int fft_size = 8192;       // clamped to the frame length inside receive()
  bool rrc_ablation = false; // bypass the matched filter (plain decimation)
};

// Full front end: AGC to the nominal stream power, matched filter (unless
// ablated), offset estimation and correction, symbol recovery, noise
// variance estimate.
RxOutput receive(const IqFrame& frame, const RrcParams& p,
                 const RxChainOptions& options = {});

}  // namespace rfpuf
