#include "rfpuf/rxchain.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "rfpuf/constellation.hpp"

namespace rfpuf {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::pair<IqFrame, double> agc(const IqFrame& frame, double target_power) {
  frame.validate();
  if (!(target_power > 0.0))
    throw std::invalid_argument("agc: target_power must be > 0");
  const double in_power = frame.samples.abs2().mean();
  if (!(in_power > 0.0)) throw std::invalid_argument("agc: all-zero frame");

  IqFrame out = frame;
  out.samples *= std::sqrt(target_power / in_power);
  return {std::move(out), 10.0 * std::log10(target_power / in_power)};
}

IqFrame matched_filter(const IqFrame& frame, const RrcParams& p) {
  frame.validate();
  p.validate();
  if (p.oversampling != frame.oversampling)
    throw std::invalid_argument("matched_filter: oversampling mismatch");

  IqFrame out = frame;
  out.samples = convolve_full(frame.samples, rrc_taps(p));
  out.group_delay_samples += p.span_symbols * p.oversampling / 2;
  return out;
}

double estimate_cfo(const IqFrame& frame, int fft_size) {
  frame.validate();
  if (fft_size < 16)
    throw std::invalid_argument("estimate_cfo: fft_size too small");
  const Eigen::Index n = frame.samples.size();
  const Eigen::Index L = fft_size;
  if (n < L)
    throw std::invalid_argument("estimate_cfo: frame shorter than one segment");

  // 4th power strips the QAM modulation up to self-noise, leaving a spectral
  // line at four times the frequency offset.
  Eigen::ArrayXcd x2 = frame.samples * frame.samples;
  Eigen::ArrayXcd x4 = x2 * x2;

  Eigen::ArrayXd window(L);
  for (Eigen::Index k = 0; k < L; ++k)
    window[k] = 0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(k) /
                                      static_cast<double>(L - 1)));

  const Eigen::Index hop = L / 2;
  const Eigen::Index n_segments = 1 + (n - L) / hop;
  Eigen::ArrayXd psd = Eigen::ArrayXd::Zero(L);
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> seg(static_cast<std::size_t>(L));
  std::vector<std::complex<double>> spec(static_cast<std::size_t>(L));
  for (Eigen::Index s = 0; s < n_segments; ++s) {
    const Eigen::Index off = s * hop;
    for (Eigen::Index k = 0; k < L; ++k)
      seg[static_cast<std::size_t>(k)] = x4[off + k] * window[k];
    fft.fwd(spec, seg);
    for (Eigen::Index k = 0; k < L; ++k)
      psd[k] += std::norm(spec[static_cast<std::size_t>(k)]);
  }

  Eigen::Index peak = 0;
  psd.maxCoeff(&peak);

  // Quadratic interpolation on log power over the peak and its neighbors.
  auto logp = [&](Eigen::Index i) {
    return std::log(psd[(i % L + L) % L] + 1e-300);
  };
  const double lm = logp(peak - 1), l0 = logp(peak), lp = logp(peak + 1);
  const double denom = lm - 2.0 * l0 + lp;
  double delta = 0.0;
  if (denom < 0.0) delta = 0.5 * (lm - lp) / denom;
  if (!(std::abs(delta) <= 1.0)) delta = 0.0;

  const double signed_bin =
      (peak <= L / 2) ? static_cast<double>(peak)
                      : static_cast<double>(peak - L);
  const double peak_hz =
      (signed_bin + delta) * frame.sample_rate_hz / static_cast<double>(L);
  return peak_hz / 4.0;
}

IqFrame correct_cfo(const IqFrame& frame, double offset_hz) {
  IqFrame out = frame;
  out.samples = rotate_frequency(frame.samples, -offset_hz, frame.sample_rate_hz);
  return out;
}

Eigen::ArrayXcd recover_symbols(const IqFrame& frame, const RrcParams& p) {
  frame.validate();
  p.validate();
  if (p.oversampling != frame.oversampling)
    throw std::invalid_argument("recover_symbols: oversampling mismatch");

  // Each filter pass added span*os/2 delay and the same amount of tail, so
  // the original symbol count is recoverable from the length alone.
  const Eigen::Index os = p.oversampling;
  const Eigen::Index gd = frame.group_delay_samples;
  const Eigen::Index n_symbols = (frame.samples.size() - 2 * gd) / os;
  const Eigen::Index span = p.span_symbols;
  const Eigen::Index kept = n_symbols - span;
  if (kept < 1)
    throw std::invalid_argument(
        "recover_symbols: frame too short after edge trimming");

  Eigen::ArrayXcd symbols(kept);
  for (Eigen::Index k = 0; k < kept; ++k)
    symbols[k] = frame.samples[gd + (span / 2 + k) * os];
  return symbols;
}

BitStream demodulate(const Eigen::ArrayXcd& symbols) {
  BitStream out;
  out.bits.reserve(static_cast<std::size_t>(symbols.size()) * 4);
  for (Eigen::Index k = 0; k < symbols.size(); ++k) {
    const int idx = constellation::nearest_index(symbols[k]);
    for (auto b : constellation::bits_of(idx)) out.bits.push_back(b);
  }
  return out;
}

RxOutput receive(const IqFrame& frame, const RrcParams& p,
                 const RxChainOptions& options) {
  frame.validate();
  p.validate();

  // Nominal mean sample power of a unit-energy-symbol stream of this length.
  const Eigen::Index os = p.oversampling;
  const Eigen::Index n_symbols =
      (frame.samples.size() - 2 * frame.group_delay_samples) / os;
  if (n_symbols < 1) throw std::invalid_argument("receive: frame too short");
  const double nominal_power =
      static_cast<double>(n_symbols) /
      static_cast<double>(frame.samples.size());

  auto [leveled, gain_db] = agc(frame, nominal_power);

  IqFrame filtered =
      options.rrc_ablation ? leveled : matched_filter(leveled, p);

  const int fft_size =
      std::min<Eigen::Index>(options.fft_size, filtered.samples.size());
  const double cfo_hz = estimate_cfo(filtered, fft_size);
  IqFrame corrected = correct_cfo(filtered, cfo_hz);

  RxOutput out;
  out.symbols = recover_symbols(corrected, p);
  out.cfo_estimate_hz = cfo_hz;
  out.agc_gain_db = gain_db;

  double sq_err = 0.0;
  for (Eigen::Index k = 0; k < out.symbols.size(); ++k) {
    const auto ideal = constellation::points()[static_cast<std::size_t>(
        constellation::nearest_index(out.symbols[k]))];
    sq_err += std::norm(out.symbols[k] - ideal);
  }
  out.noise_var_estimate = sq_err / static_cast<double>(out.symbols.size());
  return out;
}

}  // namespace rfpuf
