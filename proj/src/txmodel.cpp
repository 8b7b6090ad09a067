#include "rfpuf/txmodel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rfpuf/rng.hpp"

namespace rfpuf {

namespace {

constexpr double kPi = std::numbers::pi;

// 2-bit Gray levels indexed by (b_hi << 1) | b_lo.
constexpr double kGrayLevel[4] = {-3.0, -1.0, +3.0, +1.0};

// Unit average symbol energy for the {+-1, +-3}^2 grid.
const double kQamScale = 1.0 / std::sqrt(10.0);

}  // namespace

void VariationConfig::validate() const {
  if (!(carrier_freq_hz > 0.0))
    throw std::invalid_argument("VariationConfig: carrier_freq_hz must be > 0");
  if (cfo_sigma_hz < 0.0 || gain_imbalance_sigma_db < 0.0 ||
      phase_imbalance_sigma_deg < 0.0 || dc_offset_sigma < 0.0 ||
      pa_sat_sigma < 0.0)
    throw std::invalid_argument("VariationConfig: sigmas must be >= 0");
  if (!(pa_sat_nominal > 0.0))
    throw std::invalid_argument("VariationConfig: pa_sat_nominal must be > 0");
  if (!(pa_smoothness > 0.0))
    throw std::invalid_argument("VariationConfig: pa_smoothness must be > 0");
}

void IqFrame::validate() const {
  if (samples.size() == 0) throw std::invalid_argument("IqFrame: empty");
  if (oversampling < 1)
    throw std::invalid_argument("IqFrame: oversampling must be >= 1");
  if (!(sample_rate_hz > 0.0) || !(symbol_rate_hz > 0.0))
    throw std::invalid_argument("IqFrame: rates must be > 0");
  if (std::abs(sample_rate_hz - oversampling * symbol_rate_hz) >
      1e-6 * sample_rate_hz)
    throw std::invalid_argument(
        "IqFrame: sample_rate_hz must equal oversampling * symbol_rate_hz");
}

void RrcParams::validate() const {
  if (rolloff < 0.0 || rolloff > 1.0)
    throw std::invalid_argument("RrcParams: rolloff must be in [0, 1]");
  if (span_symbols < 4 || span_symbols % 2 != 0)
    throw std::invalid_argument(
        "RrcParams: span_symbols must be an even integer >= 4");
  if (oversampling < 1)
    throw std::invalid_argument("RrcParams: oversampling must be >= 1");
}

std::vector<TxProfile> sample_population(int n, const VariationConfig& cfg,
                                         std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_population: n must be >= 1");
  cfg.validate();

  std::vector<TxProfile> population;
  population.reserve(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) {
    Rng rng(mix_seed(seed, seed_ns::kPopulation,
                     static_cast<std::uint64_t>(d)));
    TxProfile p;
    p.device_id = d;
    // Draw order is fixed; changing it changes every population.
    p.cfo_hz = rng.normal(0.0, cfg.cfo_sigma_hz);
    p.gain_i = std::pow(10.0, rng.normal(0.0, cfg.gain_imbalance_sigma_db) / 20.0);
    p.gain_q = std::pow(10.0, rng.normal(0.0, cfg.gain_imbalance_sigma_db) / 20.0);
    p.phase_imbalance_rad =
        rng.normal(0.0, cfg.phase_imbalance_sigma_deg * kPi / 180.0);
    p.dc_i = rng.normal(0.0, cfg.dc_offset_sigma);
    p.dc_q = rng.normal(0.0, cfg.dc_offset_sigma);
    p.pa_sat = std::max(1e-6, rng.normal(cfg.pa_sat_nominal, cfg.pa_sat_sigma));
    p.pa_smoothness = cfg.pa_smoothness;
    population.push_back(p);
  }
  return population;
}

BitStream generate_prbs(int n_bits, std::uint64_t seed) {
  if (n_bits < 4 || n_bits % 4 != 0)
    throw std::invalid_argument(
        "generate_prbs: n_bits must be >= 4 and divisible by 4");

  std::uint32_t state = static_cast<std::uint32_t>(seed & 0x7FFFu);
  if (state == 0) state = 0x4D2E;  // all-zero state would lock the LFSR

  BitStream out;
  out.seed = seed;
  out.bits.resize(static_cast<std::size_t>(n_bits));
  for (int i = 0; i < n_bits; ++i) {
    std::uint32_t bit = (state >> 14) & 1u;
    std::uint32_t feedback = ((state >> 14) ^ (state >> 13)) & 1u;
    state = ((state << 1) | feedback) & 0x7FFFu;
    out.bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(bit);
  }
  return out;
}

Eigen::ArrayXcd map_bits_to_symbols(const BitStream& bits) {
  const auto n = bits.bits.size();
  if (n < 4 || n % 4 != 0)
    throw std::invalid_argument(
        "map_bits_to_symbols: bit count must be a positive multiple of 4");

  Eigen::ArrayXcd symbols(static_cast<Eigen::Index>(n / 4));
  for (std::size_t i = 0; i < n; i += 4) {
    int b3 = bits.bits[i], b2 = bits.bits[i + 1];
    int b1 = bits.bits[i + 2], b0 = bits.bits[i + 3];
    double re = kGrayLevel[(b3 << 1) | b2];
    double im = kGrayLevel[(b1 << 1) | b0];
    symbols[static_cast<Eigen::Index>(i / 4)] =
        std::complex<double>(re * kQamScale, im * kQamScale);
  }
  return symbols;
}

Eigen::ArrayXd rrc_taps(const RrcParams& p) {
  p.validate();
  const double beta = p.rolloff;
  const int ntaps = p.span_symbols * p.oversampling + 1;
  const int center = ntaps / 2;

  Eigen::ArrayXd taps(ntaps);
  for (int k = 0; k < ntaps; ++k) {
    const double t = static_cast<double>(k - center) / p.oversampling;
    double h;
    if (std::abs(t) < 1e-12) {
      h = 1.0 - beta + 4.0 * beta / kPi;
    } else if (beta > 0.0 &&
               std::abs(std::abs(t) - 1.0 / (4.0 * beta)) < 1e-9) {
      const double a = kPi / (4.0 * beta);
      h = (beta / std::sqrt(2.0)) *
          ((1.0 + 2.0 / kPi) * std::sin(a) + (1.0 - 2.0 / kPi) * std::cos(a));
    } else {
      const double num = std::sin(kPi * t * (1.0 - beta)) +
                         4.0 * beta * t * std::cos(kPi * t * (1.0 + beta));
      const double den = kPi * t * (1.0 - 16.0 * beta * beta * t * t);
      h = num / den;
    }
    taps[k] = h;
  }
  taps /= std::sqrt(taps.square().sum());
  return taps;
}

Eigen::ArrayXcd convolve_full(const Eigen::ArrayXcd& x,
                              const Eigen::ArrayXd& taps) {
  const Eigen::Index n = x.size();
  const Eigen::Index m = taps.size();
  Eigen::ArrayXcd y = Eigen::ArrayXcd::Zero(n + m - 1);
  for (Eigen::Index j = 0; j < m; ++j) {
    if (taps[j] != 0.0) y.segment(j, n) += taps[j] * x;
  }
  return y;
}

IqFrame pulse_shape(const Eigen::ArrayXcd& symbols, const RrcParams& p,
                    double symbol_rate_hz) {
  p.validate();
  if (symbols.size() == 0)
    throw std::invalid_argument("pulse_shape: no symbols");
  if (!(symbol_rate_hz > 0.0))
    throw std::invalid_argument("pulse_shape: symbol_rate_hz must be > 0");

  Eigen::ArrayXcd up =
      Eigen::ArrayXcd::Zero(symbols.size() * p.oversampling);
  for (Eigen::Index k = 0; k < symbols.size(); ++k)
    up[k * p.oversampling] = symbols[k];

  IqFrame frame;
  frame.samples = convolve_full(up, rrc_taps(p));
  frame.symbol_rate_hz = symbol_rate_hz;
  frame.sample_rate_hz = symbol_rate_hz * p.oversampling;
  frame.oversampling = p.oversampling;
  frame.group_delay_samples = p.span_symbols * p.oversampling / 2;
  return frame;
}

double rapp_compression_factor(double magnitude, double sat,
                               double smoothness) {
  const double r = magnitude / sat;
  return std::pow(1.0 + std::pow(r * r, smoothness), -0.5 / smoothness);
}

IqFrame apply_tx_impairments(const IqFrame& frame, const TxProfile& profile) {
  frame.validate();
  const double cos_phi = std::cos(profile.phase_imbalance_rad);
  const double sin_phi = std::sin(profile.phase_imbalance_rad);

  IqFrame out = frame;
  Eigen::ArrayXcd& s = out.samples;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    const double i0 = s[k].real();
    const double q0 = s[k].imag();
    // (1) I/Q imbalance and DC offsets.
    double i1 = profile.gain_i * i0 + profile.dc_i;
    double q1 = profile.gain_q * (q0 * cos_phi + i0 * sin_phi) + profile.dc_q;
    // (2) Memoryless Rapp AM/AM, phase preserved.
    const double mag = std::hypot(i1, q1);
    const double g =
        rapp_compression_factor(mag, profile.pa_sat, profile.pa_smoothness);
    s[k] = std::complex<double>(i1 * g, q1 * g);
  }
  // (3) LO offset as baseband rotation.
  s = rotate_frequency(s, profile.cfo_hz, out.sample_rate_hz);
  return out;
}

Eigen::ArrayXcd rotate_frequency(const Eigen::ArrayXcd& samples,
                                 double freq_hz, double sample_rate_hz) {
  const double w = 2.0 * kPi * freq_hz / sample_rate_hz;
  Eigen::ArrayXcd out(samples.size());
  for (Eigen::Index k = 0; k < samples.size(); ++k)
    out[k] = samples[k] * std::polar(1.0, w * static_cast<double>(k));
  return out;
}

}  // namespace rfpuf
