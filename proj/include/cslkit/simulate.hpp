#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cslkit/constants.hpp"
#include "cslkit/errors.hpp"
#include "cslkit/flux_model.hpp"
#include "cslkit/oscillator.hpp"
#include "cslkit/resonator.hpp"
#include "cslkit/rng.hpp"
#include "cslkit/spectrum.hpp"

namespace cslkit {

/// Draw an averaged spectrum from a model: each bin is
/// model * chi^2_{2 n_av} / (2 n_av), independent across bins (Bartlett
/// statistics of n_av averaged periodograms of Gaussian noise).
/// Deterministic under a fixed seed.
inline Spectrum sample_averaged_spectrum(const Spectrum& model, int n_av,
                                         std::uint64_t seed) {
    require(n_av >= 1, "sample_averaged_spectrum: n_av must be >= 1");
    std::mt19937_64 rng(derive_seed(seed, 0x5bec7ra1ULL));
    std::gamma_distribution<double> gam(double(n_av), 1.0 / double(n_av));
    std::vector<double> psd(model.size());
    for (std::size_t i = 0; i < model.size(); ++i)
        psd[i] = model.psd()[i] * gam(rng);
    return Spectrum::averaged(std::vector<double>(model.f()), std::move(psd), n_av,
                              model.unit());
}

namespace sim_detail {

struct FluxNoiseConfig {
    double add_sigma;     // per-sample sigma of the additive white flux noise
    double cterm_sigma;   // per-sample input sigma of the notch-shaped noise
    double phi_x_phi0;    // flux per displacement, in Phi0/m
};

/// Per-sample synthesis pieces shared by the contiguous and framed paths.
/// Flux output is in Phi0 units.
template <class Rng>
inline double flux_sample(const std::array<double, 2>& z, const FluxNoiseConfig& cfg,
                          NotchShaper& notch, Rng& rng,
                          std::normal_distribution<double>& n01) {
    double phi = cfg.phi_x_phi0 * z[0];
    if (cfg.add_sigma > 0) phi += cfg.add_sigma * n01(rng);
    if (cfg.cterm_sigma > 0) phi += notch.process(cfg.cterm_sigma * n01(rng));
    return phi;
}

inline FluxNoiseConfig make_noise_config(const ResonatorParams& res,
                                         const SquidReadout& squid, double q_a,
                                         double fs) {
    FluxNoiseConfig cfg{};
    cfg.phi_x_phi0 = std::sqrt(squid.phi_x_sq(res.k) / kFluxQuantumSq);
    cfg.add_sigma = std::sqrt(squid.a_flux_psd * fs / 2.0);
    if (squid.c_flux_psd > 0) {
        // calibrate the shaper so its output PSD matches the C term at a
        // reference frequency in the analysis band
        NotchShaper probe(res.f0, squid.f1, q_a, fs);
        const double f_ref = res.f0 + 40.0;
        const double target = squid.c_flux_psd *
                              lorentz_shape(f_ref, res.f0, squid.f1, q_a).r;
        const double h2 = probe.power_response(f_ref, fs);
        cfg.cterm_sigma = std::sqrt(target * fs / (2.0 * h2));
    }
    return cfg;
}

} // namespace sim_detail

/// SQUID flux time series (Phi0 units) of the cantilever driven by thermal
/// force noise 4 k_B T k/(omega0 Q) plus a white nonthermal s_f0, read out
/// with additive noise A and the notch-shaped feedback term C. The
/// mechanical state is advanced by the exact discrete propagator and starts
/// in its stationary distribution.
inline std::vector<double> simulate_timeseries(const ResonatorParams& res,
                                               const SquidReadout& squid,
                                               double temperature, double q,
                                               double q_a, double s_f0,
                                               double duration, double fs,
                                               std::uint64_t seed) {
    res.validate();
    squid.validate();
    require(fs >= 10.0 * res.f0,
            "simulate_timeseries: undersampled request, need fs >= 10 f0");
    require(duration * res.f0 / q_a >= 10.0,
            "simulate_timeseries: duration must span >= 10 relaxation times");
    const std::size_t n = std::size_t(std::llround(duration * fs));
    const double s_force = 4.0 * kBoltzmann * temperature * res.k /
                               (res.omega0() * q) + s_f0;
    OscillatorPropagator prop(res.f0, q_a, res.mass(), s_force, 1.0 / fs);
    NotchShaper notch(res.f0, squid.f1, q_a, fs);
    auto cfg = sim_detail::make_noise_config(res, squid, q_a, fs);

    auto rng = make_rng(seed, 0);
    std::normal_distribution<double> n01;
    auto z = prop.sample_stationary(rng);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        z = prop.step(z, rng);
        out[i] = sim_detail::flux_sample(z, cfg, notch, rng, n01);
    }
    return out;
}

/// One acquisition frame drawn from an independent per-frame noise stream;
/// frames are statistically independent, so campaign output does not depend
/// on scheduling order.
inline std::vector<double> simulate_frame(const ResonatorParams& res,
                                          const SquidReadout& squid,
                                          double temperature, double q, double q_a,
                                          double s_f0, std::size_t frame_len,
                                          double fs, std::uint64_t seed,
                                          std::uint64_t frame_index) {
    const double s_force = 4.0 * kBoltzmann * temperature * res.k /
                               (res.omega0() * q) + s_f0;
    OscillatorPropagator prop(res.f0, q_a, res.mass(), s_force, 1.0 / fs);
    NotchShaper notch(res.f0, squid.f1, q_a, fs);
    auto cfg = sim_detail::make_noise_config(res, squid, q_a, fs);

    auto rng = make_rng(seed, frame_index + 1);
    std::normal_distribution<double> n01;
    auto z = prop.sample_stationary(rng);
    std::vector<double> out(frame_len);
    for (std::size_t i = 0; i < frame_len; ++i) {
        z = prop.step(z, rng);
        out[i] = sim_detail::flux_sample(z, cfg, notch, rng, n01);
    }
    return out;
}

/// Free decay at the carrier: x(t) = x0 e^{-pi f0 t / Q_a} cos(2 pi f0 t + phi)
/// plus white readout noise. Envelope time constant tau = Q_a / (pi f0).
inline std::vector<double> simulate_ringdown(const ResonatorParams& res, double q_a,
                                             double x0, double duration, double fs,
                                             double noise_floor, std::uint64_t seed) {
    require(x0 > 0, "simulate_ringdown: x0 must be > 0");
    require(q_a > 0, "simulate_ringdown: Q_a must be > 0");
    require(fs > 4.0 * res.f0, "simulate_ringdown: undersampled, need fs > 4 f0");
    const std::size_t n = std::size_t(std::llround(duration * fs));
    require(n >= 16, "simulate_ringdown: duration too short");
    auto rng = make_rng(seed, 0);
    std::normal_distribution<double> n01;
    std::uniform_real_distribution<double> uphase(0.0, 2.0 * kPi);
    const double phase = uphase(rng);
    const double decay = kPi * res.f0 / q_a;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = double(i) / fs;
        out[i] = x0 * std::exp(-decay * t) * std::cos(2.0 * kPi * res.f0 * t + phase);
        if (noise_floor > 0) out[i] += noise_floor * n01(rng);
    }
    return out;
}

/// Demodulated ringdown record: envelope samples a(t) = x0 e^{-pi f0 t/Q_a}
/// plus white noise, at a low record rate. This is what the campaign stores
/// per (temperature, gain) point.
struct EnvelopeRecord {
    std::vector<double> t;    // s
    std::vector<double> amp;  // arbitrary units
    double fs;                // record rate, Hz
};

inline EnvelopeRecord simulate_ringdown_envelope(double f0, double q_a, double x0,
                                                 double duration, double fs_env,
                                                 double noise_sigma,
                                                 std::uint64_t seed) {
    require(f0 > 0 && q_a > 0 && x0 > 0, "simulate_ringdown_envelope: bad parameters");
    require(fs_env > 0 && duration > 0, "simulate_ringdown_envelope: bad timing");
    const std::size_t n = std::size_t(std::llround(duration * fs_env));
    require(n >= 8, "simulate_ringdown_envelope: too few samples");
    auto rng = make_rng(seed, 0);
    std::normal_distribution<double> n01;
    const double decay = kPi * f0 / q_a;
    EnvelopeRecord rec;
    rec.fs = fs_env;
    rec.t.resize(n);
    rec.amp.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        rec.t[i] = double(i) / fs_env;
        rec.amp[i] = x0 * std::exp(-decay * rec.t[i]) + noise_sigma * n01(rng);
    }
    return rec;
}

} // namespace cslkit
