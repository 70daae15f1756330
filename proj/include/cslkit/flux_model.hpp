#pragma once

#include <cmath>
#include <vector>

#include "cslkit/constants.hpp"
#include "cslkit/errors.hpp"
#include "cslkit/resonator.hpp"
#include "cslkit/spectrum.hpp"

namespace cslkit {

/// Apparent quality factor under the SQUID magnetic spring:
/// 1/Q_a = 1/Q + c/|G|. Q_a <= Q whenever c >= 0; a negative c strong
/// enough to push 1/Q_a to zero or below is rejected as net antidamping.
inline double apparent_q(double q, double c, double gain_mag) {
    require(q > 0, "apparent_q: Q must be > 0");
    require(gain_mag > 0, "apparent_q: |G| must be > 0");
    const double inv = 1.0 / q + c / gain_mag;
    if (!(inv > 0))
        throw validation_error("apparent_q: 1/Q_a <= 0 (unphysical net antidamping)");
    return 1.0 / inv;
}

/// The two fixed-shape factors of the flux PSD template:
///   S(f) = A + [B f0^4 + C (f^2 - f1^2)^2] / [(f^2 - f0^2)^2 + (f f0/Q_a)^2]
/// returned as (P, R) with S = A + B*P + C*R.
struct LorentzShape {
    double p;
    double r;
};

inline LorentzShape lorentz_shape(double f, double f0, double f1, double q_a) {
    const double f2 = f * f;
    const double d1 = f2 - f0 * f0;
    const double d2 = f * f0 / q_a;
    const double den = d1 * d1 + d2 * d2;
    const double z = f2 - f1 * f1;
    return {f0 * f0 * f0 * f0 / den, z * z / den};
}

inline double flux_psd_model(double f, double a, double b, double c, double f0,
                             double f1, double q_a) {
    const auto s = lorentz_shape(f, f0, f1, q_a);
    return a + b * s.p + c * s.r;
}

/// Lorentzian amplitude implied by the physics: the total force noise
/// (thermal 4 k_B T k / (omega0 Q) plus a white nonthermal s_f0) referred
/// to flux through the coupling, in (Phi0)^2/Hz.
inline double lorentz_amplitude_b(const ResonatorParams& res, const SquidReadout& squid,
                                  double temperature, double q, double s_f0) {
    require(temperature >= 0, "lorentz_amplitude_b: temperature must be >= 0");
    require(q > 0, "lorentz_amplitude_b: Q must be > 0");
    require(s_f0 >= 0, "lorentz_amplitude_b: s_f0 must be >= 0");
    const double sx_num = s_f0 / (res.k * res.k) +
                          4.0 * kBoltzmann * temperature / (res.k * res.omega0() * q);
    return sx_num * squid.phi_x_sq(res.k) / kFluxQuantumSq;
}

/// Deterministic model spectrum on f_grid, flux units (Phi0)^2/Hz.
inline Spectrum expected_flux_psd(const ResonatorParams& res, const SquidReadout& squid,
                                  double temperature, double q, double q_a,
                                  double s_f0, const std::vector<double>& f_grid) {
    res.validate();
    squid.validate();
    require(q_a > 0, "expected_flux_psd: Q_a must be > 0");
    require(!f_grid.empty(), "expected_flux_psd: empty grid");
    for (double f : f_grid)
        require(f > 0, "expected_flux_psd: frequencies must be > 0");
    const double b = lorentz_amplitude_b(res, squid, temperature, q, s_f0);
    std::vector<double> psd(f_grid.size());
    for (std::size_t i = 0; i < f_grid.size(); ++i)
        psd[i] = flux_psd_model(f_grid[i], squid.a_flux_psd, b, squid.c_flux_psd,
                                res.f0, squid.f1, q_a);
    return Spectrum::model(std::vector<double>(f_grid), std::move(psd),
                           Unit::phi0_sq_per_hz);
}

} // namespace cslkit
