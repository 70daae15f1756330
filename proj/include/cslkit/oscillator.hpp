#pragma once

#include <array>
#include <cmath>
#include <random>

#include "cslkit/constants.hpp"
#include "cslkit/errors.hpp"

namespace cslkit {

/// Exact one-step propagator for the damped harmonic oscillator driven by
/// white force noise,
///
///   dx = v dt,   dv = -omega0^2 x dt - (omega0/Q_a) v dt + (1/m) dF,
///
/// with one-sided force PSD S_F (so dF has intensity S_F/2).
/// The state transition over a step dt is the matrix exponential Phi, and
/// the process-noise covariance follows from the stationary Lyapunov
/// identity  Sigma_dt = Sigma_st - Phi Sigma_st Phi^T, which makes the
/// discrete chain's stationary distribution exact regardless of step size
/// (no Euler-Maruyama damping bias at Q ~ 1e7).
class OscillatorPropagator {
public:
    OscillatorPropagator(double f0, double q_a, double mass, double force_psd,
                         double dt) {
        require(f0 > 0 && q_a > 0.5 && mass > 0 && dt > 0,
                "OscillatorPropagator: need f0 > 0, Q_a > 0.5, mass > 0, dt > 0");
        require(force_psd >= 0, "OscillatorPropagator: force PSD must be >= 0");
        const double w0 = 2.0 * kPi * f0;
        const double gam = w0 / q_a;                     // velocity damping rate
        const double wd = w0 * std::sqrt(1.0 - 1.0 / (4.0 * q_a * q_a));
        const double al = 0.5 * gam;
        const double e = std::exp(-al * dt);
        const double c = std::cos(wd * dt), s = std::sin(wd * dt);
        phi_[0][0] = e * (c + al / wd * s);
        phi_[0][1] = e * s / wd;
        phi_[1][0] = -e * w0 * w0 / wd * s;
        phi_[1][1] = e * (c - al / wd * s);

        const double diff = force_psd / (2.0 * mass * mass);  // accel^2 * s
        var_x_ = diff / (2.0 * gam * w0 * w0);
        var_v_ = diff / (2.0 * gam);
        // Sigma_dt = Sigma_st - Phi Sigma_st Phi^T (Sigma_st is diagonal)
        const double sxx = var_x_ - (phi_[0][0] * phi_[0][0] * var_x_ +
                                     phi_[0][1] * phi_[0][1] * var_v_);
        const double sxv = -(phi_[0][0] * phi_[1][0] * var_x_ +
                             phi_[0][1] * phi_[1][1] * var_v_);
        const double svv = var_v_ - (phi_[1][0] * phi_[1][0] * var_x_ +
                                     phi_[1][1] * phi_[1][1] * var_v_);
        l11_ = std::sqrt(std::max(sxx, 0.0));
        l21_ = l11_ > 0 ? sxv / l11_ : 0.0;
        l22_ = std::sqrt(std::max(svv - l21_ * l21_, 0.0));
    }

    double stationary_var_x() const { return var_x_; }
    double stationary_var_v() const { return var_v_; }

    /// Draw (x, v) from the stationary distribution.
    template <class Rng>
    std::array<double, 2> sample_stationary(Rng& rng) const {
        std::normal_distribution<double> n01;
        return {std::sqrt(var_x_) * n01(rng), std::sqrt(var_v_) * n01(rng)};
    }

    /// Advance the state one step, deterministic part only.
    std::array<double, 2> step_deterministic(const std::array<double, 2>& z) const {
        return {phi_[0][0] * z[0] + phi_[0][1] * z[1],
                phi_[1][0] * z[0] + phi_[1][1] * z[1]};
    }

    template <class Rng>
    std::array<double, 2> step(const std::array<double, 2>& z, Rng& rng) const {
        std::normal_distribution<double> n01;
        const double n1 = n01(rng), n2 = n01(rng);
        auto zn = step_deterministic(z);
        zn[0] += l11_ * n1;
        zn[1] += l21_ * n1 + l22_ * n2;
        return zn;
    }

private:
    double phi_[2][2];
    double var_x_, var_v_;
    double l11_, l21_, l22_;
};

/// Discrete biquad with transmission zeros pinned on the unit circle at f1
/// and poles matched to the mechanical resonance (matched-Z placement).
/// Shapes white noise into the feedback-backaction term of the flux PSD;
/// minimum-phase by construction. Gain is calibrated by the caller.
class NotchShaper {
public:
    NotchShaper(double f0, double f1, double q_a, double fs) {
        require(fs > 2.0 * f0 && fs > 2.0 * f1, "NotchShaper: sample rate too low");
        const double w0 = 2.0 * kPi * f0;
        const double al = 0.5 * w0 / q_a;
        const double wd = w0 * std::sqrt(1.0 - 1.0 / (4.0 * q_a * q_a));
        const double dt = 1.0 / fs;
        const double r = std::exp(-al * dt);
        b1_ = -2.0 * std::cos(2.0 * kPi * f1 * dt);
        a1_ = -2.0 * r * std::cos(wd * dt);
        a2_ = r * r;
    }

    /// |H(e^{i 2 pi f / fs})|^2 with unit numerator gain.
    double power_response(double f, double fs) const {
        const double th = 2.0 * kPi * f / fs;
        const auto mag2 = [&](double c1, double c2) {
            const double re = 1.0 + c1 * std::cos(th) + c2 * std::cos(2.0 * th);
            const double im = -(c1 * std::sin(th) + c2 * std::sin(2.0 * th));
            return re * re + im * im;
        };
        return mag2(b1_, 1.0) / mag2(a1_, a2_);
    }

    double process(double in) {
        // direct form II transposed
        const double out = in + s1_;
        s1_ = b1_ * in - a1_ * out + s2_;
        s2_ = in - a2_ * out;
        return out;
    }

private:
    double b1_, a1_, a2_;
    double s1_ = 0.0, s2_ = 0.0;
};

} // namespace cslkit
