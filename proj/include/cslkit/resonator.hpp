#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "cslkit/constants.hpp"
#include "cslkit/errors.hpp"
#include "cslkit/mass_model.hpp"

namespace cslkit {

/// One row of the measured Q(T) input table.
struct QPoint {
    double temperature;  // K
    double q;            // intrinsic quality factor
    double sigma_q = 0;  // 1-sigma on q, 0 if exact/synthetic
};

/// Cantilever fundamental mode. The angular frequency is always derived
/// from f0, never stored.
struct ResonatorParams {
    double f0;                     // Hz
    double k;                      // N/m
    double dk_rel;                 // relative 1-sigma on k
    std::vector<QPoint> q_table;   // strictly increasing temperatures
    std::optional<MassModel> mass_model;
    double effective_length = 0;   // m, torque-to-force arm l

    double omega0() const { return 2.0 * kPi * f0; }
    double mass() const { return k / (omega0() * omega0()); }

    void validate() const {
        require(f0 > 0, "ResonatorParams: f0 must be > 0");
        require(k > 0, "ResonatorParams: k must be > 0");
        require(dk_rel >= 0, "ResonatorParams: dk_rel must be >= 0");
        double prev = -1;
        for (const auto& qp : q_table) {
            require(qp.q > 0, "ResonatorParams: all Q must be > 0");
            require(qp.temperature > prev,
                    "ResonatorParams: q_table temperatures must be strictly increasing");
            prev = qp.temperature;
        }
    }

    /// Q at temperature T: exact at table nodes, log-log interpolation
    /// between them (the observed Q(T) is close to a power law).
    double q_at(double T) const {
        require(!q_table.empty(), "ResonatorParams: empty q_table");
        require(T > 0, "ResonatorParams: temperature must be > 0");
        if (q_table.size() == 1) return q_table.front().q;
        require(T >= q_table.front().temperature && T <= q_table.back().temperature,
                "ResonatorParams: temperature outside q_table range");
        for (std::size_t i = 1; i < q_table.size(); ++i) {
            if (T <= q_table[i].temperature) {
                const auto& a = q_table[i - 1];
                const auto& b = q_table[i];
                if (T == a.temperature) return a.q;
                if (T == b.temperature) return b.q;
                const double t = (std::log(T) - std::log(a.temperature)) /
                                 (std::log(b.temperature) - std::log(a.temperature));
                return std::exp(std::log(a.q) + t * (std::log(b.q) - std::log(a.q)));
            }
        }
        return q_table.back().q;
    }
};

/// SQUID readout model: additive noise floor A, feedback backaction term C
/// with its antiresonance f1, displacement coupling, magnetic-spring
/// coefficient, and the Clarke-Tesche backaction parameters.
struct SquidReadout {
    double a_flux_psd;                   // (Phi0)^2/Hz additive wideband noise
    double c_flux_psd;                   // (Phi0)^2/Hz feedback term amplitude
    double f1;                           // Hz antiresonance
    double coupling;                     // H, Phi_x^2/k
    double spring_coeff = 0;             // c in 1/Q_a = 1/Q + c/|G|
    std::vector<double> gain_magnitudes; // |G| values of the ringdown sweep
    double gamma = 11;                   // Clarke-Tesche factor
    double t_sq = 0.4;                   // K, SQUID electron temperature
    double r_sq = 8;                     // Ohm, shunt resistance

    /// Phi_x^2 in Wb^2/m^2, given the spring constant it was measured with.
    double phi_x_sq(double k) const { return coupling * k; }

    void validate() const {
        require(a_flux_psd >= 0, "SquidReadout: A must be >= 0");
        require(c_flux_psd >= 0, "SquidReadout: C must be >= 0");
        require(f1 > 0, "SquidReadout: f1 must be > 0");
        require(coupling > 0, "SquidReadout: coupling must be > 0");
        for (double g : gain_magnitudes)
            require(g > 10, "SquidReadout: loop gains must satisfy |G| >> 1");
        require(gamma > 0 && t_sq > 0 && r_sq > 0,
                "SquidReadout: backaction parameters must be > 0");
    }
};

} // namespace cslkit
