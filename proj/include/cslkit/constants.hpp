#pragma once

namespace cslkit {

/// Fundamental constants, CODATA 2018. All SI.
struct PhysConstants {
    double hbar = 1.054571817e-34;  // J s
    double k_B  = 1.380649e-23;     // J/K (exact)
    double m0   = 1.67262e-27;      // kg, reference nucleon mass
    double Phi0 = 2.067833848e-15;  // Wb, flux quantum h/2e
};

inline constexpr double kHbar = 1.054571817e-34;
inline constexpr double kBoltzmann = 1.380649e-23;
inline constexpr double kNucleonMass = 1.67262e-27;
inline constexpr double kFluxQuantum = 2.067833848e-15;
inline constexpr double kFluxQuantumSq = kFluxQuantum * kFluxQuantum;

inline constexpr double kPi = 3.14159265358979323846;

} // namespace cslkit
