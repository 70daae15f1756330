#pragma once

#include <string>
#include <string_view>

#include "cslkit/constants.hpp"
#include "cslkit/errors.hpp"

namespace cslkit {

/// Units that appear at I/O boundaries. Everything internal is SI except
/// magnetic flux, which is carried in units of the flux quantum Phi0
/// (the SQUID's natural calibration).
enum class Unit {
    phi0_sq_per_hz,   // flux PSD, (Phi0)^2/Hz
    wb_sq_per_hz,     // flux PSD, Wb^2/Hz
    an_sq_per_hz,     // force PSD, aN^2/Hz
    n_sq_per_hz,      // force PSD, N^2/Hz
    femtohenry,       // inductance
    henry,            // inductance
    nanokelvin,       // temperature
    kelvin,           // temperature
};

inline std::string_view unit_name(Unit u) {
    switch (u) {
        case Unit::phi0_sq_per_hz: return "phi0^2/Hz";
        case Unit::wb_sq_per_hz:   return "Wb^2/Hz";
        case Unit::an_sq_per_hz:   return "aN^2/Hz";
        case Unit::n_sq_per_hz:    return "N^2/Hz";
        case Unit::femtohenry:     return "fH";
        case Unit::henry:          return "H";
        case Unit::nanokelvin:     return "nK";
        case Unit::kelvin:         return "K";
    }
    return "?";
}

namespace detail {

// Dimension group and scale factor to that group's SI anchor.
struct UnitInfo {
    int group;
    double to_si;
};

inline UnitInfo unit_info(Unit u) {
    switch (u) {
        case Unit::phi0_sq_per_hz: return {0, kFluxQuantumSq};
        case Unit::wb_sq_per_hz:   return {0, 1.0};
        case Unit::an_sq_per_hz:   return {1, 1e-36};
        case Unit::n_sq_per_hz:    return {1, 1.0};
        case Unit::femtohenry:     return {2, 1e-15};
        case Unit::henry:          return {2, 1.0};
        case Unit::nanokelvin:     return {3, 1e-9};
        case Unit::kelvin:         return {3, 1.0};
    }
    return {-1, 0.0};
}

} // namespace detail

/// Exact multiplicative conversion between the supported unit pairs.
/// Rejects pairs that do not share a dimension.
inline double convert_units(double value, Unit from, Unit to) {
    const auto fi = detail::unit_info(from);
    const auto ti = detail::unit_info(to);
    if (fi.group != ti.group) {
        throw validation_error("convert_units: unsupported unit pair " +
                               std::string(unit_name(from)) + " -> " +
                               std::string(unit_name(to)));
    }
    if (from == to) return value;
    return value * (fi.to_si / ti.to_si);
}

} // namespace cslkit
