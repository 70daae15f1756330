#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cslkit/constants.hpp"
#include "cslkit/errors.hpp"
#include "cslkit/mass_model.hpp"
#include "cslkit/quadrature.hpp"

namespace cslkit {

// Collapse-noise force spectral density for homogeneous mass distributions:
//
//   S_F = (2 hbar^2 lambda r_C^3 / (pi^{3/2} m0^2)) *
//         Integral d^3k  (k.axis)^2  exp(-k^2 r_C^2)  |mu~(k)|^2
//
// with mu~ the Fourier transform of the mass density. For spheres and boxes
// the k-space integral has closed forms (derived below); those are the
// production path. An adaptive radial quadrature and a 3D Monte Carlo
// integral serve as independent oracles in the tests. Cross terms between
// bodies of a composite are off by default (rigid-sum approximation for
// separated bodies) and evaluated by tensor Gauss-Hermite quadrature when
// requested.

/// mu~ for a homogeneous sphere: mass * 3 (sin u - u cos u) / u^3, u = kR.
/// The u -> 0 limit is handled by series; |result| <= mass for all k.
inline double sphere_form_factor(double k_mag, double radius, double mass) {
    require(k_mag >= 0, "sphere_form_factor: k must be >= 0");
    require(radius > 0 && mass > 0, "sphere_form_factor: radius and mass must be > 0");
    const double u = k_mag * radius;
    if (u < 0.1) {
        const double u2 = u * u;
        // 3 j1(u)/u = 1 - u^2/10 + u^4/280 - u^6/15120 + ...
        return mass * (1.0 - u2 / 10.0 + u2 * u2 / 280.0 - u2 * u2 * u2 / 15120.0);
    }
    return mass * 3.0 * (std::sin(u) - u * std::cos(u)) / (u * u * u);
}

inline double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

/// mu~ for a homogeneous box: mass * prod_i sinc(k_i L_i / 2).
inline double cuboid_form_factor(const std::array<double, 3>& k_vec,
                                 const std::array<double, 3>& dims, double mass) {
    require(dims[0] > 0 && dims[1] > 0 && dims[2] > 0,
            "cuboid_form_factor: dims must be > 0");
    require(mass > 0, "cuboid_form_factor: mass must be > 0");
    double v = mass;
    for (int i = 0; i < 3; ++i) v *= sinc(0.5 * k_vec[i] * dims[i]);
    return v;
}

/// Form factor of one body's shape at wave vector k (own center frame).
inline double shape_form_factor(const MassModel::Shape& s,
                                const std::array<double, 3>& k) {
    if (std::holds_alternative<MassModel::Sphere>(s)) {
        const auto& sp = std::get<MassModel::Sphere>(s);
        const double km = std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
        return sphere_form_factor(km, sp.radius, MassModel::shape_mass(s));
    }
    const auto& cb = std::get<MassModel::Cuboid>(s);
    return cuboid_form_factor(k, cb.dims, MassModel::shape_mass(s));
}

namespace csl_detail {

// g(x) = (x - 2) + (x + 2) e^{-x}; the sphere k-integral reduces to
//   I_sphere = 3 pi^{3/2} M^2 rc g(R^2/rc^2) / R^6  (see below).
// Series for small x avoids the cancellation (g ~ x^3/6). Coefficient of
// x^n is (-1)^n (2-n)/n!.
inline double sphere_bracket(double x) {
    if (x < 0.2) {
        return x * x * x * (1.0 / 6.0 +
               x * (-1.0 / 12.0 + x * (1.0 / 40.0 + x * (-1.0 / 180.0 +
               x * (1.0 / 1008.0 + x * (-1.0 / 6720.0 + x / 51840.0))))));
    }
    return (x - 2.0) + (x + 2.0) * std::exp(-x);
}

/// Radial factor for a sphere of radius R at correlation length a:
/// integral over all k of k_x^2 e^{-k^2 a^2} |mu~|^2 with the angular
/// average k_x^2 -> k^2/3 already applied.
inline double sphere_k_integral(double radius, double a, double mass) {
    const double x = (radius / a) * (radius / a);
    const double r6 = std::pow(radius, 6);
    return 3.0 * std::pow(kPi, 1.5) * mass * mass * a * sphere_bracket(x) / r6;
}

// 1D factors for the separable box integral:
//   J1(L) = int k^2 e^{-a^2 k^2} sinc^2(kL/2) dk   (motion axis)
//   J0(L) = int     e^{-a^2 k^2} sinc^2(kL/2) dk   (transverse axes)
// both over the full line.
inline double box_j1(double L, double a) {
    const double s = 0.5 * L / a;
    return -2.0 * std::sqrt(kPi) / (a * L * L) * std::expm1(-s * s);
}

inline double box_j0(double L, double a) {
    const double s = 0.5 * L / a;
    return 2.0 * kPi / L * std::erf(s) +
           4.0 * std::sqrt(kPi) * a / (L * L) * std::expm1(-s * s);
}

/// Box k-integral for motion along box axis i.
inline double cuboid_k_integral_axis(const std::array<double, 3>& dims, double a,
                                     double mass, int axis_i) {
    double v = mass * mass;
    for (int i = 0; i < 3; ++i)
        v *= (i == axis_i) ? box_j1(dims[i], a) : box_j0(dims[i], a);
    return v;
}

/// Box k-integral for an arbitrary unit axis: cross moments k_i k_j vanish
/// by parity, so (k.axis)^2 contributes as sum_i axis_i^2 k_i^2.
inline double cuboid_k_integral(const std::array<double, 3>& dims, double a,
                                double mass, const std::array<double, 3>& axis) {
    double v = 0.0;
    for (int i = 0; i < 3; ++i)
        if (axis[i] != 0.0)
            v += axis[i] * axis[i] * cuboid_k_integral_axis(dims, a, mass, i);
    return v;
}

inline double body_k_integral(const MassModel::Body& b, double a,
                              const std::array<double, 3>& axis) {
    if (std::holds_alternative<MassModel::Sphere>(b.shape)) {
        const auto& sp = std::get<MassModel::Sphere>(b.shape);
        return sphere_k_integral(sp.radius, a, MassModel::shape_mass(b.shape));
    }
    const auto& cb = std::get<MassModel::Cuboid>(b.shape);
    return cuboid_k_integral(cb.dims, a, MassModel::shape_mass(b.shape), axis);
}

inline double body_extent(const MassModel::Body& b) {
    if (std::holds_alternative<MassModel::Sphere>(b.shape))
        return 2.0 * std::get<MassModel::Sphere>(b.shape).radius;
    const auto& d = std::get<MassModel::Cuboid>(b.shape).dims;
    return std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
}

/// Cross term between two bodies, tensor Gauss-Hermite in u = k * rc:
///   2 w_j w_l int d^3k (k.axis)^2 e^{-k^2 rc^2} mu~_j mu~_l cos(k.(d_j - d_l))
/// Node count follows the fastest oscillation scale; the grid is refined
/// once and a relative error above tol raises numerical_error.
inline double cross_k_integral(const MassModel::Body& bj, const MassModel::Body& bl,
                               double rc, const std::array<double, 3>& axis,
                               double tol) {
    std::array<double, 3> d{bj.offset[0] - bl.offset[0],
                            bj.offset[1] - bl.offset[1],
                            bj.offset[2] - bl.offset[2]};
    const double dmag = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
    const double scale = (body_extent(bj) + body_extent(bl) + dmag) / rc;
    int n = std::max(32, int(3.0 * scale) + 8);
    const int n_cap = 160;
    if (n > n_cap)
        throw numerical_error(
            "csl_force_psd: cross-term quadrature needs too fine a grid "
            "(bodies much larger than r_C); disable cross terms or shrink the instance");

    auto eval = [&](int npts) {
        std::vector<double> xs, ws;
        gauss_hermite(npts, xs, ws);
        double sum = 0.0;
        std::array<double, 3> k{};
        for (int ix = 0; ix < npts; ++ix) {
            k[0] = xs[ix] / rc;
            for (int iy = 0; iy < npts; ++iy) {
                k[1] = xs[iy] / rc;
                double inner = 0.0;
                for (int iz = 0; iz < npts; ++iz) {
                    k[2] = xs[iz] / rc;
                    const double ka = k[0] * axis[0] + k[1] * axis[1] + k[2] * axis[2];
                    const double ff = shape_form_factor(bj.shape, k) *
                                      shape_form_factor(bl.shape, k);
                    const double phase = std::cos(k[0] * d[0] + k[1] * d[1] + k[2] * d[2]);
                    inner += ws[iz] * ka * ka * ff * phase;
                }
                sum += ws[ix] * ws[iy] * inner;
            }
        }
        return sum / (rc * rc * rc);
    };

    const double v1 = eval(n);
    const double v2 = eval(n + 12);
    const double err = std::abs(v2 - v1);
    if (err > tol * std::abs(v2) && err > tol)
        throw numerical_error("csl_force_psd: cross-term quadrature not converged");
    return 2.0 * bj.weight * bl.weight * v2;
}

} // namespace csl_detail

struct CslOptions {
    /// Include interference (cross) terms between composite bodies. Off by
    /// default: well-separated bodies contribute oscillatory cross terms
    /// that average to zero, and the rigid diagonal sum is the documented
    /// default composition.
    bool cross_terms = false;
    double cross_tol = 1e-4;
};

/// One-sided white force PSD from the collapse noise, N^2/Hz.
/// Exactly linear in lambda; axis must be unit length.
inline double csl_force_psd(const MassModel& model, double lambda, double r_c,
                            const std::array<double, 3>& axis = {1, 0, 0},
                            const CslOptions& opt = {}) {
    require(lambda >= 0, "csl_force_psd: lambda must be >= 0");
    require(r_c > 0, "csl_force_psd: r_C must be > 0");
    const double an = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (std::abs(an - 1.0) > 1e-9)
        throw validation_error("csl_force_psd: axis must be normalized");
    if (lambda == 0.0) return 0.0;

    double kint = 0.0;
    const auto& bodies = model.bodies();
    for (const auto& b : bodies)
        kint += b.weight * b.weight * csl_detail::body_k_integral(b, r_c, axis);
    if (opt.cross_terms) {
        for (std::size_t j = 0; j < bodies.size(); ++j)
            for (std::size_t l = j + 1; l < bodies.size(); ++l)
                kint += csl_detail::cross_k_integral(bodies[j], bodies[l], r_c,
                                                     axis, opt.cross_tol);
    }
    const double pref = 2.0 * kHbar * kHbar * lambda * r_c * r_c * r_c /
                        (std::pow(kPi, 1.5) * kNucleonMass * kNucleonMass);
    return pref * kint;
}

struct ExclusionPoint {
    double r_c;         // m
    double lambda_max;  // 1/s
    bool ok;            // false if the k-integral failed at this r_C
    std::string note;   // failure message when !ok
};

struct ExclusionCurve {
    std::vector<ExclusionPoint> points;
    double s_f0_used;       // N^2/Hz
    std::string mass_model_id;
};

/// Default Fig.-4-style grid: 60 log-spaced points over [1e-8, 1e-4] m.
inline std::vector<double> default_rc_grid(int n = 60, double lo = 1e-8,
                                           double hi = 1e-4) {
    require(n >= 1 && lo > 0 && hi > lo, "default_rc_grid: bad parameters");
    std::vector<double> g(n);
    if (n == 1) {
        g[0] = lo;
        return g;
    }
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i)
        g[i] = std::exp(llo + (lhi - llo) * double(i) / double(n - 1));
    return g;
}

/// Maximum collapse rate compatible with a residual force noise s_f0:
/// lambda_max(r_C) = s_f0 / S_F(model, lambda=1, r_C). Failed points are
/// flagged, never dropped.
inline ExclusionCurve exclusion_curve(double s_f0, const MassModel& model,
                                      const std::vector<double>& rc_grid,
                                      const std::array<double, 3>& axis = {1, 0, 0},
                                      const CslOptions& opt = {}) {
    require(s_f0 > 0, "exclusion_curve: s_f0 must be > 0");
    require(!rc_grid.empty(), "exclusion_curve: empty r_C grid");
    double prev = 0.0;
    for (double rc : rc_grid) {
        require(rc > prev, "exclusion_curve: r_C grid must be strictly increasing");
        require(rc >= 1e-8 && rc <= 1e-4,
                "exclusion_curve: r_C grid must lie within [1e-8, 1e-4] m");
        prev = rc;
    }
    ExclusionCurve curve;
    curve.s_f0_used = s_f0;
    curve.mass_model_id = model.describe();
    curve.points.reserve(rc_grid.size());
    for (double rc : rc_grid) {
        ExclusionPoint p{rc, 0.0, true, {}};
        try {
            const double s1 = csl_force_psd(model, 1.0, rc, axis, opt);
            if (!(s1 > 0)) throw numerical_error("degenerate k-integral");
            p.lambda_max = s_f0 / s1;
        } catch (const numerical_error& e) {
            p.ok = false;
            p.note = e.what();
        }
        curve.points.push_back(p);
    }
    return curve;
}

} // namespace cslkit
