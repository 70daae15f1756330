#pragma once

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "cslkit/errors.hpp"

namespace cslkit {

// Gauss-Kronrod 7-15 panel plus a simple interval-splitting driver.
// Node/weight table from the QUADPACK dqk15 rule.

namespace gk {

inline constexpr double xgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
inline constexpr double wgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class F>
inline std::pair<double, double> panel(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double k15 = wgk[7] * fc;
    double g7 = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        const double fsum = f(c - dx) + f(c + dx);
        k15 += wgk[j] * fsum;
        if (j % 2 == 1) g7 += wg[j / 2] * fsum;
    }
    k15 *= h;
    g7 *= h;
    return {k15, std::abs(k15 - g7)};
}

} // namespace gk

struct QuadResult {
    double value;
    double error_estimate;
};

/// Adaptive Gauss-Kronrod integration of f over [a, b]. Splits the worst
/// interval until the summed error estimate meets the tolerance or the
/// interval budget is exhausted (then throws numerical_error).
template <class F>
inline QuadResult integrate_adaptive(const F& f, double a, double b,
                                     double rel_tol = 1e-10,
                                     double abs_tol = 0.0,
                                     int max_intervals = 200000) {
    struct Seg {
        double a, b, val, err;
    };
    auto [v0, e0] = gk::panel(f, a, b);
    std::vector<Seg> segs{{a, b, v0, e0}};
    double total = v0, toterr = e0;
    while (int(segs.size()) < max_intervals) {
        if (toterr <= abs_tol || toterr <= rel_tol * std::abs(total)) break;
        // split the segment with the largest error
        std::size_t worst = 0;
        for (std::size_t i = 1; i < segs.size(); ++i)
            if (segs[i].err > segs[worst].err) worst = i;
        Seg s = segs[worst];
        const double mid = 0.5 * (s.a + s.b);
        if (mid == s.a || mid == s.b) break;  // interval at double resolution
        auto [vl, el] = gk::panel(f, s.a, mid);
        auto [vr, er] = gk::panel(f, mid, s.b);
        total += vl + vr - s.val;
        toterr += el + er - s.err;
        segs[worst] = {s.a, mid, vl, el};
        segs.push_back({mid, s.b, vr, er});
    }
    if (toterr > abs_tol && toterr > rel_tol * std::abs(total) * 10.0 &&
        int(segs.size()) >= max_intervals) {
        throw numerical_error("integrate_adaptive: interval budget exhausted");
    }
    return {total, toterr};
}

/// Gauss-Hermite nodes/weights for weight exp(-x^2) on (-inf, inf),
/// by Newton iteration on the Hermite recurrence.
inline void gauss_hermite(int n, std::vector<double>& x, std::vector<double>& w) {
    require(n >= 1, "gauss_hermite: n must be >= 1");
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const double pim4 = 0.7511255444649425;  // pi^(-1/4)
    const int m = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < m; ++i) {
        if (i == 0)
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
        else if (i == 1)
            z -= 1.14 * std::pow(double(n), 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * x[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * x[1];
        else
            z = 2.0 * z - x[i - 2];
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = pim4, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 -
                     std::sqrt(double(j) / (j + 1.0)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15 * (1.0 + std::abs(z))) break;
        }
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / (pp * pp);
        w[n - 1 - i] = w[i];
    }
}

} // namespace cslkit
