#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "cslkit/errors.hpp"
#include "cslkit/units.hpp"

namespace cslkit {

/// One-sided power spectral density on a uniform frequency grid, with the
/// per-bin relative standard error of an n_av-frame average.
///
/// Immutable value data after construction; validated on construction:
/// grid uniform to 1 part in 1e9, psd >= 0 everywhere.
class Spectrum {
public:
    Spectrum(std::vector<double> f, std::vector<double> psd,
             std::vector<double> rel_err, int n_av, Unit unit)
        : f_(std::move(f)), psd_(std::move(psd)), rel_err_(std::move(rel_err)),
          n_av_(n_av), unit_(unit) {
        validate();
    }

    /// Averaged-measurement constructor: rel_err = 1/sqrt(n_av) in every bin.
    static Spectrum averaged(std::vector<double> f, std::vector<double> psd,
                             int n_av, Unit unit) {
        require(n_av >= 1, "Spectrum: n_av must be >= 1");
        std::vector<double> re(f.size(), 1.0 / std::sqrt(double(n_av)));
        return Spectrum(std::move(f), std::move(psd), std::move(re), n_av, unit);
    }

    /// Deterministic model spectrum (no sampling error).
    static Spectrum model(std::vector<double> f, std::vector<double> psd, Unit unit) {
        std::vector<double> re(f.size(), 0.0);
        return Spectrum(std::move(f), std::move(psd), std::move(re), 1, unit);
    }

    const std::vector<double>& f() const { return f_; }
    const std::vector<double>& psd() const { return psd_; }
    const std::vector<double>& rel_err() const { return rel_err_; }
    int n_av() const { return n_av_; }
    Unit unit() const { return unit_; }
    double df() const { return df_; }
    std::size_t size() const { return f_.size(); }

    /// First/last grid bins carry DC and (for full periodograms) Nyquist
    /// content; they are flagged here and skipped by band selection,
    /// never deleted.
    bool bin_flagged(std::size_t i) const {
        return (flag_dc_ && i == 0) || (flag_nyquist_ && i + 1 == f_.size());
    }
    void flag_edges(bool dc, bool nyquist) {
        flag_dc_ = dc;
        flag_nyquist_ = nyquist;
    }

    /// Indices with f in [lo, hi], skipping flagged edge bins.
    std::vector<std::size_t> band_indices(double lo, double hi) const {
        require(lo < hi, "Spectrum: band must have lo < hi");
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < f_.size(); ++i) {
            if (bin_flagged(i)) continue;
            if (f_[i] >= lo && f_[i] <= hi) out.push_back(i);
        }
        return out;
    }

private:
    void validate() {
        require(f_.size() >= 2, "Spectrum: need at least two bins");
        require(psd_.size() == f_.size() && rel_err_.size() == f_.size(),
                "Spectrum: f/psd/rel_err size mismatch");
        require(n_av_ >= 1, "Spectrum: n_av must be >= 1");
        df_ = f_[1] - f_[0];
        require(df_ > 0, "Spectrum: grid must be increasing");
        for (std::size_t i = 1; i < f_.size(); ++i) {
            const double step = f_[i] - f_[i - 1];
            if (std::abs(step - df_) > 1e-9 * df_)
                throw validation_error("Spectrum: grid not uniform to 1e-9");
        }
        for (std::size_t i = 0; i < psd_.size(); ++i) {
            if (!(psd_[i] >= 0.0))
                throw validation_error("Spectrum: psd must be >= 0 everywhere");
            if (!(rel_err_[i] >= 0.0))
                throw validation_error("Spectrum: rel_err must be >= 0");
        }
    }

    std::vector<double> f_;
    std::vector<double> psd_;
    std::vector<double> rel_err_;
    int n_av_;
    Unit unit_;
    double df_ = 0.0;
    bool flag_dc_ = false;
    bool flag_nyquist_ = false;
};

/// Uniform grid [lo, hi] with spacing df, bins at multiples of df.
inline std::vector<double> frequency_grid(double lo, double hi, double df) {
    require(df > 0 && lo >= 0 && hi > lo, "frequency_grid: bad bounds");
    std::vector<double> f;
    const long j0 = static_cast<long>(std::ceil(lo / df - 1e-9));
    const long j1 = static_cast<long>(std::floor(hi / df + 1e-9));
    require(j1 > j0, "frequency_grid: empty grid");
    f.reserve(static_cast<std::size_t>(j1 - j0 + 1));
    for (long j = j0; j <= j1; ++j) f.push_back(double(j) * df);
    return f;
}

} // namespace cslkit
