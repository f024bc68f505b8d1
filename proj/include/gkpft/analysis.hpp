#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkpft/gkp.hpp"
#include "gkpft/ledger.hpp"
#include "gkpft/special_functions.hpp"
#include "gkpft/squeezing.hpp"

namespace gkpft {

namespace detail {

// x/y-stage variance offsets, from the exact ledger coefficients:
// (sqrt5+1)/2 and sqrt5+1.
inline double sigma_x_offset() {
    static const double v = sigma_x_squared(QuadraticSurd(0)).to_double();
    return v;
}
inline double sigma_y_offset() {
    static const double v = sigma_y_squared(QuadraticSurd(0)).to_double();
    return v;
}

inline double erf_arg(double sigma) { return kSqrtPi / (2.0 * std::sqrt(2.0) * sigma); }

}  // namespace detail

// Probability that a centered Gaussian displacement of standard deviation
// sigma lands inside the correctable window [-sqrt(pi)/2, sqrt(pi)/2):
// erf(sqrt(pi) / (2 sqrt2 sigma)).
inline double p_corr(double sigma) {
    if (!(sigma > 0.0)) throw std::domain_error("p_corr: sigma must be > 0");
    return erf_eval(detail::erf_arg(sigma));
}

// 1 - p_corr evaluated without cancellation; exact to full relative
// precision even when p_corr is within 1e-15 of one.
inline double p_corr_complement(double sigma) {
    if (!(sigma > 0.0)) throw std::domain_error("p_corr_complement: sigma must be > 0");
    return erfc_eval(detail::erf_arg(sigma));
}

inline double p_corr_x(double a, SqueezingLevel v) {
    if (a < 0.0) throw std::domain_error("p_corr_x: a must be >= 0");
    return p_corr(std::sqrt(v.variance * (a + detail::sigma_x_offset())));
}

inline double p_corr_y(double b, SqueezingLevel v) {
    if (b < 0.0) throw std::domain_error("p_corr_y: b must be >= 0");
    return p_corr(std::sqrt(v.variance * (b + detail::sigma_y_offset())));
}

namespace detail {

inline double log_p_corr_x(double a, SqueezingLevel v) {
    return std::log1p(-p_corr_complement(std::sqrt(v.variance * (a + sigma_x_offset()))));
}
inline double log_p_corr_y(double b, SqueezingLevel v) {
    return std::log1p(-p_corr_complement(std::sqrt(v.variance * (b + sigma_y_offset()))));
}

}  // namespace detail

// 1 - P_corr,x(a) * P_corr,y(b), the per-step error probability of a
// single-mode transformation with computation-error coefficients (a, b).
// Assembled in log space so values near 1e-6 keep full precision.
inline double p_err_single(double a, double b, SqueezingLevel v) {
    if (a < 0.0 || b < 0.0) throw std::domain_error("p_err_single: a, b must be >= 0");
    return -std::expm1(detail::log_p_corr_x(a, v) + detail::log_p_corr_y(b, v));
}

// Error probability of the two-mode CZ built from two single-mode
// transformations, each carrying the (2,2) error budget:
// 1 - P_corr,x(2)^2 * P_corr,y(2)^2.
inline double p_err_cz(SqueezingLevel v) {
    return -std::expm1(2.0 * detail::log_p_corr_x(2.0, v) +
                       2.0 * detail::log_p_corr_y(2.0, v));
}

enum class GateKind { single_mode, cz };

struct GateSpec {
    GateKind kind = GateKind::single_mode;
    double a = 2.0;
    double b = 2.0;

    static GateSpec single_mode(double a, double b) {
        return {GateKind::single_mode, a, b};
    }
    static GateSpec cz() { return {GateKind::cz, 2.0, 2.0}; }
};

inline double p_err(const GateSpec& gate, SqueezingLevel v) {
    return gate.kind == GateKind::cz ? p_err_cz(v) : p_err_single(gate.a, gate.b, v);
}

struct ThresholdResult {
    double variance_threshold;
    double db_threshold;
    double target_error;
    GateKind gate_kind;
};

// Squeezing variance v* with p_err(v*) = target. p_err is strictly
// increasing in v, so a bisection bracket always holds; a guarded secant
// polish then drives the relative error on v* below 1e-10.
inline ThresholdResult solve_threshold(const GateSpec& gate, double target) {
    if (!(target > 0.0 && target < 1.0)) {
        throw std::domain_error("solve_threshold: target must lie in (0,1)");
    }
    const auto f = [&](double v) { return p_err(gate, SqueezingLevel(v)) - target; };

    double lo = 1e-30;
    double hi = 1e-3;
    while (f(hi) < 0.0) {
        hi *= 2.0;
        if (hi > 1e12) throw std::runtime_error("solve_threshold: failed to bracket");
    }

    double flo = f(lo);
    double fhi = f(hi);
    while ((hi - lo) > 1e-6 * hi) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    double x0 = lo, f0 = flo;
    double x1 = hi, f1 = fhi;
    for (int i = 0; i < 60 && std::abs(x1 - x0) > 1e-12 * std::abs(x1); ++i) {
        double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (!(x2 > lo && x2 < hi) || !std::isfinite(x2)) x2 = 0.5 * (lo + hi);
        const double f2 = f(x2);
        if (f2 < 0.0) lo = x2;
        else hi = x2;
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f2;
    }

    ThresholdResult res;
    res.variance_threshold = x1;
    res.db_threshold = db_from_variance(x1);
    res.target_error = target;
    res.gate_kind = gate.kind;
    return res;
}

struct AxisRange {
    double min;
    double max;
    int count;

    std::vector<double> values() const {
        if (count < 1 || !(max >= min)) {
            throw std::domain_error("AxisRange: need count >= 1 and max >= min");
        }
        std::vector<double> v(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) {
            v[static_cast<std::size_t>(i)] =
                count == 1 ? min : min + (max - min) * i / (count - 1);
        }
        return v;
    }
};

struct SweepPoint {
    double a, b, v, p_err;
};

// One point of the fault-tolerance boundary: at squeezing variance v, the b
// value with p_err(a, b) = target.
struct ContourPoint {
    double v, a, b;
};

struct SweepResult {
    std::vector<SweepPoint> surface;
    std::vector<ContourPoint> contour;
};

// b on the p_err(a, .) = target level set, or -1 when even b = 0 exceeds
// the target at this (a, v).
inline double contour_b(double a, SqueezingLevel v, double target) {
    if (p_err_single(a, 0.0, v) >= target) return -1.0;
    double lo = 0.0, hi = 1.0;
    while (p_err_single(a, hi, v) < target) {
        hi *= 2.0;
        if (hi > 1e9) return -1.0;
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (p_err_single(a, mid, v) < target) lo = mid;
        else hi = mid;
        if (hi - lo < 1e-12 * (1.0 + hi)) break;
    }
    return 0.5 * (lo + hi);
}

// Grid of p_err over (a, b) for each squeezing variance, plus the target
// level set found by per-row root search in b.
inline SweepResult sweep_error_surface(const AxisRange& a_range, const AxisRange& b_range,
                                       const std::vector<double>& v_list,
                                       double target = 1e-6) {
    if (v_list.empty()) throw std::domain_error("sweep_error_surface: empty squeezing list");
    const std::vector<double> as = a_range.values();
    const std::vector<double> bs = b_range.values();

    SweepResult res;
    res.surface.reserve(v_list.size() * as.size() * bs.size());
    for (double v : v_list) {
        const SqueezingLevel lvl(v);
        for (double a : as) {
            for (double b : bs) {
                res.surface.push_back({a, b, v, p_err_single(a, b, lvl)});
            }
            const double bc = contour_b(a, lvl, target);
            if (bc >= 0.0) res.contour.push_back({v, a, bc});
        }
    }
    return res;
}

inline std::string gate_kind_name(GateKind k) {
    return k == GateKind::cz ? "cz" : "single_mode";
}

}  // namespace gkpft
