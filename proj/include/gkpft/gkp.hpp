#pragma once

#include <cmath>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

namespace gkpft {

inline constexpr double kSqrtPi = 1.77245385090551602730;

// Comb-state parameters: spacing alpha, variance of a single density peak,
// and inverse width of the comb envelope. Defaults keep ae^2 == delta_peak,
// the symmetric convention.
struct GkpParams {
    double alpha = kSqrtPi;
    double delta_peak = 0.01;
    double envelope_ae = 0.1;

    void validate() const {
        if (!(alpha > 0.0)) throw std::domain_error("GkpParams: alpha must be > 0");
        if (!(delta_peak > 0.0)) throw std::domain_error("GkpParams: delta_peak must be > 0");
        if (!(envelope_ae > 0.0)) throw std::domain_error("GkpParams: envelope_ae must be > 0");
    }

    static GkpParams with_peak_variance(double delta) {
        GkpParams p;
        p.delta_peak = delta;
        p.envelope_ae = std::sqrt(delta);
        p.validate();
        return p;
    }
};

enum class GkpWord { zero, one };

// Half-widths of the correctable displacement intervals. Their product is
// pi/4 independent of alpha; the widths coincide at alpha = sqrt(pi).
struct CorrectableRange {
    double x_half_width;  // alpha/2
    double y_half_width;  // pi/(2 alpha)
};

inline CorrectableRange correctable_range(const GkpParams& p) {
    p.validate();
    return {0.5 * p.alpha, 0.5 * M_PI / p.alpha};
}

namespace detail {

// residue of a mod b folded to [0, b); treats values within tol of the
// lattice as exact multiples.
inline bool is_multiple(double a, double b, double tol) {
    double m = std::fmod(a, b);
    if (m < 0.0) m += b;
    return m <= tol || b - m <= tol;
}

}  // namespace detail

// Gains G for which the comb-offset terms alpha*(n' + m' G) vanish under
// reduction mod beta for every integer n', m'. The n' condition must hold
// with the data and ancilla combs in either role (the x and y stages swap
// them), which pins alpha = beta; the m' condition then admits G = +-1 only.
inline std::set<double> admissible_gains(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw std::domain_error("admissible_gains: spacings must be > 0");
    }
    const double tol = 1e-9 * std::max(alpha, beta);
    std::set<double> gains;
    for (int n = 1; n <= 16; ++n) {
        if (!detail::is_multiple(alpha * n, beta, tol * n)) return gains;
        if (!detail::is_multiple(beta * n, alpha, tol * n)) return gains;
    }
    for (double g : {1.0, -1.0}) {
        bool ok = true;
        for (int m = 1; m <= 16; ++m) {
            if (!detail::is_multiple(alpha * g * m, beta, tol * m)) {
                ok = false;
                break;
            }
        }
        if (ok) gains.insert(g);
    }
    return gains;
}

// Centered remainder: the unique representative of x mod alpha in
// [-alpha/2, alpha/2). This is the correction displacement applied to the
// data oscillator after the syndrome measurement.
inline double modular_decode(double x_measured, double alpha) {
    if (!(alpha > 0.0)) throw std::domain_error("modular_decode: alpha must be > 0");
    return x_measured - alpha * std::floor(x_measured / alpha + 0.5);
}

namespace detail {

// Wavefunction of the finite comb at x: peaks of density variance delta
// (amplitude exp(-u^2/(4 delta))) at k*alpha with k even for |0>, odd for
// |1>, weighted by the envelope exp(-ae^2 (k alpha)^2 / 2). Only peaks with
// non-negligible amplitude at x are summed.
inline double comb_amplitude(const GkpParams& p, GkpWord word, int k_max, double x) {
    // exp(-60) is below double noise relative to a unit peak
    const double peak_reach = std::sqrt(4.0 * p.delta_peak * 60.0);
    const int want_parity = (word == GkpWord::zero) ? 0 : 1;
    int k_lo = static_cast<int>(std::ceil((x - peak_reach) / p.alpha));
    int k_hi = static_cast<int>(std::floor((x + peak_reach) / p.alpha));
    double amp = 0.0;
    for (int k = k_lo; k <= k_hi; ++k) {
        if (((k % 2 + 2) % 2) != want_parity) continue;
        if (std::abs(k) > k_max) continue;
        const double pos = k * p.alpha;
        const double env = std::exp(-0.5 * p.envelope_ae * p.envelope_ae * pos * pos);
        amp += env * std::exp(-(x - pos) * (x - pos) / (4.0 * p.delta_peak));
    }
    return amp;
}

// Largest comb index whose envelope weight is still above 1e-16; the
// dropped tail is far below the 1e-12 budget.
inline int comb_truncation(const GkpParams& p) {
    const double w = p.envelope_ae * p.alpha;
    return static_cast<int>(std::ceil(std::sqrt(2.0 * 16.0 * std::log(10.0)) / w)) + 1;
}

}  // namespace detail

// Position density |<x|word>|^2 evaluated on the given grid, normalized so
// the density integrates to one over the real line. The normalization uses
// an internal grid wide and fine enough for trapezoidal integration at the
// 1e-8 level; the user grid only controls where the result is sampled.
inline std::vector<double> gkp_density(const GkpParams& p, GkpWord word,
                                       const std::vector<double>& grid) {
    p.validate();
    if (grid.empty()) throw std::invalid_argument("gkp_density: empty grid");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("gkp_density: grid must be strictly increasing");
        }
    }

    const int k_max = detail::comb_truncation(p);
    const double sigma = std::sqrt(p.delta_peak);
    const double span = k_max * p.alpha + 12.0 * sigma;
    const double step = sigma / 4.0;
    const auto n_steps = static_cast<std::size_t>(std::ceil(2.0 * span / step)) + 1;

    // trapezoid over the internal grid; endpoints carry negligible density
    double integral = 0.0;
    double prev = 0.0;
    for (std::size_t i = 0; i < n_steps; ++i) {
        const double x = -span + static_cast<double>(i) * step;
        const double a = detail::comb_amplitude(p, word, k_max, x);
        const double d = a * a;
        if (i > 0) integral += 0.5 * (prev + d) * step;
        prev = d;
    }

    std::vector<double> out;
    out.reserve(grid.size());
    for (double x : grid) {
        const double a = detail::comb_amplitude(p, word, k_max, x);
        out.push_back(a * a / integral);
    }
    return out;
}

}  // namespace gkpft
