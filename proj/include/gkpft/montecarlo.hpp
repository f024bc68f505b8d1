#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "gkpft/analysis.hpp"
#include "gkpft/gates.hpp"
#include "gkpft/gkp.hpp"
#include "gkpft/squeezing.hpp"

namespace gkpft {

namespace rng {

// splitmix64 finalizer; also used to key per-trial streams.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Deterministic random stream keyed by (seed, trial index). Every trial owns
// its own stream and a fixed draw order, so results do not depend on how
// trials are scheduled across workers. Normal variates come from Box-Muller,
// which consumes a fixed two uniforms per pair (no rejection).
class TrialStream {
  public:
    TrialStream(std::uint64_t seed, std::uint64_t trial)
        : state_(mix64(seed ^ mix64(trial))) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // 53-bit uniform in (0,1]
    double uniform_pos() { return ((next_u64() >> 11) + 1) * 0x1.0p-53; }
    // 53-bit uniform in [0,1)
    double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double theta = 2.0 * M_PI * uniform();
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    int uniform_int(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<int>(next_u64() % span);
    }

  private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace rng

struct McConfig {
    std::uint64_t samples = 1;
    std::uint64_t seed = 0;
    SqueezingLevel v;
    GateSpec gate;
    // GKP peak variance in units of v
    double peak_coeff = 1.0;
    // diagnostic switches; both on for the physical model
    bool include_sum_noise = true;
    bool include_peak_jitter = true;
    // syndrome comb offsets alpha*(n' + m') sampled with |n'|,|m'| <= comb_window
    int comb_window = 100;

    void validate() const {
        if (samples < 1) throw std::domain_error("McConfig: samples must be >= 1");
        if (peak_coeff < 0.0) throw std::domain_error("McConfig: peak_coeff must be >= 0");
        if (comb_window < 0) throw std::domain_error("McConfig: comb_window must be >= 0");
    }
};

struct McResult {
    std::uint64_t success_count = 0;
    std::uint64_t samples = 0;
    double p_hat = 0.0;
    double std_err = 0.0;  // binomial, from p_hat
    double analytic_p = 0.0;
};

// 4-sigma agreement with the analytic value, using the binomial deviation of
// the analytic null. (The p_hat-based std_err degenerates to zero when every
// trial lands on the same side.)
inline bool mc_verdict_four_sigma(const McResult& r) {
    const double s =
        std::sqrt(r.analytic_p * (1.0 - r.analytic_p) / static_cast<double>(r.samples));
    return std::abs(r.p_hat - r.analytic_p) <= 4.0 * s;
}

namespace detail {

inline McResult finish_result(std::uint64_t successes, std::uint64_t samples,
                              double analytic) {
    McResult r;
    r.success_count = successes;
    r.samples = samples;
    r.p_hat = static_cast<double>(successes) / static_cast<double>(samples);
    r.std_err = std::sqrt(r.p_hat * (1.0 - r.p_hat) / static_cast<double>(samples));
    r.analytic_p = analytic;
    return r;
}

// Probability that a centered Gaussian of the given variance lands in the
// correctable window; total variance zero means a certain success.
inline double window_success_prob(double variance) {
    if (variance <= 0.0) return 1.0;
    return erf_eval(erf_arg(std::sqrt(variance)));
}

// Per-trial noise variances, all flags folded in.
struct PipelineNoise {
    double comp_x, comp_y;        // computation error (a v, b v)
    double sum_direct, sum_cross; // SUM(1) couplings squared, times v
    double peak;                  // GKP peak variance
    double alpha;
    int window;

    static PipelineNoise make(const McConfig& cfg, double a, double b) {
        const auto [e_sum1, e_sum2] = sum_noise_vectors();
        const double v = cfg.v.variance;
        PipelineNoise n;
        n.comp_x = a * v;
        n.comp_y = b * v;
        n.sum_direct = cfg.include_sum_noise ? e_sum1.x() * v : 0.0;
        n.sum_cross = cfg.include_sum_noise ? e_sum1.y() * v : 0.0;
        n.peak = cfg.include_peak_jitter ? cfg.peak_coeff * v : 0.0;
        n.alpha = kSqrtPi;
        n.window = cfg.comb_window;
        return n;
    }

    double total_x_variance() const {
        return comp_x + sum_direct + sum_cross + peak;
    }
    double total_y_variance() const {
        return comp_y + 2.0 * (sum_direct + sum_cross) + 2.0 * peak;
    }
};

}  // namespace detail

// Syndrome-window outcome of one correction stage: the total displacement
// the syndrome sees, and whether the modular decode recovered it.
struct StageWindow {
    double total = 0.0;
    bool ok = false;
};

struct TrialOutcome {
    std::array<StageWindow, 4> windows{};  // x,y per single-mode arm
    int n_windows = 0;
    bool success = true;
    // data-oscillator displacement left after both corrections (first arm)
    double residual_x = 0.0;
    double residual_y = 0.0;
};

namespace detail {

// One single-mode correction pipeline: noisy SUM onto a GKP ancilla, x
// syndrome decode and displacement, then the same in y. Draw order is fixed:
// 2 computation draws, 6 per stage, plus 2 comb offsets per syndrome.
inline void run_arm(rng::TrialStream& ts, const PipelineNoise& n, TrialOutcome& out) {
    const auto draw = [&ts](double variance) {
        return ts.normal() * std::sqrt(variance);
    };

    double data_x = draw(n.comp_x);
    double data_y = draw(n.comp_y);

    // x stage: data is the SUM's first output, ancilla the second
    data_x += draw(n.sum_direct);
    data_y += draw(n.sum_cross);
    const double anc1_x = draw(n.sum_cross) + draw(n.peak);
    const double anc1_y = draw(n.sum_direct) + draw(n.peak);

    const double total_x = data_x + anc1_x;
    const int n1 = ts.uniform_int(-n.window, n.window);
    const int m1 = ts.uniform_int(-n.window, n.window);
    const double decoded_x = modular_decode(n.alpha * (n1 + m1) + total_x, n.alpha);
    const bool x_ok = std::abs(decoded_x - total_x) < 0.5 * n.alpha;
    data_x -= decoded_x;
    data_y += anc1_y;

    // y stage: roles swap, data is the SUM's second output
    data_x += draw(n.sum_cross);
    data_y += draw(n.sum_direct);
    const double anc2_x = draw(n.sum_direct) + draw(n.peak);
    const double anc2_y = draw(n.sum_cross) + draw(n.peak);

    const double total_y = data_y + anc2_y;
    const int n2 = ts.uniform_int(-n.window, n.window);
    const int m2 = ts.uniform_int(-n.window, n.window);
    const double decoded_y = modular_decode(n.alpha * (n2 + m2) + total_y, n.alpha);
    const bool y_ok = std::abs(decoded_y - total_y) < 0.5 * n.alpha;
    data_y -= decoded_y;
    data_x += anc2_x;

    out.windows[static_cast<std::size_t>(out.n_windows++)] = {total_x, x_ok};
    out.windows[static_cast<std::size_t>(out.n_windows++)] = {total_y, y_ok};
    out.success = out.success && x_ok && y_ok;
    if (out.n_windows == 2) {
        out.residual_x = data_x;
        out.residual_y = data_y;
    }
}

}  // namespace detail

// Full pipeline for one trial; exposed so tests can inspect the per-stage
// windows directly.
inline TrialOutcome mc_pipeline_trial(const McConfig& cfg, std::uint64_t trial) {
    cfg.validate();
    const detail::PipelineNoise noise =
        detail::PipelineNoise::make(cfg, cfg.gate.a, cfg.gate.b);
    rng::TrialStream ts(cfg.seed, trial);
    TrialOutcome out;
    detail::run_arm(ts, noise, out);
    if (cfg.gate.kind == GateKind::cz) detail::run_arm(ts, noise, out);
    return out;
}

// Samples a centered Gaussian of standard deviation sigma and counts hits in
// [-sqrt(pi)/2, sqrt(pi)/2); estimates p_corr(sigma).
inline McResult mc_p_corr(double sigma, const McConfig& cfg) {
    cfg.validate();
    if (!(sigma > 0.0)) throw std::domain_error("mc_p_corr: sigma must be > 0");
    const double half = 0.5 * kSqrtPi;
    std::uint64_t successes = 0;
    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        rng::TrialStream ts(cfg.seed, i);
        const double u = ts.normal() * sigma;
        if (u >= -half && u < half) ++successes;
    }
    return detail::finish_result(successes, cfg.samples, p_corr(sigma));
}

// Samples the full correction pipeline and estimates the success probability
// 1 - p_err. The analytic value is assembled from the generated variance
// totals, so diagnostic switches stay consistent with the estimate.
inline McResult mc_pipeline(const McConfig& cfg) {
    cfg.validate();
    const detail::PipelineNoise noise =
        detail::PipelineNoise::make(cfg, cfg.gate.a, cfg.gate.b);

    std::uint64_t successes = 0;
    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        rng::TrialStream ts(cfg.seed, i);
        TrialOutcome out;
        detail::run_arm(ts, noise, out);
        if (cfg.gate.kind == GateKind::cz) detail::run_arm(ts, noise, out);
        if (out.success) ++successes;
    }

    const double arm = detail::window_success_prob(noise.total_x_variance()) *
                       detail::window_success_prob(noise.total_y_variance());
    const double analytic = cfg.gate.kind == GateKind::cz ? arm * arm : arm;
    return detail::finish_result(successes, cfg.samples, analytic);
}

}  // namespace gkpft
