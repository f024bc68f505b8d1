#pragma once

#include <stdexcept>

#include "gkpft/gates.hpp"
#include "gkpft/quadratic_surd.hpp"
#include "gkpft/variance_vector.hpp"

namespace gkpft {

// Variance states through the x-then-y correction pipeline, all exact and in
// units of the squeezed oscillator variance. Each correction replaces the
// corrected data error with the broadened ancilla peak; the uncorrected
// quadrature accumulates the noise added along the way.
struct LedgerTrace {
    VarianceVector input;            // computation error (a, b)
    VarianceVector after_sum_x;      // input + SUM noise, seen at the x syndrome
    VarianceVector peak_x;           // ancilla peak after the same SUM
    VarianceVector after_correct_x;  // x replaced by the peak, y grew
    VarianceVector after_sum_y;      // second SUM applied, pre-correction
    VarianceVector peak_y;           // second ancilla peak
    VarianceVector final;            // y replaced by the peak, x grew
};

// Runs the two-stage correction budget. peak_coeff is the GKP peak variance
// in units of the squeezed oscillator variance; 1 means the combs are built
// from the same oscillators as everything else.
inline LedgerTrace run_single_mode_ledger(const VarianceVector& e_in,
                                          const QuadraticSurd& peak_coeff = QuadraticSurd(1)) {
    if (!e_in.is_nonnegative()) {
        throw std::domain_error("run_single_mode_ledger: negative variance coefficient");
    }
    if (peak_coeff.sign() < 0) {
        throw std::domain_error("run_single_mode_ledger: negative peak coefficient");
    }
    const auto [e_sum1, e_sum2] = sum_noise_vectors();
    const VarianceVector peak0{peak_coeff, peak_coeff};

    LedgerTrace t;
    t.input = e_in;
    t.after_sum_x = e_in + e_sum1;
    t.peak_x = peak0 + e_sum2;
    t.after_correct_x = {t.peak_x.x_coeff, t.after_sum_x.y_coeff + t.peak_x.y_coeff};
    t.after_sum_y = t.after_correct_x + e_sum2;
    t.peak_y = peak0 + e_sum1;
    t.final = {t.after_sum_y.x_coeff + t.peak_y.x_coeff, t.peak_y.y_coeff};
    return t;
}

// y-first ordering: the same pipeline with the roles of the quadratures
// exchanged, so every stage is the component swap of the x-first trace.
inline LedgerTrace run_single_mode_ledger_y_first(
    const VarianceVector& e_in, const QuadraticSurd& peak_coeff = QuadraticSurd(1)) {
    const LedgerTrace t = run_single_mode_ledger(e_in.swapped(), peak_coeff);
    return {t.input.swapped(),       t.after_sum_x.swapped(), t.peak_x.swapped(),
            t.after_correct_x.swapped(), t.after_sum_y.swapped(), t.peak_y.swapped(),
            t.final.swapped()};
}

// Combined variance coefficient seen by the x-stage syndrome:
// a + 1/sqrt5 + 3/(2 sqrt5) + 1/2 = a + (sqrt5+1)/2.
inline QuadraticSurd sigma_x_squared(const QuadraticSurd& a) {
    return a + QuadraticSurd{Rational(1, 2), Rational(1, 2)};
}

// Combined variance coefficient seen by the y-stage syndrome: b + sqrt5 + 1.
inline QuadraticSurd sigma_y_squared(const QuadraticSurd& b) {
    return b + QuadraticSurd{Rational(1), Rational(1)};
}

}  // namespace gkpft
