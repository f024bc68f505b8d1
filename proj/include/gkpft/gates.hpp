#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "gkpft/quadratic_surd.hpp"
#include "gkpft/variance_vector.hpp"

namespace gkpft {

// Gaussian transformation in the form  q_out = M q_in + E y_s,
// where q is the quadrature vector (x1, y1, ..., xN, yN), M is symplectic
// and E couples in the squeezed quadratures of the auxiliary oscillators.
struct GateModel {
    Eigen::MatrixXd m_matrix;  // 2N x 2N
    Eigen::MatrixXd e_matrix;  // 2N x K

    int modes() const { return static_cast<int>(m_matrix.rows()) / 2; }
    int ancillas() const { return static_cast<int>(e_matrix.cols()); }
};

// Standard symplectic form, block-diagonal [[0,1],[-1,0]] per mode.
inline Eigen::MatrixXd symplectic_form(int n_modes) {
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
    for (int i = 0; i < n_modes; ++i) {
        omega(2 * i, 2 * i + 1) = 1.0;
        omega(2 * i + 1, 2 * i) = -1.0;
    }
    return omega;
}

// max |M^T Omega M - Omega|; zero for an exactly symplectic matrix.
inline double symplectic_deviation(const Eigen::MatrixXd& m) {
    const int n_modes = static_cast<int>(m.rows()) / 2;
    const Eigen::MatrixXd omega = symplectic_form(n_modes);
    return (m.transpose() * omega * m - omega).cwiseAbs().maxCoeff();
}

// SUM(g): x2 picks up -g*x1, y1 picks up +g*y2. Noise-free.
inline GateModel ideal_sum(double gain) {
    GateModel g;
    g.m_matrix = Eigen::MatrixXd::Identity(4, 4);
    g.m_matrix(2, 0) = -gain;  // x2' = x2 - g x1
    g.m_matrix(1, 3) = gain;   // y1' = y1 + g y2
    g.e_matrix = Eigen::MatrixXd::Zero(4, 0);
    return g;
}

// CZ: each mode's y picks up the other mode's x. Noise-free.
inline GateModel ideal_cz() {
    GateModel g;
    g.m_matrix = Eigen::MatrixXd::Identity(4, 4);
    g.m_matrix(1, 2) = 1.0;  // y1' = y1 + x2
    g.m_matrix(3, 0) = 1.0;  // y2' = y2 + x1
    g.e_matrix = Eigen::MatrixXd::Zero(4, 0);
    return g;
}

struct RealisticSumParams {
    double reflectivity_r;
};

// Gain of the beamsplitter-based SUM as a function of the reflectivity;
// strictly decreasing on (0,1).
inline double sum_gain(double r) {
    if (!(r > 0.0 && r < 1.0)) {
        throw std::domain_error("sum_gain: reflectivity must lie in (0,1)");
    }
    return (1.0 - r) / std::sqrt(r);
}

// Beamsplitter-based SUM((1-R)/sqrt(R)) with two squeezed ancillas:
// column 0 couples x_s1 into the x quadratures, column 1 couples y_s2 into
// the y quadratures.
inline GateModel realistic_sum(const RealisticSumParams& p) {
    const double r = p.reflectivity_r;
    const double gain = sum_gain(r);  // validates the range
    const double direct = std::sqrt((1.0 - r) / (1.0 + r));
    const double cross = std::sqrt(r * (1.0 - r) / (1.0 + r));

    GateModel g = ideal_sum(gain);
    g.e_matrix = Eigen::MatrixXd::Zero(4, 2);
    g.e_matrix(0, 0) = -direct;  // x1' gets -direct * x_s1
    g.e_matrix(2, 0) = -cross;   // x2' gets -cross  * x_s1
    g.e_matrix(1, 1) = cross;    // y1' gets +cross  * y_s2
    g.e_matrix(3, 1) = -direct;  // y2' gets -direct * y_s2
    return g;
}

// Reflectivity with unit gain, (3 - sqrt5)/2, as an exact field element.
inline QuadraticSurd unit_gain_reflectivity_exact() {
    return {Rational(3, 2), Rational(-1, 2)};
}

// Root of (1-R)/sqrt(R) = 1 on (0,1), found by bisection on the strictly
// decreasing gain. Agrees with unit_gain_reflectivity_exact to ~1e-16.
inline double solve_unit_gain_reflectivity() {
    double lo = 1e-12, hi = 1.0 - 1e-12;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (sum_gain(mid) > 1.0) lo = mid;
        else hi = mid;
        if (hi - lo < 1e-17 * hi) break;
    }
    return 0.5 * (lo + hi);
}

// Squares of the two ancilla couplings of realistic_sum, exact when the
// reflectivity is given exactly: direct = (1-R)/(1+R), cross = R(1-R)/(1+R).
struct SumCouplingSquares {
    QuadraticSurd direct;
    QuadraticSurd cross;
};

inline SumCouplingSquares realistic_sum_coupling_squares(const QuadraticSurd& r) {
    const QuadraticSurd one(1);
    const QuadraticSurd direct = (one - r) / (one + r);
    return {direct, r * direct};
}

// Output-state variance coefficients of the unit-gain SUM, both ancillas at
// the same squeezing: e_sum1 = (1/sqrt5, (3-sqrt5)/(2 sqrt5)) and e_sum2 is
// its swap. Computed from the exact coupling squares at the unit-gain point.
inline std::pair<VarianceVector, VarianceVector> sum_noise_vectors() {
    const SumCouplingSquares sq =
        realistic_sum_coupling_squares(unit_gain_reflectivity_exact());
    return {VarianceVector{sq.direct, sq.cross}, VarianceVector{sq.cross, sq.direct}};
}

// Error-variance coefficients of a universal single-mode transformation
// realized on a two-node cluster plus phase shifter; a fixed constant of the
// hybrid scheme's error model.
inline VarianceVector hybrid_single_mode_error() {
    return {QuadraticSurd(2), QuadraticSurd(2)};
}

}  // namespace gkpft
