#pragma once

#include <utility>

#include "gkpft/quadratic_surd.hpp"

namespace gkpft {

// Per-mode (x, y) error-variance coefficients, in units of the squeezed
// oscillator variance. Kept exact in Q(sqrt5).
struct VarianceVector {
    QuadraticSurd x_coeff;
    QuadraticSurd y_coeff;

    VarianceVector() = default;
    VarianceVector(QuadraticSurd x, QuadraticSurd y)
        : x_coeff(std::move(x)), y_coeff(std::move(y)) {}

    double x() const { return x_coeff.to_double(); }
    double y() const { return y_coeff.to_double(); }

    bool is_nonnegative() const {
        return x_coeff.sign() >= 0 && y_coeff.sign() >= 0;
    }

    VarianceVector swapped() const { return {y_coeff, x_coeff}; }

    friend VarianceVector operator+(const VarianceVector& a, const VarianceVector& b) {
        return {a.x_coeff + b.x_coeff, a.y_coeff + b.y_coeff};
    }
    friend bool operator==(const VarianceVector& a, const VarianceVector& b) {
        return a.x_coeff == b.x_coeff && a.y_coeff == b.y_coeff;
    }
    friend bool operator!=(const VarianceVector& a, const VarianceVector& b) {
        return !(a == b);
    }
};

}  // namespace gkpft
