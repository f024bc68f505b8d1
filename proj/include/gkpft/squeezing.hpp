#pragma once

#include <cmath>
#include <stdexcept>

namespace gkpft {

// Quadrature convention: [x,y] = i, vacuum variance 1/2. Squeezing in dB is
// 10*log10(2v), so vacuum sits at 0 dB and more negative means more squeezed.
inline double db_from_variance(double v) {
    if (!(v > 0.0)) throw std::domain_error("db_from_variance: variance must be > 0");
    return 10.0 * std::log10(2.0 * v);
}

inline double variance_from_db(double db) {
    return 0.5 * std::pow(10.0, db / 10.0);
}

// Variance of the squeezed quadrature of the auxiliary oscillators. Every
// noise budget in this library is linear in this one number.
struct SqueezingLevel {
    double variance = 0.5;  // vacuum

    SqueezingLevel() = default;
    explicit SqueezingLevel(double v) : variance(v) {
        if (!(v > 0.0)) throw std::domain_error("SqueezingLevel: variance must be > 0");
    }

    static SqueezingLevel from_db(double db) { return SqueezingLevel(variance_from_db(db)); }
    double db() const { return db_from_variance(variance); }
};

}  // namespace gkpft
