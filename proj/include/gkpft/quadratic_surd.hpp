#pragma once

#include <cmath>
#include <string>

#include "gkpft/rational.hpp"

namespace gkpft {

// Element p + q*sqrt(5) of the real quadratic field Q(sqrt5), with exact
// rational p and q. Closed under +, -, *, and division by nonzero elements;
// equality and ordering are exact. This is the coefficient field for all
// variance bookkeeping, so identities like 1/sqrt5 + 3/(2 sqrt5) + 1/2 =
// (sqrt5+1)/2 hold as exact equalities rather than epsilon comparisons.
class QuadraticSurd {
  public:
    constexpr QuadraticSurd() = default;
    QuadraticSurd(std::int64_t n) : p_(n) {}
    QuadraticSurd(Rational rational_part) : p_(rational_part) {}
    QuadraticSurd(Rational rational_part, Rational surd_part)
        : p_(rational_part), q_(surd_part) {}

    static QuadraticSurd sqrt5() { return {Rational(0), Rational(1)}; }
    // 1/sqrt5 == sqrt5/5
    static QuadraticSurd inv_sqrt5() { return {Rational(0), Rational(1, 5)}; }

    const Rational& rational_part() const { return p_; }
    const Rational& surd_part() const { return q_; }

    bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

    // Exact sign of p + q*sqrt5. When p and q disagree in sign the result
    // follows from comparing p^2 against 5 q^2.
    int sign() const {
        const int sp = p_.sign();
        const int sq = q_.sign();
        if (sq == 0) return sp;
        if (sp == 0) return sq;
        if (sp == sq) return sp;
        const Rational p2 = p_ * p_;
        const Rational q2_5 = Rational(5) * q_ * q_;
        if (p2 == q2_5) return 0;
        // |p| dominates iff p^2 > 5 q^2
        return (p2 > q2_5) ? sp : sq;
    }

    double to_double() const {
        constexpr double sqrt5 = 2.23606797749978969640;
        return p_.to_double() + q_.to_double() * sqrt5;
    }

    std::string to_string() const {
        if (q_.is_zero()) return p_.to_string();
        std::string s;
        if (!p_.is_zero()) s = p_.to_string() + (q_.sign() < 0 ? " - " : " + ");
        else if (q_.sign() < 0) s = "-";
        Rational qa = q_.sign() < 0 ? -q_ : q_;
        if (qa == Rational(1)) s += "sqrt(5)";
        else s += qa.to_string() + "*sqrt(5)";
        return s;
    }

    friend QuadraticSurd operator-(const QuadraticSurd& a) { return {-a.p_, -a.q_}; }
    friend QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) {
        return {a.p_ + b.p_, a.q_ + b.q_};
    }
    friend QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) {
        return {a.p_ - b.p_, a.q_ - b.q_};
    }
    friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
        // (p1 + q1 s)(p2 + q2 s) = p1 p2 + 5 q1 q2 + (p1 q2 + q1 p2) s
        return {a.p_ * b.p_ + Rational(5) * a.q_ * b.q_, a.p_ * b.q_ + a.q_ * b.p_};
    }
    friend QuadraticSurd operator/(const QuadraticSurd& a, const QuadraticSurd& b) {
        if (b.is_zero()) throw std::domain_error("QuadraticSurd: division by zero");
        // multiply by the conjugate; norm p^2 - 5 q^2 is nonzero for b != 0
        const Rational norm = b.p_ * b.p_ - Rational(5) * b.q_ * b.q_;
        const QuadraticSurd num = a * QuadraticSurd{b.p_, -b.q_};
        return {num.p_ / norm, num.q_ / norm};
    }

    QuadraticSurd& operator+=(const QuadraticSurd& o) { return *this = *this + o; }
    QuadraticSurd& operator-=(const QuadraticSurd& o) { return *this = *this - o; }
    QuadraticSurd& operator*=(const QuadraticSurd& o) { return *this = *this * o; }
    QuadraticSurd& operator/=(const QuadraticSurd& o) { return *this = *this / o; }

    friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const QuadraticSurd& a, const QuadraticSurd& b) {
        return !(a == b);
    }
    friend bool operator<(const QuadraticSurd& a, const QuadraticSurd& b) {
        return (a - b).sign() < 0;
    }
    friend bool operator>(const QuadraticSurd& a, const QuadraticSurd& b) { return b < a; }
    friend bool operator<=(const QuadraticSurd& a, const QuadraticSurd& b) {
        return !(b < a);
    }
    friend bool operator>=(const QuadraticSurd& a, const QuadraticSurd& b) {
        return !(a < b);
    }

  private:
    Rational p_;
    Rational q_;
};

}  // namespace gkpft
