#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gkpft {

namespace detail {

using int128 = __int128;

constexpr int128 abs128(int128 v) { return v < 0 ? -v : v; }

constexpr int128 gcd128(int128 a, int128 b) {
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace detail

// Exact rational number. Stored gcd-reduced with a positive denominator;
// intermediates use 128-bit arithmetic and results that do not fit back
// into 64 bits throw std::overflow_error.
class Rational {
  public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) { *this = normalize(n, d); }

    // Exact conversion: every finite double is a dyadic rational. Throws
    // when the value needs more than 64 bits (e.g. huge magnitudes or
    // denormal-scale fractions).
    static Rational from_double(double d) {
        if (!std::isfinite(d)) throw std::domain_error("Rational: non-finite value");
        int exp = 0;
        const double m = std::frexp(d, &exp);  // d = m * 2^exp, |m| in [0.5, 1)
        auto num = static_cast<std::int64_t>(std::ldexp(m, 53));
        exp -= 53;
        while (num != 0 && num % 2 == 0 && exp < 0) {
            num /= 2;
            ++exp;
        }
        if (exp > 10 || exp < -62) throw std::overflow_error("Rational: double out of range");
        if (exp >= 0) {
            detail::int128 n = detail::int128(num) << exp;
            if (n > INT64_MAX || n < INT64_MIN) {
                throw std::overflow_error("Rational: double out of range");
            }
            return {static_cast<std::int64_t>(n), 1};
        }
        return {num, std::int64_t(1) << (-exp)};
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::string to_string() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    friend Rational operator-(const Rational& a) {
        return normalize(-detail::int128(a.num_), a.den_);
    }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return normalize(detail::int128(a.num_) * b.den_ + detail::int128(b.num_) * a.den_,
                         detail::int128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return normalize(detail::int128(a.num_) * b.den_ - detail::int128(b.num_) * a.den_,
                         detail::int128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return normalize(detail::int128(a.num_) * b.num_, detail::int128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return normalize(detail::int128(a.num_) * b.den_, detail::int128(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return detail::int128(a.num_) * b.den_ < detail::int128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  private:
    static Rational normalize(detail::int128 n, detail::int128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n != 0) {
            detail::int128 g = detail::gcd128(detail::abs128(n), d);
            n /= g;
            d /= g;
        } else {
            d = 1;
        }
        constexpr detail::int128 lo = INT64_MIN;
        constexpr detail::int128 hi = INT64_MAX;
        if (n < lo || n > hi || d > hi) {
            throw std::overflow_error("Rational: value exceeds 64-bit range");
        }
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace gkpft
