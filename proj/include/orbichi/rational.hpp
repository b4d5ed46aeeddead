#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace orbichi {

/// Exact rational number on 64-bit numerator/denominator, always kept in
/// lowest terms with a positive denominator. Intermediate products go through
/// 128-bit arithmetic; a result that does not fit back into 64 bits throws
/// std::overflow_error rather than wrapping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {} // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        __int128 nn = n, dd = d;
        normalize(nn, dd);
    }

    long long numerator() const { return num_; }
    long long denominator() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    /// "p/q" in lowest terms, or just "p" for integers.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                       (__int128)a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                       (__int128)a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
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
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    static Rational from128(__int128 n, __int128 d) {
        Rational r;
        r.normalize(n, d);
        return r;
    }

    void normalize(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return;
        }
        __int128 a = n < 0 ? -n : n;
        __int128 b = d;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        n /= a;
        d /= a;
        constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("Rational: value out of 64-bit range");
        num_ = (long long)n;
        den_ = (long long)d;
    }

    long long num_;
    long long den_;
};

} // namespace orbichi
