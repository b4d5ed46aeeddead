#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbichi/errors.hpp"
#include "orbichi/rational.hpp"

namespace orbichi {

/// Formal power series over exact rationals, truncated at a fixed order N
/// (coefficients of t^0 .. t^N are kept, everything above is dropped).
/// Operations on series of different orders truncate to the smaller one.
class RationalSeries {
public:
    explicit RationalSeries(int order) : coeff_(order + 1) {
        if (order < 0) throw validation_error("series: negative truncation order");
    }

    static RationalSeries one(int order) {
        RationalSeries s(order);
        s.coeff_[0] = Rational(1);
        return s;
    }

    /// 1 - t^p, truncated at `order`.
    static RationalSeries one_minus_power(int p, int order) {
        RationalSeries s = one(order);
        if (p <= order) s.coeff_[p] = Rational(-1);
        return s;
    }

    int order() const { return (int)coeff_.size() - 1; }

    const Rational& at(int i) const { return coeff_.at(i); }
    void set(int i, Rational v) { coeff_.at(i) = v; }

    const std::vector<Rational>& coefficients() const { return coeff_; }

    RationalSeries truncated(int order) const {
        RationalSeries r(order);
        for (int i = 0; i <= order && i <= this->order(); ++i) r.coeff_[i] = coeff_[i];
        return r;
    }

    friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
        int n = std::min(a.order(), b.order());
        RationalSeries r(n);
        for (int i = 0; i <= n; ++i) r.coeff_[i] = a.coeff_[i] + b.coeff_[i];
        return r;
    }

    friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
        int n = std::min(a.order(), b.order());
        RationalSeries r(n);
        for (int i = 0; i <= n; ++i) r.coeff_[i] = a.coeff_[i] - b.coeff_[i];
        return r;
    }

    /// Cauchy product, truncated at min(order a, order b).
    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
        int n = std::min(a.order(), b.order());
        RationalSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (a.coeff_[i].is_zero()) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (b.coeff_[j].is_zero()) continue;
                r.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
            }
        }
        return r;
    }

    friend bool operator==(const RationalSeries& a, const RationalSeries& b) {
        return a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const RationalSeries& a, const RationalSeries& b) { return !(a == b); }

    /// Index of the first coefficient where the two series disagree
    /// (comparing up to the smaller order), or nullopt when equal.
    static std::optional<int> first_mismatch(const RationalSeries& a, const RationalSeries& b) {
        int n = std::min(a.order(), b.order());
        for (int i = 0; i <= n; ++i)
            if (a.coeff_[i] != b.coeff_[i]) return i;
        return std::nullopt;
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i <= order(); ++i) {
            if (i) s += ", ";
            s += coeff_[i].str();
        }
        return s + "]";
    }

private:
    std::vector<Rational> coeff_; // coeff_[i] multiplies t^i
};

/// Binomial coefficient C(e, j) for an arbitrary rational e, via the falling
/// factorial e(e-1)...(e-j+1)/j!.
inline Rational generalized_binomial(const Rational& e, int j) {
    Rational b(1);
    for (int i = 0; i < j; ++i) b = b * (e - Rational(i)) / Rational(i + 1);
    return b;
}

/// a^e for a series with constant term exactly 1, via the binomial series
/// (1+u)^e with u = a - 1. Agrees with repeated multiplication / inversion
/// for integer e.
inline RationalSeries pow_rational(const RationalSeries& a, const Rational& e) {
    if (a.at(0) != Rational(1))
        throw validation_error("pow_rational: constant term must be 1");
    int n = a.order();
    RationalSeries u = a - RationalSeries::one(n);
    RationalSeries result = RationalSeries::one(n);
    RationalSeries upow = RationalSeries::one(n);
    Rational binom(1);
    for (int j = 1; j <= n; ++j) {
        upow = upow * u;
        if (upow == RationalSeries(n)) break; // u^j vanished below the truncation
        binom = binom * (e - Rational(j - 1)) / Rational(j);
        if (binom.is_zero()) continue;
        for (int i = 0; i <= n; ++i) result.set(i, result.at(i) + binom * upow.at(i));
    }
    return result;
}

inline RationalSeries pow_integer(const RationalSeries& a, long long e) {
    return pow_rational(a, Rational(e));
}

inline RationalSeries inverse(const RationalSeries& a) { return pow_integer(a, -1); }

/// The truncated product  prod_{r_1,...,r_k >= 1} (1 - t^{r_1 r_2 ... r_k})^{r_2 r_3^2 ... r_k^{k-1}}
/// over all index tuples with r_1 ... r_k <= order (larger tuples only touch
/// coefficients beyond the truncation). The k = 0 empty product is read as the
/// single factor 1 - t, so its (-chi) power is the Macdonald right-hand side.
inline RationalSeries tamanoi_product(int k, int order) {
    if (k < 0) throw validation_error("tamanoi_product: negative k");
    std::map<long long, long long> exponent_of_power; // t-power -> accumulated exponent
    if (k == 0) {
        exponent_of_power[1] = 1;
    } else {
        // Depth-first over (r_1, ..., r_k) with running product <= order;
        // choosing r at depth d (1-based) multiplies the exponent by r^(d-1).
        struct Walker {
            int k, order;
            std::map<long long, long long>& acc;
            void walk(int depth, long long prod, long long expo) {
                if (depth > k) {
                    acc[prod] += expo;
                    return;
                }
                for (long long r = 1; prod * r <= order; ++r) {
                    long long e = expo;
                    for (int i = 0; i < depth - 1; ++i) e *= r;
                    walk(depth + 1, prod * r, e);
                }
            }
        } w{k, order, exponent_of_power};
        w.walk(1, 1, 1);
    }
    RationalSeries result = RationalSeries::one(order);
    for (auto [p, e] : exponent_of_power)
        result = result * pow_integer(RationalSeries::one_minus_power((int)p, order), e);
    return result;
}

} // namespace orbichi
