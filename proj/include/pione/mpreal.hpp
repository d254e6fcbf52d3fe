#pragma once

// Configurable-precision real arithmetic on top of MPFR, plus the special
// values the asymptotic formulas need: pi, the Euler-Mascheroni constant,
// logarithms, and Gamma / digamma at positive half-integers.
//
// Gamma and psi are only ever evaluated at half-integer arguments here, so
// they are computed from the exact identities
//     Gamma(n + 1/2) = (2n)! sqrt(pi) / (4^n n!)
//     psi(n + 1/2)   = -gamma_E - 2 ln 2 + 2 sum_{k=1..n} 1/(2k-1)
// with the rational factor carried exactly in GMP and rounded once.

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pione/qfield.hpp"

namespace pione {

/// Working precision in bits for a requested count of decimal digits.
inline mpfr_prec_t bits_for_digits(int digits) {
    if (digits < 2) digits = 2;
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 8;
}

class MPReal {
public:
    MPReal() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit MPReal(mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_zero(v_, 1);
    }
    MPReal(long x, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    MPReal(const Rational& x, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
    }
    MPReal(const Int& x, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
    }
    MPReal(const std::string& s, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("malformed decimal literal: " + s);
    }
    /// Copy rounded to a new precision.
    MPReal(const MPReal& x, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set(v_, x.v_, MPFR_RNDN);
    }

    MPReal(const MPReal& x) {
        mpfr_init2(v_, mpfr_get_prec(x.v_));
        mpfr_set(v_, x.v_, MPFR_RNDN);
    }
    MPReal(MPReal&& x) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, x.v_);
    }
    MPReal& operator=(const MPReal& x) {
        if (this != &x) {
            mpfr_set_prec(v_, mpfr_get_prec(x.v_));
            mpfr_set(v_, x.v_, MPFR_RNDN);
        }
        return *this;
    }
    MPReal& operator=(MPReal&& x) noexcept {
        mpfr_swap(v_, x.v_);
        return *this;
    }
    ~MPReal() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    friend MPReal operator+(const MPReal& a, const MPReal& b) {
        MPReal r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MPReal operator-(const MPReal& a, const MPReal& b) {
        MPReal r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MPReal operator*(const MPReal& a, const MPReal& b) {
        MPReal r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MPReal operator/(const MPReal& a, const MPReal& b) {
        MPReal r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MPReal operator-(const MPReal& a) {
        MPReal r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend MPReal operator*(const MPReal& a, long b) {
        MPReal r(a.prec());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend MPReal operator*(long a, const MPReal& b) { return b * a; }
    friend MPReal operator/(const MPReal& a, long b) {
        MPReal r(a.prec());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend MPReal operator+(const MPReal& a, long b) {
        MPReal r(a.prec());
        mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend MPReal operator-(const MPReal& a, long b) {
        MPReal r(a.prec());
        mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    MPReal& operator+=(const MPReal& b) {
        if (prec() < b.prec()) *this = *this + b;
        else mpfr_add(v_, v_, b.v_, MPFR_RNDN);
        return *this;
    }
    MPReal& operator-=(const MPReal& b) {
        if (prec() < b.prec()) *this = *this - b;
        else mpfr_sub(v_, v_, b.v_, MPFR_RNDN);
        return *this;
    }
    MPReal& operator*=(const MPReal& b) {
        if (prec() < b.prec()) *this = *this * b;
        else mpfr_mul(v_, v_, b.v_, MPFR_RNDN);
        return *this;
    }

    friend bool operator==(const MPReal& a, const MPReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator<(const MPReal& a, const MPReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const MPReal& a, const MPReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const MPReal& a, const MPReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const MPReal& a, const MPReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    /// Decimal string with explicit exponent. digits == 0 prints enough
    /// digits for an exact round trip at this precision.
    std::string to_string(std::size_t digits = 0) const {
        if (mpfr_nan_p(v_)) return "nan";
        if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
        if (mpfr_zero_p(v_)) return "0";
        mpfr_exp_t exp = 0;
        char* raw = mpfr_get_str(nullptr, &exp, 10, digits, v_, MPFR_RNDN);
        std::string mant(raw);
        mpfr_free_str(raw);
        std::string sgn;
        if (!mant.empty() && mant[0] == '-') {
            sgn = "-";
            mant.erase(0, 1);
        }
        while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
        std::string out = sgn + mant.substr(0, 1);
        if (mant.size() > 1) out += "." + mant.substr(1);
        out += "e" + std::to_string(static_cast<long>(exp - 1));
        return out;
    }

private:
    mpfr_t v_;
};

inline MPReal abs(const MPReal& a) {
    MPReal r(a.prec());
    mpfr_abs(r.get(), a.get(), MPFR_RNDN);
    return r;
}
inline MPReal sqrt(const MPReal& a) {
    MPReal r(a.prec());
    mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
    return r;
}
inline MPReal ln(const MPReal& a) {
    if (!(a.sign() > 0)) throw std::domain_error("ln of non-positive value");
    MPReal r(a.prec());
    mpfr_log(r.get(), a.get(), MPFR_RNDN);
    return r;
}
inline MPReal pow_si(const MPReal& a, long e) {
    MPReal r(a.prec());
    mpfr_pow_si(r.get(), a.get(), e, MPFR_RNDN);
    return r;
}

inline MPReal const_pi(mpfr_prec_t bits) {
    MPReal r(bits);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}
inline MPReal const_euler(mpfr_prec_t bits) {
    MPReal r(bits);
    mpfr_const_euler(r.get(), MPFR_RNDN);
    return r;
}
inline MPReal const_ln2(mpfr_prec_t bits) {
    MPReal r(bits);
    mpfr_const_log2(r.get(), MPFR_RNDN);
    return r;
}
inline MPReal const_sqrt3(mpfr_prec_t bits) {
    MPReal r(bits);
    mpfr_sqrt_ui(r.get(), 3, MPFR_RNDN);
    return r;
}

/// sqrt(pi) etc. convenience entry points take decimal digits, matching the
/// rest of the public surface.
inline MPReal pi_digits(int digits) { return const_pi(bits_for_digits(digits)); }
inline MPReal euler_digits(int digits) { return const_euler(bits_for_digits(digits)); }

/// Evaluate a + b*sqrt(3) to `digits` decimal digits.
inline MPReal to_real(const QSqrt3& x, int digits) {
    mpfr_prec_t bits = bits_for_digits(digits);
    MPReal rat(x.rat(), bits + 16);
    MPReal irr(x.irr(), bits + 16);
    return MPReal(rat + irr * const_sqrt3(bits + 16), bits);
}

/// Exact half-integer, stored as twice its value (always odd).
struct HalfInt {
    long twice;

    static HalfInt plus_half(long n) { return HalfInt{2 * n + 1}; }    // n + 1/2
    static HalfInt minus_half(long n) { return HalfInt{2 * n - 1}; }   // n - 1/2

    bool positive() const { return twice > 0; }
    /// n such that value = n + 1/2; requires a positive half-integer.
    long whole_part() const { return (twice - 1) / 2; }
    double to_double() const { return twice / 2.0; }
};

/// Gamma at a positive half-integer via (2n)! sqrt(pi) / (4^n n!).
inline MPReal gamma_half(HalfInt h, mpfr_prec_t bits) {
    if (!h.positive() || h.twice % 2 == 0)
        throw std::domain_error("gamma_half requires a positive half-integer");
    long n = h.whole_part();
    Int num, den;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(2 * n));
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(2 * n));
    Rational ratio = make_rational(num, den);
    MPReal sqrt_pi(bits + 16);
    mpfr_const_pi(sqrt_pi.get(), MPFR_RNDN);
    mpfr_sqrt(sqrt_pi.get(), sqrt_pi.get(), MPFR_RNDN);
    return MPReal(MPReal(ratio, bits + 16) * sqrt_pi, bits);
}

/// Gamma at a positive integer: (n-1)!.
inline MPReal gamma_int(long n, mpfr_prec_t bits) {
    if (n <= 0) throw std::domain_error("gamma_int requires a positive integer");
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n - 1));
    return MPReal(f, bits);
}

namespace detail {
// Cumulative exact sums 2*sum_{k=1..n} 1/(2k-1), grown on demand.
inline const Rational& odd_harmonic(long n) {
    thread_local std::vector<Rational> cache{Rational(0)};
    while (static_cast<long>(cache.size()) <= n) {
        long k = static_cast<long>(cache.size());
        cache.push_back(cache.back() + make_rational(2, 2 * k - 1));
    }
    return cache[static_cast<std::size_t>(n)];
}
}  // namespace detail

/// Digamma at n + 1/2, n >= 0.
inline MPReal psi_half(HalfInt h, mpfr_prec_t bits) {
    if (!h.positive() || h.twice % 2 == 0)
        throw std::domain_error("psi_half requires a positive half-integer");
    long n = h.whole_part();
    mpfr_prec_t wide = bits + 16;
    MPReal r = MPReal(detail::odd_harmonic(n), wide) - const_euler(wide) - 2 * const_ln2(wide);
    return MPReal(r, bits);
}

/// |a - b| <= 10^(1-digits) * max(1, |b|): the decimal-digit accuracy contract.
inline bool digits_close(const MPReal& a, const MPReal& b, int digits) {
    mpfr_prec_t bits = std::max(a.prec(), b.prec()) + 16;
    MPReal diff = abs(a - b);
    MPReal bound = abs(MPReal(b, bits));
    if (bound < MPReal(1L, bits)) bound = MPReal(1L, bits);
    MPReal scale(bits);
    mpfr_ui_pow_ui(scale.get(), 10, static_cast<unsigned long>(digits - 1), MPFR_RNDN);
    return diff * scale <= bound;
}

/// Distance between a and b in units of the last place of a at its precision.
inline double ulp_distance(const MPReal& a, const MPReal& b) {
    MPReal d = abs(a - b);
    if (d.is_zero()) return 0.0;
    if (a.is_zero()) return std::numeric_limits<double>::infinity();
    mpfr_exp_t ea = mpfr_get_exp(a.get());
    MPReal ulp(a.prec());
    mpfr_set_ui_2exp(ulp.get(), 1, ea - a.prec(), MPFR_RNDN);
    return (d / ulp).to_double();
}

}  // namespace pione
