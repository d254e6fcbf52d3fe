#pragma once

// Exact arithmetic over Q and the quadratic field Q(sqrt3).
//
// Every coefficient generated by the recursions in this library lives in
// Q(sqrt3): the instanton action A = 8*sqrt(3)/5 only ever enters linearly,
// so an ordered pair of rationals is enough and no symbolic engine is needed.
// Values are immutable in spirit: all operations return fresh values, and a
// constructed QSqrt3 is always in canonical form (both parts reduced,
// denominators positive).

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pione {

using Int = mpz_class;
using Rational = mpq_class;

/// Build a canonical rational, rejecting zero denominators.
inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r;
    r.get_num() = num;
    r.get_den() = den;
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

/// Element a + b*sqrt(3) of Q(sqrt3), componentwise canonical.
class QSqrt3 {
public:
    QSqrt3() : rat_(0), irr_(0) {}
    QSqrt3(Rational rat) : rat_(std::move(rat)), irr_(0) {}
    QSqrt3(Rational rat, Rational irr) : rat_(std::move(rat)), irr_(std::move(irr)) {}
    QSqrt3(long value) : rat_(value), irr_(0) {}

    static QSqrt3 sqrt3() { return QSqrt3(Rational(0), Rational(1)); }
    static QSqrt3 from_ratio(long p, long q) { return QSqrt3(make_rational(p, q)); }

    const Rational& rat() const { return rat_; }
    const Rational& irr() const { return irr_; }

    bool is_zero() const { return rat_ == 0 && irr_ == 0; }
    bool is_rational() const { return irr_ == 0; }

    QSqrt3 conj() const { return QSqrt3(rat_, -irr_); }
    /// (a + b sqrt3)(a - b sqrt3) = a^2 - 3 b^2; zero only for the zero element.
    Rational norm() const { return rat_ * rat_ - 3 * irr_ * irr_; }

    friend QSqrt3 operator+(const QSqrt3& x, const QSqrt3& y) {
        return QSqrt3(x.rat_ + y.rat_, x.irr_ + y.irr_);
    }
    friend QSqrt3 operator-(const QSqrt3& x, const QSqrt3& y) {
        return QSqrt3(x.rat_ - y.rat_, x.irr_ - y.irr_);
    }
    friend QSqrt3 operator-(const QSqrt3& x) { return QSqrt3(-x.rat_, -x.irr_); }
    friend QSqrt3 operator*(const QSqrt3& x, const QSqrt3& y) {
        return QSqrt3(x.rat_ * y.rat_ + 3 * x.irr_ * y.irr_,
                      x.rat_ * y.irr_ + x.irr_ * y.rat_);
    }
    friend QSqrt3 operator*(const Rational& c, const QSqrt3& x) {
        return QSqrt3(c * x.rat_, c * x.irr_);
    }
    friend QSqrt3 operator*(const QSqrt3& x, const Rational& c) { return c * x; }

    QSqrt3 inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in Q(sqrt3)");
        Rational n = norm();  // nonzero: sqrt3 is irrational
        return QSqrt3(rat_ / n, -irr_ / n);
    }
    friend QSqrt3 operator/(const QSqrt3& x, const QSqrt3& y) { return x * y.inverse(); }
    friend QSqrt3 operator/(const QSqrt3& x, const Rational& c) {
        if (c == 0) throw std::domain_error("division by zero in Q(sqrt3)");
        return QSqrt3(x.rat_ / c, x.irr_ / c);
    }

    QSqrt3& operator+=(const QSqrt3& y) {
        rat_ += y.rat_;
        irr_ += y.irr_;
        return *this;
    }
    QSqrt3& operator-=(const QSqrt3& y) {
        rat_ -= y.rat_;
        irr_ -= y.irr_;
        return *this;
    }

    friend bool operator==(const QSqrt3& x, const QSqrt3& y) {
        return x.rat_ == y.rat_ && x.irr_ == y.irr_;
    }
    friend bool operator!=(const QSqrt3& x, const QSqrt3& y) { return !(x == y); }
    /// Lexicographic on canonical components; used for table keys only.
    friend bool operator<(const QSqrt3& x, const QSqrt3& y) {
        int c = mpq_cmp(x.rat_.get_mpq_t(), y.rat_.get_mpq_t());
        if (c != 0) return c < 0;
        return mpq_cmp(x.irr_.get_mpq_t(), y.irr_.get_mpq_t()) < 0;
    }

private:
    Rational rat_;
    Rational irr_;
};

/// The instanton action A = 8*sqrt(3)/5.
inline const QSqrt3& instanton_action() {
    static const QSqrt3 a(Rational(0), make_rational(8, 5));
    return a;
}

namespace detail {

inline std::string rational_str(const Rational& r) {
    std::string s = r.get_num().get_str();
    if (r.get_den() != 1) s += "/" + r.get_den().get_str();
    return s;
}

class QParser {
public:
    explicit QParser(std::string_view text) : text_(text) {}

    // Grammar: term [("+"|"-") r3term], where term is "R" or "R*r3" and the
    // trailing term (when present) must be an "*r3" one.
    QSqrt3 parse() {
        bool first_is_r3 = false;
        QSqrt3 value = term(first_is_r3);
        if (pos_ < text_.size()) {
            if (first_is_r3) fail("unexpected trailing input after r3 term");
            char c = text_[pos_];
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            bool is_r3 = false;
            std::size_t term_pos = pos_;
            QSqrt3 second = signed_term(c == '-' ? -1 : 1, is_r3);
            if (!is_r3) fail_at(term_pos, "second term must be of the form r/s*r3");
            value += second;
        }
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return value;
    }

private:
    QSqrt3 term(bool& is_r3) {
        int sign = 1;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            if (text_[pos_] == '-') sign = -1;
            ++pos_;
        }
        return signed_term(sign, is_r3);
    }

    QSqrt3 signed_term(int sign, bool& is_r3) {
        Rational mag = rational();
        if (pos_ < text_.size() && text_[pos_] == '*') {
            std::size_t star = pos_;
            ++pos_;
            if (text_.substr(pos_, 2) != "r3") fail_at(star + 1, "expected 'r3' after '*'");
            pos_ += 2;
            is_r3 = true;
            return QSqrt3(Rational(0), sign * mag);
        }
        is_r3 = false;
        return QSqrt3(sign * mag);
    }

    Rational rational() {
        Int num = integer();
        Int den = 1;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            den = integer();
            if (den == 0) fail("zero denominator");
        }
        return make_rational(num, den);
    }

    Int integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return Int(std::string(text_.substr(start, pos_ - start)), 10);
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
        throw ParseError(pos, msg);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Canonical text form: "p[/q]" | "[p[/q]](+|-)r[/s]*r3" | "[-]r[/s]*r3", no whitespace.
inline std::string format_qsqrt3(const QSqrt3& x) {
    if (x.is_zero()) return "0";
    std::string out;
    if (x.rat() != 0) out += detail::rational_str(x.rat());
    if (x.irr() != 0) {
        if (x.irr() > 0 && !out.empty()) out += "+";
        Rational i = x.irr();
        if (i < 0) {
            out += "-";
            i = -i;
        }
        out += detail::rational_str(i) + "*r3";
    }
    return out;
}

inline QSqrt3 parse_qsqrt3(std::string_view text) {
    if (text.empty()) throw ParseError(0, "empty input");
    return detail::QParser(text).parse();
}

}  // namespace pione

template <>
struct std::hash<pione::QSqrt3> {
    std::size_t operator()(const pione::QSqrt3& x) const noexcept {
        return std::hash<std::string>()(pione::format_qsqrt3(x));
    }
};
