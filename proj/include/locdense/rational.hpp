#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

#include "locdense/errors.hpp"

namespace locdense {

using Integer = mpz_class;

// Exact rational number, always kept canonical: reduced, denominator > 0.
// All comparisons are exact. Construction from floating point is deliberately
// impossible; parameters enter the system as "p/q" strings or integers only.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw InputError("rational with zero denominator");
        v_.canonicalize();
    }
    Rational(double) = delete;
    Rational(float) = delete;

    // Accepts an optionally signed "p/q" or plain integer. Anything else is
    // rejected, in particular decimal and exponent notation.
    static Rational parse(std::string_view text);

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    Rational pow(unsigned long e) const {
        Rational r;
        mpz_pow_ui(mpq_numref(r.v_.get_mpq_t()), mpq_numref(v_.get_mpq_t()), e);
        mpz_pow_ui(mpq_denref(r.v_.get_mpq_t()), mpq_denref(v_.get_mpq_t()), e);
        return r; // canonical because the base is canonical
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw InputError("division of rationals by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

inline Rational Rational::parse(std::string_view text) {
    auto is_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = (s[0] == '-');
        s.remove_prefix(1);
    }
    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!is_digits(num) || !is_digits(den))
        throw InputError("cannot parse '" + std::string(text) +
                         "' as a rational (use p/q or an integer)");
    Integer n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw InputError("rational '" + std::string(text) + "' has zero denominator");
    if (negative) n = -n;
    return Rational(n, d);
}

} // namespace locdense
