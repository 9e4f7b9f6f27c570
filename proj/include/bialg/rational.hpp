#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace bialg {

// Exact rational scalar. Always in lowest terms with positive denominator;
// zero is 0/1. Arithmetic never rounds.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: intentionally implicit
    Rational(long num, long den);

    // Accepts "p" or "p/q" with q > 0, optional leading '-' on p only.
    static Rational parse(std::string_view s);

    std::string str() const;  // canonical rendering, inverse of parse

    const mpq_class& raw() const { return q_; }

    long num_long() const { return mpz_get_si(q_.get_num_mpz_t()); }
    long den_long() const { return mpz_get_si(q_.get_den_mpz_t()); }

    bool is_zero() const { return sgn(q_) == 0; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws on division by zero

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace bialg
