#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cwpair {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Exact rational number, the scalar type used throughout.
///
/// Always stored reduced with denominator >= 1; zero is 0/1. All arithmetic
/// is exact; there is no overflow and no rounding anywhere.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: integers embed
    Rational(const Int& n) : q_(n) {}
    Rational(long n, long d) : Rational(Int(n), Int(d)) {}
    Rational(const Int& n, const Int& d);

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// True mathematical floor: floor(-1/4) = -1.
    Int floor() const;

    Rational abs() const;

    /// Exact power; negative exponents require a nonzero base.
    Rational pow(long e) const;

    double to_double() const { return q_.get_d(); }

    /// "a/b" reduced, or "a" when the denominator is 1.
    std::string str() const;

    /// Accepts optional whitespace and a leading sign on the numerator only.
    static Rational parse(std::string_view text);

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;  // invariant: canonical (reduced, positive denominator)
};

}  // namespace cwpair
