#pragma once

#include <map>
#include <string>
#include <string_view>

#include "cwpair/rational.hpp"

namespace cwpair {

/// Exact Laurent polynomial in t with rational coefficients on a
/// half-integer exponent grid: the key e of the coefficient map stands for
/// the term t^(e/2). Zero coefficients are never stored, so equality of the
/// maps is equality of polynomials.
///
/// Symmetry (coeff(e) == coeff(-e)) and normalization (symmetric with value
/// 1 at t = 1) are queryable properties rather than stored flags; they are
/// cheap on the polynomial sizes that occur here.
class SymPoly {
public:
    using CoeffMap = std::map<long, Rational>;

    SymPoly() = default;  // zero polynomial
    explicit SymPoly(long c) { if (c != 0) coeffs_[0] = Rational(c); }

    static SymPoly constant(const Rational& c) { return monomial(0, c); }
    static SymPoly one() { return constant(Rational(1)); }
    /// c * t^(half_exp/2).
    static SymPoly monomial(long half_exp, const Rational& c);
    static SymPoly from_coeffs(CoeffMap coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    const CoeffMap& coeffs() const { return coeffs_; }
    Rational coeff(long half_exp) const;
    /// Lowest/highest occupied exponent, in half-steps. Errors on zero.
    long min_exp() const;
    long max_exp() const;

    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator*(const SymPoly& o) const;
    SymPoly operator-() const;
    SymPoly times(const Rational& c) const;
    /// Multiply by t^(half_steps/2); shifting by an even count is
    /// multiplication by a whole power of t (a unit in the ~ relation).
    SymPoly shifted(long half_steps) const;

    friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Sum of coefficients, i.e. the value at t = 1.
    Rational value_at_one() const;

    /// Exact value at a nonzero rational point. Terms with odd half-step
    /// exponents are genuine half powers and require the point to be the
    /// square of a positive rational.
    Rational evaluate(const Rational& point) const;

    bool is_symmetric() const;
    bool is_normalized() const;

    /// The unique representative of this polynomial's unit class that is
    /// symmetric and has value 1 at t = 1: exponents are centered and the
    /// result is divided by its value at 1. Errors on the zero polynomial,
    /// on a coefficient multiset that is not mirror-symmetric about its
    /// midpoint, and when the centered value at 1 vanishes (the relevant
    /// cover is not a rational homology sphere).
    SymPoly normalized() const;

    /// Exact second derivative at t = 1 of sum coeff(e) t^(e/2), i.e.
    /// sum coeff(e) (e/2)(e/2 - 1); by symmetry equal to sum coeff(e)(e/2)^2.
    /// Requires a normalized polynomial.
    Rational second_derivative_at_one() const;

    /// Canonical text form, terms in ascending exponent order, e.g.
    /// "1/4*u^-1 + 1/2 + 1/4*u" or "t^{1/2} + t^{-1/2}". With spaces=false
    /// the same form without blanks (machine-readable mode).
    std::string str(std::string_view var = "t", bool spaces = true) const;
    static SymPoly parse(std::string_view text);

private:
    CoeffMap coeffs_;
};

/// Whether a = c * t^k * b for some nonzero rational c and integer k
/// (the Alexander-polynomial unit equivalence).
bool unit_equivalent(const SymPoly& a, const SymPoly& b);

/// Exact Laurent division, used by the fraction-free determinant; the
/// division must be exact or an internal error is raised.
SymPoly exact_div(const SymPoly& a, const SymPoly& b);
inline bool is_zero(const SymPoly& p) { return p.is_zero(); }

}  // namespace cwpair
