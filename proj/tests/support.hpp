#pragma once

// Shared test helpers: independent oracles (kept independent of the
// implementation paths they check) and deterministic random generators.

#include <complex>
#include <random>
#include <vector>

#include "cwpair/matrix.hpp"
#include "cwpair/rational.hpp"
#include "cwpair/sympoly.hpp"

namespace testsupport {

using cwpair::Int;
using cwpair::Matrix;
using cwpair::Rational;
using cwpair::SymPoly;

// Cofactor (Laplace) expansion along the first row; exponential, used only
// as an oracle against the fraction-free elimination path.
template <typename T>
T laplace_det(const Matrix<T>& m) {
    const size_t n = m.rows();
    if (n == 0) return T(1);
    if (n == 1) return m(0, 0);
    T det{};
    for (size_t j = 0; j < n; ++j) {
        Matrix<T> minor(n - 1, n - 1);
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        const T term = m(0, j) * laplace_det(minor);
        if (j % 2 == 0) {
            det = det + term;
        } else {
            det = det - term;
        }
    }
    return det;
}

// Numeric value of a SymPoly at a complex point, with u^(e/2) taken on the
// principal branch.
inline std::complex<double> eval_complex(const SymPoly& p, std::complex<double> point) {
    std::complex<double> sum = 0.0;
    for (const auto& [e, c] : p.coeffs()) {
        sum += c.to_double() * std::pow(point, static_cast<double>(e) / 2.0);
    }
    return sum;
}

// Floating-point lift oracle: computes prod_{j=0}^{k-1} delta(zeta^j z) by
// complex coefficient convolution of the whole-power representative, reads
// off the coefficients of the induced polynomial in s = z^k, centers and
// scales to value 1 at 1, and evaluates at `point`. Entirely independent of
// the exact companion-matrix/resultant route.
inline std::complex<double> numeric_lift_value(const SymPoly& delta, long k,
                                               std::complex<double> point) {
    const long d = delta.max_exp();
    std::vector<std::complex<double>> p(static_cast<size_t>(d) + 1, 0.0);
    for (const auto& [e, c] : delta.coeffs()) {
        p[static_cast<size_t>((e + d) / 2)] = c.to_double();
    }

    std::vector<std::complex<double>> prod{1.0};
    const double two_pi = 6.283185307179586476925286766559;
    for (long j = 0; j < k; ++j) {
        const std::complex<double> zeta =
            std::polar(1.0, two_pi * static_cast<double>(j) / static_cast<double>(k));
        // factor_i = p_i * zeta^(j*i)
        std::vector<std::complex<double>> factor(p.size());
        std::complex<double> zpow = 1.0;
        for (size_t i = 0; i < p.size(); ++i) {
            factor[i] = p[i] * zpow;
            zpow *= zeta;
        }
        std::vector<std::complex<double>> next(prod.size() + factor.size() - 1, 0.0);
        for (size_t a = 0; a < prod.size(); ++a) {
            for (size_t b = 0; b < factor.size(); ++b) next[a + b] += prod[a] * factor[b];
        }
        prod = std::move(next);
    }

    // Only exponents divisible by k survive; the rest must be numerically 0.
    std::vector<std::complex<double>> in_s;
    for (size_t i = 0; i < prod.size(); ++i) {
        if (i % static_cast<size_t>(k) == 0) in_s.push_back(prod[i]);
    }

    std::complex<double> value_at_one = 0.0;
    for (const auto& c : in_s) value_at_one += c;

    // Center: degree d in s, shift by s^(-d/2).
    std::complex<double> sum = 0.0;
    for (size_t i = 0; i < in_s.size(); ++i) {
        sum += in_s[i] * std::pow(point, static_cast<double>(i) - static_cast<double>(d) / 2.0);
    }
    return sum / value_at_one;
}

// --- deterministic generators -------------------------------------------

inline long rand_in(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Random normalized symmetric polynomial with whole powers, Laurent span
// 2*half_span_max, small integer coefficients before normalization.
inline SymPoly random_normalized_sympoly(std::mt19937_64& rng, long half_span_max) {
    while (true) {
        const long g = rand_in(rng, 1, half_span_max);
        SymPoly p = SymPoly::constant(Rational(rand_in(rng, -4, 4)));
        for (long i = 1; i <= g; ++i) {
            long c = rand_in(rng, -4, 4);
            if (i == g && c == 0) c = rand_in(rng, 0, 1) == 0 ? 1 : -1;
            p = p + SymPoly::monomial(2 * i, Rational(c)) + SymPoly::monomial(-2 * i, Rational(c));
        }
        if (p.is_zero() || p.value_at_one().is_zero()) continue;
        return p.normalized();
    }
}

// Random monic integer polynomial of the given degree in whole powers.
inline SymPoly random_monic_poly(std::mt19937_64& rng, long degree) {
    SymPoly p = SymPoly::monomial(2 * degree, Rational(1));
    for (long i = 0; i < degree; ++i) {
        p = p + SymPoly::monomial(2 * i, Rational(rand_in(rng, -9, 9)));
    }
    return p;
}

inline std::pair<long, long> random_coprime_pair(std::mt19937_64& rng, long lo, long hi) {
    while (true) {
        const long x = rand_in(rng, lo, hi);
        const long y = rand_in(rng, lo, hi);
        Int g;
        mpz_gcd(g.get_mpz_t(), Int(x).get_mpz_t(), Int(y).get_mpz_t());
        if (g == 1) return {x, y};
    }
}

}  // namespace testsupport
