#include "cwpair/lift.hpp"

#include <vector>

#include "cwpair/errors.hpp"
#include "cwpair/matrix.hpp"

namespace cwpair {

namespace {

Matrix<Rational> matmul(const Matrix<Rational>& a, const Matrix<Rational>& b) {
    Matrix<Rational> out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < b.cols(); ++j) {
            Rational sum(0);
            for (size_t l = 0; l < a.cols(); ++l) sum += a(i, l) * b(l, j);
            out(i, j) = sum;
        }
    }
    return out;
}

}  // namespace

SymPoly cyclotomic_lift(const SymPoly& delta, long k) {
    if (!delta.is_normalized()) {
        throw DomainError("cyclotomic lift requires a normalized polynomial");
    }
    if (k < 1) throw DomainError("cyclotomic lift requires k >= 1");
    if (k == 1) return delta;

    const long d = delta.max_exp();  // centered: support is -d..d
    for (const auto& [e, c] : delta.coeffs()) {
        if (((e - d) % 2 + 2) % 2 != 0) {
            throw DomainError(
                "cyclotomic lift requires a whole-power representative "
                "(exponent support of uniform parity)");
        }
    }

    // Whole-power representative p(t) = t^(d/2) * delta(t), degree d, p(0) != 0.
    // Its roots are the roots of delta; the lift is prod_i (s - alpha_i^k)
    // up to a unit, i.e. the characteristic polynomial of C^k.
    std::vector<Rational> p(static_cast<size_t>(d) + 1);
    for (const auto& [e, c] : delta.coeffs()) p[static_cast<size_t>((e + d) / 2)] = c;

    const Rational lead = p.back();
    const size_t n = static_cast<size_t>(d);
    Matrix<Rational> companion(n, n);
    for (size_t i = 0; i + 1 < n; ++i) companion(i + 1, i) = Rational(1);
    for (size_t i = 0; i < n; ++i) companion(i, n - 1) = -(p[i] / lead);

    Matrix<Rational> power(n, n);
    for (size_t i = 0; i < n; ++i) power(i, i) = Rational(1);
    for (long step = 0; step < k; ++step) power = matmul(power, companion);

    Matrix<SymPoly> char_matrix(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            char_matrix(i, j) = SymPoly::monomial(0, -power(i, j));
            if (i == j) char_matrix(i, j) = char_matrix(i, j) + SymPoly::monomial(2, Rational(1));
        }
    }
    const SymPoly char_poly = bareiss_determinant(std::move(char_matrix));

    // char_poly lives on s-powers 0..2d (half-steps); recenter to -d..d.
    return char_poly.shifted(-d).normalized();
}

SymPoly lift_paper_eq10(const SymPoly& delta, long k) {
    if (!delta.is_normalized()) {
        throw DomainError("paper-variant lift requires a normalized polynomial");
    }
    if (k < 1 || k % 2 == 0) {
        throw DomainError("paper-variant lift is only defined for odd k >= 1");
    }
    SymPoly::CoeffMap out;
    for (const auto& [e, c] : delta.coeffs()) {
        if (e % 2 != 0) {
            throw DomainError("paper-variant lift requires whole-integer exponents");
        }
        out[e] = c.pow(k);
    }
    return SymPoly::from_coeffs(std::move(out));
}

}  // namespace cwpair
