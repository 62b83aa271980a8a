#include "cwpair/dedekind.hpp"

#include "cwpair/errors.hpp"

namespace cwpair {

Rational sawtooth(const Rational& z) {
    if (z.is_integer()) return Rational(0);
    return z - Rational(z.floor()) - Rational(1, 2);
}

namespace {

void check_args(const Int& x, const Int& y) {
    if (sgn(x) == 0 || sgn(y) == 0) {
        throw DomainError("dedekind sum requires nonzero arguments");
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    if (g != 1) {
        throw DomainError("dedekind sum requires coprime arguments, gcd = " + g.get_str());
    }
}

Rational sawtooth_sum(const Int& x, const Int& y, const Int& bound) {
    Rational sum(0);
    for (Int j(1); j <= bound; ++j) {
        sum += sawtooth(Rational(j, y)) * sawtooth(Rational(j * x, y));
    }
    return sgn(y) < 0 ? -sum : sum;
}

}  // namespace

Rational dedekind_paper(const Int& x, const Int& y) {
    check_args(x, y);
    return sawtooth_sum(x, y, ::abs(x));
}

Rational dedekind_standard(const Int& x, const Int& y) {
    check_args(x, y);
    return sawtooth_sum(x, y, ::abs(y));
}

}  // namespace cwpair
