#include "cwpair/casson.hpp"

#include "cwpair/dedekind.hpp"
#include "cwpair/errors.hpp"
#include "cwpair/lift.hpp"

namespace cwpair {

void PairDescription::validate() const {
    if (k <= 1) throw DomainError("pair description requires k > 1");
    if (sgn(p) == 0) throw DomainError("pair description requires |p| >= 1");
    if (q < 1) throw DomainError("pair description requires q >= 1");
    Int kp = Int(k) * p;
    Int g;
    mpz_gcd(g.get_mpz_t(), kp.get_mpz_t(), q.get_mpz_t());
    if (g != 1) {
        throw DomainError("pair description requires gcd(kp, q) = 1, gcd = " + g.get_str());
    }
    for (int i : link_coefficients) {
        if (i != 1 && i != -1) {
            throw DomainError("link surgery coefficients must be +1 or -1");
        }
    }
    if (!knot.alexander.is_normalized()) {
        throw DomainError("knot record carries an unnormalized alexander polynomial");
    }
}

namespace {

void check_coprime_pair(const Int& a, const Int& b, const char* what) {
    if (sgn(a) == 0) throw DomainError(std::string(what) + " requires a nonzero surgery numerator");
    if (b < 1) throw DomainError(std::string(what) + " requires a positive surgery denominator");
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 1) {
        throw DomainError(std::string(what) + " requires coprime surgery coefficients, gcd = " +
                          g.get_str());
    }
}

}  // namespace

Rational lambda_surgery_s3(const SymPoly& delta, const Int& a, const Int& b) {
    check_coprime_pair(a, b, "surgery formula");
    return Rational(b, a) * delta.second_derivative_at_one() + dedekind_standard(b, a);
}

Rational lambda_cover_surgery(const SymPoly& delta_lift, const Int& p, const Int& q,
                              const Rational& lambda_branched) {
    check_coprime_pair(p, q, "cover surgery formula");
    return lambda_branched + Rational(q, p) * delta_lift.second_derivative_at_one() +
           dedekind_standard(q, p);
}

std::string LambdaPairResult::str() const {
    if (branched_resolved) return value.str();
    return "lambda_branched + " + value.str();
}

LambdaPairResult lambda_pair(const PairDescription& desc) {
    desc.validate();
    if (!desc.lambda_x) {
        throw DomainError("pair formula requires lambda_x, the invariant of the base space");
    }

    const SymPoly lift = cyclotomic_lift(desc.knot.alexander, desc.k);
    const Rational dd_base = desc.knot.alexander.second_derivative_at_one();
    const Rational dd_lift = lift.second_derivative_at_one();
    const Int kp = Int(desc.k) * desc.p;

    Rational value = Rational(desc.k) * *desc.lambda_x + Rational(desc.q, desc.p) * (dd_lift - dd_base) -
                     Rational(desc.k) * dedekind_standard(desc.q, kp) +
                     dedekind_standard(desc.q, desc.p);

    std::optional<Rational> branched = desc.lambda_branched;
    if (!branched) {
        auto it = desc.knot.branched_cover_lambda.find(desc.k);
        if (it != desc.knot.branched_cover_lambda.end()) branched = it->second;
    }
    if (branched) return {value + *branched, true};
    return {value, false};
}

Rational lambda_replication(const Rational& lambda_x, const Rational& lambda_n, long k,
                            const Rational& lambda_n_tilde) {
    return lambda_n_tilde + Rational(k) * (lambda_x - lambda_n);
}

}  // namespace cwpair
