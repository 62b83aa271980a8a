#include <doctest.h>

#include <complex>
#include <random>

#include "cwpair/errors.hpp"
#include "cwpair/lift.hpp"
#include "cwpair/sympoly.hpp"
#include "support.hpp"

using cwpair::cyclotomic_lift;
using cwpair::DomainError;
using cwpair::lift_paper_eq10;
using cwpair::Rational;
using cwpair::SymPoly;
using cwpair::unit_equivalent;

namespace {

const SymPoly kTrefoil = SymPoly::parse("t^-1 - 1 + t");
const SymPoly kFigure8 = SymPoly::parse("-t^-1 + 3 - t");

// Exact lift evaluated against the numeric product oracle at sample points
// off the unit circle.
void check_against_numeric_oracle(const SymPoly& delta, long k) {
    const SymPoly lifted = cyclotomic_lift(delta, k);
    for (int i = 0; i < 20; ++i) {
        const double r = 0.8 + 0.45 * i / 19.0;
        const double theta = 0.3 + 2.5 * i / 19.0;
        const std::complex<double> point = std::polar(r, theta);
        const std::complex<double> got = testsupport::eval_complex(lifted, point);
        const std::complex<double> want = testsupport::numeric_lift_value(delta, k, point);
        const double scale = std::max(1.0, std::abs(want));
        CHECK(std::abs(got - want) <= 1e-9 * scale);
    }
}

}  // namespace

TEST_CASE("lift fixtures") {
    CHECK(cyclotomic_lift(kTrefoil, 1) == kTrefoil);
    CHECK(cyclotomic_lift(kTrefoil, 2) == SymPoly::parse("1/3*u^-1 + 1/3 + 1/3*u"));
    CHECK(cyclotomic_lift(kTrefoil, 3) == SymPoly::parse("1/4*u^-1 + 1/2 + 1/4*u"));
    CHECK(cyclotomic_lift(kFigure8, 2) == SymPoly::parse("-1/5*u^-1 + 7/5 - 1/5*u"));
    CHECK(cyclotomic_lift(SymPoly::one(), 5) == SymPoly::one());
}

TEST_CASE("lift fixtures survive the numeric product oracle") {
    check_against_numeric_oracle(kTrefoil, 2);
    check_against_numeric_oracle(kTrefoil, 3);
    check_against_numeric_oracle(kFigure8, 2);
}

TEST_CASE("lift preconditions and failure modes") {
    CHECK_THROWS_AS(cyclotomic_lift(SymPoly::parse("t + 1"), 2), DomainError);  // not normalized
    CHECK_THROWS_AS(cyclotomic_lift(kTrefoil, 0), DomainError);
    // trefoil roots are primitive 6th roots of unity: the 6-fold cover is
    // not a rational homology sphere
    CHECK_THROWS_AS(cyclotomic_lift(kTrefoil, 6), DomainError);
    CHECK_THROWS_AS(cyclotomic_lift(kTrefoil, 12), DomainError);
}

TEST_CASE("lift is the identity at k = 1") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const SymPoly p = testsupport::random_normalized_sympoly(rng, 3);
        CHECK(cyclotomic_lift(p, 1) == p);
    }
}

TEST_CASE("lift is multiplicative") {
    std::mt19937_64 rng(12);
    int done = 0;
    while (done < 40) {
        const SymPoly a = testsupport::random_normalized_sympoly(rng, 2);
        const SymPoly b = testsupport::random_normalized_sympoly(rng, 2);
        const long k = testsupport::rand_in(rng, 2, 5);
        SymPoly lift_a, lift_b, lift_ab;
        try {
            lift_a = cyclotomic_lift(a, k);
            lift_b = cyclotomic_lift(b, k);
            lift_ab = cyclotomic_lift((a * b).normalized(), k);
        } catch (const DomainError&) {
            continue;  // a root of unity root; not a QHS cover
        }
        CHECK(unit_equivalent(lift_ab, lift_a * lift_b));
        CHECK(lift_ab == (lift_a * lift_b).normalized());
        ++done;
    }
}

TEST_CASE("random lifts agree with the numeric product oracle") {
    std::mt19937_64 rng(13);
    int done = 0;
    while (done < 50) {
        const SymPoly p = testsupport::random_normalized_sympoly(rng, 3);
        const long k = testsupport::rand_in(rng, 1, 6);
        try {
            check_against_numeric_oracle(p, k);
        } catch (const DomainError&) {
            continue;
        }
        ++done;
    }
}

TEST_CASE("paper-variant shortcut fixtures") {
    CHECK(lift_paper_eq10(kTrefoil, 3) == SymPoly::parse("u^-1 - 1 + u"));
    CHECK(lift_paper_eq10(kFigure8, 3) == SymPoly::parse("-u^-1 + 27 - u"));
    CHECK(lift_paper_eq10(SymPoly::one(), 5) == SymPoly::one());
    CHECK(lift_paper_eq10(kTrefoil, 1) == kTrefoil);

    CHECK_THROWS_AS(lift_paper_eq10(kTrefoil, 2), DomainError);  // k must be odd
    CHECK_THROWS_AS(lift_paper_eq10(SymPoly::parse("t^{1/2} + t^{-1/2}").normalized(), 3),
                    DomainError);  // half-integer exponents
}

TEST_CASE("the shortcut genuinely diverges from the lift at the trefoil, k = 3") {
    const SymPoly shortcut = lift_paper_eq10(kTrefoil, 3);
    const SymPoly lifted = cyclotomic_lift(kTrefoil, 3);
    CHECK(shortcut == SymPoly::parse("u^-1 - 1 + u"));
    CHECK(lifted == SymPoly::parse("1/4*u^-1 + 1/2 + 1/4*u"));
    CHECK_FALSE(unit_equivalent(shortcut, lifted));
}

TEST_CASE("lift rejects mixed-parity supports") {
    // symmetric, value 1 at 1, but mixes whole and half powers
    const SymPoly mixed =
        SymPoly::parse("t + t^{1/2} - 1 + t^{-1/2} + t^-1").normalized();
    CHECK_THROWS_AS(cyclotomic_lift(mixed, 2), DomainError);
}
