#include <doctest.h>

#include <random>

#include "cwpair/casson.hpp"
#include "cwpair/dedekind.hpp"
#include "cwpair/errors.hpp"
#include "cwpair/lift.hpp"
#include "support.hpp"

using namespace cwpair;

namespace {

const KnotRecord& knot(const char* name) { return find_knot(builtin_catalog(), name); }

PairDescription make_desc(const KnotRecord& k, long cover, long p, long q) {
    PairDescription d;
    d.knot = k;
    d.k = cover;
    d.p = p;
    d.q = q;
    return d;
}

}  // namespace

TEST_CASE("surgery formula on S^3 fixtures") {
    CHECK(lambda_surgery_s3(knot("trefoil").alexander, Int(1), Int(1)) == Rational(2));
    CHECK(lambda_surgery_s3(knot("trefoil").alexander, Int(6), Int(1)) == Rational(11, 18));
    // unknot: only the dedekind term remains
    CHECK(lambda_surgery_s3(knot("unknot").alexander, Int(7), Int(3)) ==
          dedekind_standard(Int(3), Int(7)));
    CHECK(lambda_surgery_s3(knot("unknot").alexander, Int(-5), Int(2)) ==
          dedekind_standard(Int(2), Int(-5)));

    CHECK_THROWS_AS(lambda_surgery_s3(knot("trefoil").alexander, Int(0), Int(1)), DomainError);
    CHECK_THROWS_AS(lambda_surgery_s3(knot("trefoil").alexander, Int(4), Int(2)), DomainError);
    CHECK_THROWS_AS(lambda_surgery_s3(knot("trefoil").alexander, Int(4), Int(-1)), DomainError);
}

TEST_CASE("cover surgery formula fixtures") {
    const SymPoly lift2 = cyclotomic_lift(knot("trefoil").alexander, 2);
    CHECK(lambda_cover_surgery(lift2, Int(3), Int(1), Rational(0)) == Rational(5, 18));
    CHECK(lambda_cover_surgery(SymPoly::one(), Int(1), Int(1), Rational(0)) == Rational(0));
    const SymPoly lift3 = cyclotomic_lift(knot("trefoil").alexander, 3);
    CHECK(lambda_cover_surgery(lift3, Int(2), Int(1), Rational(0)) == Rational(1, 4));
    // affine in lambda_branched with slope 1
    CHECK(lambda_cover_surgery(lift2, Int(3), Int(1), Rational(7, 5)) ==
          Rational(5, 18) + Rational(7, 5));
}

TEST_CASE("pair formula fixtures") {
    PairDescription d = make_desc(knot("trefoil"), 2, 3, 1);
    d.lambda_x = Rational(11, 18);
    d.lambda_branched = Rational(0);
    const LambdaPairResult r = lambda_pair(d);
    CHECK(r.branched_resolved);
    CHECK(r.value == Rational(5, 18));
    CHECK(r.str() == "5/18");
}

TEST_CASE("pair formula reduces to the dedekind term on the unknot") {
    std::mt19937_64 rng(515);
    for (int i = 0; i < 30; ++i) {
        const long k = testsupport::rand_in(rng, 2, 6);
        const long p = testsupport::rand_in(rng, 1, 9) * (i % 2 == 0 ? 1 : -1);
        const long q = testsupport::rand_in(rng, 1, 9);
        Int g;
        mpz_gcd(g.get_mpz_t(), Int(k * p).get_mpz_t(), Int(q).get_mpz_t());
        if (g != 1) { --i; continue; }
        PairDescription d = make_desc(knot("unknot"), k, p, q);
        d.lambda_x = dedekind_standard(Int(q), Int(k * p));
        d.lambda_branched = Rational(0);
        CHECK(lambda_pair(d).value == dedekind_standard(Int(q), Int(p)));
    }
}

TEST_CASE("pair formula agrees with the cover surgery formula (figure-8, k=2, 1/1)") {
    PairDescription d = make_desc(knot("figure8"), 2, 1, 1);
    d.lambda_x = lambda_surgery_s3(knot("figure8").alexander, Int(2), Int(1));
    d.lambda_branched = Rational(0);
    const SymPoly lift = cyclotomic_lift(knot("figure8").alexander, 2);
    CHECK(lambda_pair(d).value == lambda_cover_surgery(lift, Int(1), Int(1), Rational(0)));
}

TEST_CASE("algebraic consistency of the three surgery formulas") {
    // Setting lambda_x from the base surgery formula forces the pair
    // formula to agree with the cover surgery formula, exactly, for every
    // valid description.
    std::mt19937_64 rng(904);
    const char* names[] = {"unknot", "trefoil", "figure8", "pretzel_-2_3_7"};
    int done = 0;
    while (done < 100) {
        const KnotRecord& rec = knot(names[testsupport::rand_in(rng, 0, 3)]);
        const long k = testsupport::rand_in(rng, 2, 4);
        const long p = testsupport::rand_in(rng, 1, 9) * (testsupport::rand_in(rng, 0, 1) ? 1 : -1);
        const long q = testsupport::rand_in(rng, 1, 9);
        Int g;
        mpz_gcd(g.get_mpz_t(), Int(k * p).get_mpz_t(), Int(q).get_mpz_t());
        if (g != 1) continue;
        const Rational lambda_branched(testsupport::rand_in(rng, -50, 50),
                                       testsupport::rand_in(rng, 1, 20));

        PairDescription d = make_desc(rec, k, p, q);
        d.lambda_x = lambda_surgery_s3(rec.alexander, Int(k * p), Int(q));
        d.lambda_branched = lambda_branched;

        const SymPoly lift = cyclotomic_lift(rec.alexander, k);
        CHECK(lambda_pair(d).value ==
              lambda_cover_surgery(lift, Int(p), Int(q), lambda_branched));
        ++done;
    }
}

TEST_CASE("pair formula is affine in lambda_x (slope k) and lambda_branched (slope 1)") {
    std::mt19937_64 rng(70);
    for (long k = 2; k <= 4; ++k) {
        PairDescription d = make_desc(knot("figure8"), k, 3, 1);
        const Rational base_x(testsupport::rand_in(rng, -9, 9), testsupport::rand_in(rng, 1, 9));
        const Rational delta_x(testsupport::rand_in(rng, 1, 9), testsupport::rand_in(rng, 1, 9));
        d.lambda_branched = Rational(0);

        d.lambda_x = base_x;
        const Rational v0 = lambda_pair(d).value;
        d.lambda_x = base_x + delta_x;
        const Rational v1 = lambda_pair(d).value;
        CHECK(v1 - v0 == Rational(k) * delta_x);

        d.lambda_branched = Rational(13, 7);
        CHECK(lambda_pair(d).value - v1 == Rational(13, 7));
    }
}

TEST_CASE("unresolved branched-cover invariant yields a symbolic result") {
    PairDescription d = make_desc(knot("trefoil"), 2, 3, 1);
    d.lambda_x = Rational(11, 18);
    const LambdaPairResult r = lambda_pair(d);
    CHECK_FALSE(r.branched_resolved);
    CHECK(r.value == Rational(5, 18));  // the rational part
    CHECK(r.str() == "lambda_branched + 5/18");
}

TEST_CASE("the branched-cover invariant falls back to the knot record table") {
    KnotRecord rec = knot("trefoil");
    rec.branched_cover_lambda[2] = Rational(-3, 2);
    PairDescription d;
    d.knot = rec;
    d.k = 2;
    d.p = 3;
    d.q = 1;
    d.lambda_x = Rational(11, 18);
    const LambdaPairResult r = lambda_pair(d);
    CHECK(r.branched_resolved);
    CHECK(r.value == Rational(5, 18) + Rational(-3, 2));
    // an explicit value overrides the table
    d.lambda_branched = Rational(0);
    CHECK(lambda_pair(d).value == Rational(5, 18));
}

TEST_CASE("pair description validation") {
    PairDescription d = make_desc(knot("trefoil"), 2, 3, 1);
    d.lambda_x = Rational(0);
    CHECK_NOTHROW(d.validate());

    PairDescription bad = d;
    bad.k = 1;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = d;
    bad.p = 0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = d;
    bad.q = 0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = d;
    bad.q = 2;  // gcd(kp, q) = 2
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = d;
    bad.link_coefficients = {1, -1, 2};
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = d;
    bad.link_coefficients = {1, -1, 1};
    CHECK_NOTHROW(bad.validate());

    PairDescription no_lambda = make_desc(knot("trefoil"), 2, 3, 1);
    CHECK_THROWS_AS(lambda_pair(no_lambda), DomainError);
}

TEST_CASE("replication formula") {
    CHECK(lambda_replication(Rational(5), Rational(5), 3, Rational(9, 7)) == Rational(9, 7));
    CHECK(lambda_replication(Rational(5), Rational(3), 2, Rational(1)) == Rational(5));
    CHECK(lambda_replication(Rational(11, 18), Rational(11, 18), 2, Rational(5, 18)) ==
          Rational(5, 18));
}
