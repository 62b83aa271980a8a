#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cwpair/knot.hpp"
#include "cwpair/rational.hpp"
#include "cwpair/sympoly.hpp"

namespace cwpair {

/// A pairwise Dehn surgery description: k-fold cover data for kp/q-surgery
/// on a knot K together with the +-1-framed link metadata and the lambda
/// inputs that the surgery formulas consume. The link enters the pair
/// formula only through lambda_x, so link_coefficients are validated but
/// never used numerically.
struct PairDescription {
    KnotRecord knot;
    long k = 0;                          // cover order, > 1
    Int p = 1;                           // |p| >= 1
    Int q = 1;                           // >= 1, gcd(kp, q) = 1
    std::vector<int> link_coefficients;  // each +1 or -1
    std::optional<Rational> lambda_x;         // lambda of the base space X
    std::optional<Rational> lambda_branched;  // lambda of the k-fold branched cover of S^3

    /// Throws DomainError naming the violated invariant.
    void validate() const;
};

/// Casson-Walker invariant of a/b-surgery on a knot in S^3 with normalized
/// Alexander polynomial delta:  (b/a) delta''(1) + s(b, a), with the
/// classical Dedekind sum. Requires gcd(a, b) = 1, a nonzero, b >= 1.
Rational lambda_surgery_s3(const SymPoly& delta, const Int& a, const Int& b);

/// Casson-Walker invariant of p/q-surgery on the lifted knot in the
/// branched cover:  lambda_branched + (q/p) delta_lift''(1) + s(q, p).
/// Requires gcd(p, q) = 1, p nonzero, q >= 1.
Rational lambda_cover_surgery(const SymPoly& delta_lift, const Int& p, const Int& q,
                              const Rational& lambda_branched);

/// Result of the pair formula. When no lambda for the branched cover is
/// known the result is the symbolic sum "lambda_branched + value".
struct LambdaPairResult {
    Rational value;
    bool branched_resolved = false;
    std::string str() const;
};

/// The pair surgery formula
///   lambda(cover) = k lambda_x + (q/p)(delta_lift''(1) - delta''(1))
///                   - k s(q, kp) + s(q, p) + lambda_branched
/// with delta_lift = cyclotomic_lift(knot.alexander, k). lambda_branched is
/// taken from the description, falling back to the knot record's table;
/// when both are absent the result is returned unresolved.
LambdaPairResult lambda_pair(const PairDescription& desc);

/// Replication of the link surgery contribution along the k-fold cover:
/// lambda_n_tilde + k (lambda_x - lambda_n).
Rational lambda_replication(const Rational& lambda_x, const Rational& lambda_n, long k,
                            const Rational& lambda_n_tilde);

}  // namespace cwpair
