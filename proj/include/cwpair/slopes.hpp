#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cwpair/rational.hpp"

namespace cwpair {

/// An unoriented boundary slope p/q: stored reduced with q >= 0, and with
/// p/q identified with -p/-q (so the meridian is 1/0).
class Slope {
public:
    Slope() : p_(1), q_(0) {}  // meridian
    Slope(Int p, Int q);
    /// Accepts "p/q" (the meridian is "1/0") or a bare integer "p".
    static Slope parse(std::string_view text);

    const Int& num() const { return p_; }
    const Int& den() const { return q_; }
    bool is_meridian() const { return sgn(q_) == 0; }

    std::string str() const { return p_.get_str() + "/" + q_.get_str(); }

    friend bool operator==(const Slope& a, const Slope& b) = default;

private:
    Int p_, q_;
};

/// Geometric intersection number |p_a q_b - q_a p_b| of two slopes.
Int distance(const Slope& a, const Slope& b);

/// Same formula on raw (possibly unreduced) coefficient pairs; the slope
/// scaling law distance(kp'/q', kp/q) = k distance(p'/q', p/q) is stated on
/// these unreduced forms.
Int distance_unreduced(const Int& p1, const Int& q1, const Int& p2, const Int& q2);

/// cover_slope((kp)/q, k) = p/q: the slope of the lifted knot in the k-fold
/// branched cover corresponding to surgery along (kp)/q downstairs.
/// cyclic_caveat flags |p| = 1, where a cyclic filling of the cover does not
/// certify a cyclic filling of the base.
struct CoverSlope {
    Slope slope;
    bool cyclic_caveat = false;
};
CoverSlope cover_slope(const Slope& base, long k);

/// One row of the divisor family of p/q: for each positive divisor r of p,
/// r/q-surgery on the lift of the knot to the (p/r)-fold branched cover.
struct DivisorEntry {
    Int cover_order;  // p/r
    Slope slope;      // r/q
    bool trivial;     // cover_order == 1
};
/// All rows, in ascending slope numerator (descending cover order).
/// Requires a positive slope numerator.
std::vector<DivisorEntry> divisor_family(const Slope& base);

enum class SlopeKind { finite, cyclic };
std::string_view slope_kind_str(SlopeKind kind);
SlopeKind parse_slope_kind(std::string_view text);

/// A user-asserted finite/cyclic filling of the lifted knot in the
/// cover_order-fold cover. Whether the filling really is finite or cyclic
/// is an input, never verified here.
struct SlopeClaim {
    Slope slope;
    SlopeKind kind = SlopeKind::finite;
    long cover_order = 1;
};

/// Geometric hypotheses about the base knot complement, asserted by the
/// user (they are not computable from this data model).
struct GeomFlags {
    bool irreducible = false;
    bool not_seifert_fibered = false;
    bool not_cable_on_twisted_I_bundle = false;
    bool hyperbolic = false;
};

struct SlopeViolation {
    std::string rule;                     // which bound failed
    std::vector<Slope> slopes;            // the offending claims
    Int dist;                             // 0 for the multiplicity rule
    Rational bound;                       // 0 for the multiplicity rule
    std::vector<std::string> hypotheses;  // flags the bound relied on
    std::string str() const;
};

struct SlopeReport {
    std::vector<std::string> applied;  // bounds actually checked, with their hypotheses
    std::vector<SlopeViolation> violations;
    bool consistent() const { return violations.empty(); }
};

/// Checks the claimed fillings of the lift against the covering-space
/// sharpenings of the cyclic/finite surgery bounds: under irreducible and
/// not_seifert_fibered, at most one cyclic slope with |numerator| != 1;
/// adding not_cable_on_twisted_I_bundle, finite-finite distance <= 5/k;
/// under hyperbolic, cyclic(|p|!=1)-finite distance <= 2/k and
/// finite-finite distance <= 3/k. Distances are integers compared against
/// the exact rational bounds (inclusive). All claims must carry
/// cover_order k > 1.
SlopeReport check_slope_bounds(const std::vector<SlopeClaim>& claims, long k,
                               const GeomFlags& flags);

}  // namespace cwpair
