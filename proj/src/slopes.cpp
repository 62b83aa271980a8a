#include "cwpair/slopes.hpp"

#include <algorithm>
#include <sstream>

#include "cwpair/errors.hpp"

namespace cwpair {

Slope::Slope(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
    if (sgn(p_) == 0 && sgn(q_) == 0) {
        throw DomainError("0/0 is not a slope");
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
    p_ /= g;
    q_ /= g;
    if (sgn(q_) < 0 || (sgn(q_) == 0 && sgn(p_) < 0)) {  // unoriented: fix the sign of q
        p_ = -p_;
        q_ = -q_;
    }
}

Slope Slope::parse(std::string_view text) {
    const size_t slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            const Rational p = Rational::parse(text);
            if (!p.is_integer()) throw ParseError("slope numerator must be an integer");
            return Slope(p.num(), 1);
        }
        const Rational p = Rational::parse(text.substr(0, slash));
        const Rational q = Rational::parse(text.substr(slash + 1));
        if (!p.is_integer() || !q.is_integer()) {
            throw ParseError("slope coefficients must be integers");
        }
        return Slope(p.num(), q.num());
    } catch (const ParseError&) {
        throw ParseError("invalid slope '" + std::string(text) + "': expected p/q");
    }
}

Int distance(const Slope& a, const Slope& b) {
    return distance_unreduced(a.num(), a.den(), b.num(), b.den());
}

Int distance_unreduced(const Int& p1, const Int& q1, const Int& p2, const Int& q2) {
    return abs(p1 * q2 - q1 * p2);
}

CoverSlope cover_slope(const Slope& base, long k) {
    if (k < 1) throw DomainError("cover order must be positive");
    Int p = base.num();
    if (!mpz_divisible_ui_p(p.get_mpz_t(), static_cast<unsigned long>(k))) {
        throw DomainError("cover order " + std::to_string(k) + " does not divide the slope numerator " +
                          p.get_str());
    }
    const Slope lifted(p / k, base.den());
    const bool caveat = lifted.num() == 1 || lifted.num() == -1;
    return {lifted, caveat};
}

std::vector<DivisorEntry> divisor_family(const Slope& base) {
    if (sgn(base.num()) <= 0) {
        throw DomainError("divisor family requires a positive slope numerator");
    }
    const Int p = base.num();
    std::vector<Int> divisors;
    for (Int r(1); r * r <= p; ++r) {
        if (mpz_divisible_p(p.get_mpz_t(), r.get_mpz_t())) {
            divisors.push_back(r);
            if (r * r != p) divisors.push_back(p / r);
        }
    }
    std::sort(divisors.begin(), divisors.end());

    std::vector<DivisorEntry> family;
    family.reserve(divisors.size());
    for (const Int& r : divisors) {
        const Int order = p / r;
        family.push_back({order, Slope(r, base.den()), order == 1});
    }
    return family;
}

std::string_view slope_kind_str(SlopeKind kind) {
    return kind == SlopeKind::finite ? "finite" : "cyclic";
}

SlopeKind parse_slope_kind(std::string_view text) {
    if (text == "finite") return SlopeKind::finite;
    if (text == "cyclic") return SlopeKind::cyclic;
    throw ParseError("invalid slope kind '" + std::string(text) + "': expected finite or cyclic");
}

std::string SlopeViolation::str() const {
    std::ostringstream out;
    out << "violation[" << rule << "]:";
    for (const auto& s : slopes) out << " " << s.str();
    if (!bound.is_zero()) {
        out << " at distance " << dist.get_str() << " > " << bound.str();
    }
    out << " (assumes";
    for (size_t i = 0; i < hypotheses.size(); ++i) out << (i ? ", " : " ") << hypotheses[i];
    out << ")";
    return out.str();
}

namespace {

bool nontrivial_numerator(const Slope& s) { return s.num() != 1 && s.num() != -1; }

void check_pair_bound(const std::vector<const SlopeClaim*>& left,
                      const std::vector<const SlopeClaim*>& right, bool same_list,
                      const std::string& rule, const Rational& bound,
                      const std::vector<std::string>& hypotheses, SlopeReport& report) {
    for (size_t i = 0; i < left.size(); ++i) {
        for (size_t j = same_list ? i + 1 : 0; j < right.size(); ++j) {
            if (left[i] == right[j]) continue;
            const Int d = distance(left[i]->slope, right[j]->slope);
            if (Rational(d) > bound) {
                report.violations.push_back(
                    {rule, {left[i]->slope, right[j]->slope}, d, bound, hypotheses});
            }
        }
    }
}

}  // namespace

SlopeReport check_slope_bounds(const std::vector<SlopeClaim>& claims, long k,
                               const GeomFlags& flags) {
    if (k <= 1) throw DomainError("slope bounds require cover order k > 1");
    for (const auto& claim : claims) {
        if (claim.cover_order != k) {
            throw DomainError("mixed cover orders: claim for " + claim.slope.str() +
                              " has cover order " + std::to_string(claim.cover_order) +
                              ", expected " + std::to_string(k));
        }
    }

    std::vector<const SlopeClaim*> finite, cyclic_nontrivial;
    for (const auto& claim : claims) {
        if (claim.kind == SlopeKind::finite) finite.push_back(&claim);
        else if (nontrivial_numerator(claim.slope)) cyclic_nontrivial.push_back(&claim);
    }

    SlopeReport report;
    const bool base_hyps = flags.irreducible && flags.not_seifert_fibered;

    if (base_hyps) {
        report.applied.push_back(
            "at most one cyclic slope with numerator != 1 (assumes irreducible, "
            "not_seifert_fibered)");
        if (cyclic_nontrivial.size() > 1) {
            SlopeViolation v{"cyclic-multiplicity", {}, Int(0), Rational(0),
                             {"irreducible", "not_seifert_fibered"}};
            for (const auto* c : cyclic_nontrivial) v.slopes.push_back(c->slope);
            report.violations.push_back(std::move(v));
        }
    }
    if (base_hyps && flags.not_cable_on_twisted_I_bundle) {
        report.applied.push_back("finite-finite distance <= 5/k (assumes irreducible, "
                                 "not_seifert_fibered, not_cable_on_twisted_I_bundle)");
        check_pair_bound(finite, finite, true, "finite-finite-5k", Rational(5, k),
                         {"irreducible", "not_seifert_fibered", "not_cable_on_twisted_I_bundle"},
                         report);
    }
    if (flags.hyperbolic) {
        report.applied.push_back("cyclic(|p|!=1)-finite distance <= 2/k (assumes hyperbolic)");
        check_pair_bound(cyclic_nontrivial, finite, false, "cyclic-finite-2k", Rational(2, k),
                         {"hyperbolic"}, report);
        report.applied.push_back("finite-finite distance <= 3/k (assumes hyperbolic)");
        check_pair_bound(finite, finite, true, "finite-finite-3k", Rational(3, k), {"hyperbolic"},
                         report);
    }
    return report;
}

}  // namespace cwpair
