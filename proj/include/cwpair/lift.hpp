#pragma once

#include "cwpair/sympoly.hpp"

namespace cwpair {

/// The Alexander polynomial of the lifted knot in the k-fold branched
/// cyclic cover: the normalized Delta_lift with
///     Delta_lift(t^k) ~ prod_{j=0}^{k-1} delta(zeta^j t),   zeta = e^(2 pi i / k),
/// computed exactly over the rationals. The centered whole-power
/// representative p is taken to its companion matrix C and the product is
/// read off the characteristic polynomial of C^k (equivalently, the
/// resultant of p(z) and z^k - s with respect to z). Errors when the input
/// is not normalized, when no whole-power representative exists (mixed
/// exponent parity), and when the product vanishes at 1 (some delta(zeta^j)
/// is zero, so the cover is not a rational homology sphere).
SymPoly cyclotomic_lift(const SymPoly& delta, long k);

/// The shortcut formula
///     c_0^k + c_1^k (u + u^-1) + c_2^k (u^2 + u^-2) + ...
/// applied to delta = c_0 + c_1 (t + t^-1) + ..., k odd, returned WITHOUT
/// normalization. Kept for documentation and regression only: its
/// derivation assumes all cross-terms cancel, which fails already for
/// t - 1 + t^-1 at k = 3, where it disagrees with cyclotomic_lift beyond
/// unit equivalence. cyclotomic_lift is authoritative everywhere.
SymPoly lift_paper_eq10(const SymPoly& delta, long k);

}  // namespace cwpair
