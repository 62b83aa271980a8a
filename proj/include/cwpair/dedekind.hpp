#pragma once

#include "cwpair/rational.hpp"

namespace cwpair {

/// Sawtooth function ((z)): 0 for integer z, otherwise z - floor(z) - 1/2.
Rational sawtooth(const Rational& z);

/// Dedekind sum exactly as printed in the source material:
///     s(x,y) = sign(y) * sum_{j=1}^{|x|} ((j/y)) ((jx/y))
/// The summation bound |x| differs from the classical |y|; the two
/// functions are deliberately independent (see dedekind_standard).
/// Requires x, y nonzero and coprime.
Rational dedekind_paper(const Int& x, const Int& y);

/// Classical Dedekind sum, with the summation running to |y|:
///     s(x,y) = sign(y) * sum_{j=1}^{|y|} ((j/y)) ((jx/y))
/// This is the form satisfying Dedekind reciprocity and the one consumed
/// by the surgery formulas. Requires x, y nonzero and coprime.
Rational dedekind_standard(const Int& x, const Int& y);

}  // namespace cwpair
