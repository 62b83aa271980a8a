#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cwpair/matrix.hpp"
#include "cwpair/sympoly.hpp"

namespace cwpair {

/// A named knot: its normalized Alexander polynomial, an optional Seifert
/// matrix it was derived from, and optional user-supplied Casson-Walker
/// invariants of its k-fold branched cyclic covers (these come from the
/// literature and are never computed here).
struct KnotRecord {
    std::string name;
    SymPoly alexander;  // symmetric, value 1 at t = 1
    std::optional<IntMatrix> seifert;
    std::map<long, Rational> branched_cover_lambda;  // k -> lambda
};

/// Exact det(V - t V^T) for a square Seifert matrix, normalized to the
/// symmetric value-1 convention. The 0x0 matrix yields 1 (unknot). Errors
/// on non-square input and on an identically zero determinant.
SymPoly alexander_from_seifert(const IntMatrix& v);

/// Whether det(V - V^T) = +-1, i.e. the symmetrized pairing is unimodular
/// as it is for a genuine knot Seifert matrix. Callers warn when false.
bool has_unimodular_intersection_form(const IntMatrix& v);

/// det(A - tI) for the companion matrix A of a monic integer polynomial p
/// (given as a SymPoly in whole nonnegative powers of t). The result is
/// (-1)^deg(p) * p, so it generates the same ideal as p; this is a
/// self-test surface for the determinant machinery. Not normalized.
SymPoly companion_alexander(const SymPoly& p);

/// Parses a knot catalog (see README for the format: records introduced by
/// a "[knot]" line with "name = ...", "alexander = ...", optional
/// "seifert = [[...]]" and repeated "lambda_cover = k : a/b" fields).
/// Polynomials are normalized on load; duplicate names, asymmetric
/// polynomials, and Seifert/Alexander mismatches are rejected with the
/// offending line number. Non-unimodular Seifert pairings produce warnings.
std::vector<KnotRecord> load_catalog(std::string_view text,
                                     std::vector<std::string>* warnings = nullptr);

/// The built-in catalog: unknot, trefoil, figure8, pretzel_-2_3_7.
const std::vector<KnotRecord>& builtin_catalog();

/// The built-in catalog's source text (hashed by the CLI --version flag).
std::string_view builtin_catalog_text();

/// Looks up a knot by name in `records`; throws DomainError if absent.
const KnotRecord& find_knot(const std::vector<KnotRecord>& records, std::string_view name);

}  // namespace cwpair
