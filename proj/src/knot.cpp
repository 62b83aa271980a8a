#include "cwpair/knot.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "cwpair/errors.hpp"

namespace cwpair {

SymPoly alexander_from_seifert(const IntMatrix& v) {
    if (!v.square()) throw DomainError("Seifert matrix must be square");
    const size_t n = v.rows();
    Matrix<SymPoly> m(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            // V_ij - t * V_ji
            m(i, j) = SymPoly::monomial(0, Rational(v(i, j))) -
                      SymPoly::monomial(2, Rational(v(j, i)));
        }
    }
    const SymPoly det = bareiss_determinant(std::move(m));
    if (det.is_zero()) {
        throw DomainError("degenerate Seifert pairing: det(V - tV^T) is identically zero");
    }
    return det.normalized();
}

bool has_unimodular_intersection_form(const IntMatrix& v) {
    if (!v.square()) throw DomainError("Seifert matrix must be square");
    const size_t n = v.rows();
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) m(i, j) = v(i, j) - v(j, i);
    }
    const Int det = bareiss_determinant(std::move(m));
    return det == 1 || det == -1;
}

SymPoly companion_alexander(const SymPoly& p) {
    if (p.is_zero()) throw DomainError("companion matrix requires a nonzero polynomial");
    long deg = 0;
    for (const auto& [e, c] : p.coeffs()) {
        if (e < 0 || e % 2 != 0) {
            throw DomainError("companion matrix requires whole nonnegative powers of t");
        }
        if (!c.is_integer()) {
            throw DomainError("companion matrix requires integer coefficients");
        }
        deg = std::max(deg, e / 2);
    }
    if (p.coeff(2 * deg) != Rational(1)) {
        throw DomainError("companion matrix requires a monic polynomial");
    }

    const size_t n = static_cast<size_t>(deg);
    Matrix<SymPoly> m(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            SymPoly entry;  // A_ij - t * delta_ij
            if (j + 1 == n) entry = SymPoly::monomial(0, -p.coeff(2 * static_cast<long>(i)));
            if (i == j + 1) entry = entry + SymPoly::one();
            if (i == j) entry = entry - SymPoly::monomial(2, Rational(1));
            m(i, j) = entry;
        }
    }
    return bareiss_determinant(std::move(m));
}

namespace {

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

[[noreturn]] void fail(size_t line, const std::string& msg) {
    throw ParseError("catalog line " + std::to_string(line) + ": " + msg);
}

struct RawRecord {
    size_t line = 0;  // the [knot] line
    std::optional<std::string> name;
    std::optional<std::pair<std::string, size_t>> alexander;
    std::optional<std::pair<std::string, size_t>> seifert;
    std::vector<std::pair<std::string, size_t>> lambda_covers;
};

KnotRecord validate(const RawRecord& raw, std::set<std::string>& seen,
                    std::vector<std::string>* warnings) {
    KnotRecord rec;
    if (!raw.name || raw.name->empty()) fail(raw.line, "record is missing a name");
    for (char c : *raw.name) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            fail(raw.line, "knot name must not contain whitespace");
        }
    }
    if (!seen.insert(*raw.name).second) fail(raw.line, "duplicate knot name '" + *raw.name + "'");
    rec.name = *raw.name;

    if (!raw.alexander) fail(raw.line, "record '" + rec.name + "' is missing an alexander polynomial");
    try {
        rec.alexander = SymPoly::parse(raw.alexander->first).normalized();
    } catch (const std::exception& e) {
        fail(raw.alexander->second, std::string("alexander polynomial: ") + e.what());
    }

    if (raw.seifert) {
        IntMatrix v;
        try {
            v = parse_int_matrix(raw.seifert->first);
        } catch (const std::exception& e) {
            fail(raw.seifert->second, std::string("seifert matrix: ") + e.what());
        }
        SymPoly derived;
        try {
            derived = alexander_from_seifert(v);
        } catch (const std::exception& e) {
            fail(raw.seifert->second, std::string("seifert matrix: ") + e.what());
        }
        if (derived != rec.alexander) {
            fail(raw.seifert->second, "record '" + rec.name +
                                          "': seifert matrix disagrees with the alexander "
                                          "polynomial (derived " +
                                          derived.str() + ")");
        }
        if (warnings && !has_unimodular_intersection_form(v)) {
            warnings->push_back("record '" + rec.name +
                                "': det(V - V^T) is not +-1; not a genuine knot Seifert matrix");
        }
        rec.seifert = std::move(v);
    }

    for (const auto& [value, line] : raw.lambda_covers) {
        const size_t colon = value.find(':');
        if (colon == std::string::npos) fail(line, "lambda_cover needs the form 'k : a/b'");
        long k = 0;
        try {
            k = std::stol(trim(value.substr(0, colon)));
        } catch (const std::exception&) {
            fail(line, "lambda_cover cover order must be an integer");
        }
        if (k <= 1) fail(line, "lambda_cover cover order must exceed 1");
        Rational lam;
        try {
            lam = Rational::parse(value.substr(colon + 1));
        } catch (const std::exception& e) {
            fail(line, std::string("lambda_cover value: ") + e.what());
        }
        if (!rec.branched_cover_lambda.emplace(k, lam).second) {
            fail(line, "duplicate lambda_cover entry for k = " + std::to_string(k));
        }
    }
    return rec;
}

}  // namespace

std::vector<KnotRecord> load_catalog(std::string_view text, std::vector<std::string>* warnings) {
    std::vector<KnotRecord> records;
    std::set<std::string> seen;
    std::optional<RawRecord> current;

    std::istringstream in{std::string(text)};
    std::string raw_line;
    size_t line_no = 0;
    while (std::getline(in, raw_line)) {
        ++line_no;
        const std::string line = trim(raw_line);
        if (line.empty() || line.front() == '#') continue;
        if (line == "[knot]") {
            if (current) records.push_back(validate(*current, seen, warnings));
            current = RawRecord{};
            current->line = line_no;
            continue;
        }
        if (!current) fail(line_no, "content before the first [knot] record");
        const size_t eq = line.find('=');
        if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "name") {
            if (current->name) fail(line_no, "duplicate name field");
            current->name = value;
        } else if (key == "alexander") {
            if (current->alexander) fail(line_no, "duplicate alexander field");
            current->alexander = {value, line_no};
        } else if (key == "seifert") {
            if (current->seifert) fail(line_no, "duplicate seifert field");
            current->seifert = {value, line_no};
        } else if (key == "lambda_cover") {
            current->lambda_covers.emplace_back(value, line_no);
        } else {
            fail(line_no, "unknown key '" + key + "'");
        }
    }
    if (current) records.push_back(validate(*current, seen, warnings));
    return records;
}

namespace {

// Trefoil and figure-8 use the standard genus-1 Seifert matrices. The
// (-2,3,7) pretzel matrix is the Hopf-band plumbing along the ten-vertex
// star tree with arms of lengths 1, 2, 6; its derived polynomial has the
// sign-alternating coefficients required of a knot with lens-space
// surgeries.
constexpr std::string_view kBuiltinCatalog = R"(# built-in knot catalog
[knot]
name = unknot
alexander = 1

[knot]
name = trefoil
alexander = t^-1 - 1 + t
seifert = [[-1,1],[0,-1]]

[knot]
name = figure8
alexander = -t^-1 + 3 - t
seifert = [[-1,1],[0,1]]

[knot]
name = pretzel_-2_3_7
alexander = t^-5 - t^-4 + t^-2 - t^-1 + 1 - t + t^2 - t^4 + t^5
seifert = [[-1,1,1,0,1,0,0,0,0,0],[0,-1,0,0,0,0,0,0,0,0],[0,0,-1,1,0,0,0,0,0,0],[0,0,0,-1,0,0,0,0,0,0],[0,0,0,0,-1,1,0,0,0,0],[0,0,0,0,0,-1,1,0,0,0],[0,0,0,0,0,0,-1,1,0,0],[0,0,0,0,0,0,0,-1,1,0],[0,0,0,0,0,0,0,0,-1,1],[0,0,0,0,0,0,0,0,0,-1]]
)";

}  // namespace

std::string_view builtin_catalog_text() { return kBuiltinCatalog; }

const std::vector<KnotRecord>& builtin_catalog() {
    static const std::vector<KnotRecord> records = load_catalog(kBuiltinCatalog);
    return records;
}

const KnotRecord& find_knot(const std::vector<KnotRecord>& records, std::string_view name) {
    for (const auto& rec : records) {
        if (rec.name == name) return rec;
    }
    throw DomainError("unknown knot '" + std::string(name) + "'");
}

}  // namespace cwpair
