#include "cwpair/sympoly.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "cwpair/errors.hpp"

namespace cwpair {

SymPoly SymPoly::monomial(long half_exp, const Rational& c) {
    SymPoly p;
    if (!c.is_zero()) p.coeffs_[half_exp] = c;
    return p;
}

SymPoly SymPoly::from_coeffs(CoeffMap coeffs) {
    SymPoly p;
    for (auto& [e, c] : coeffs) {
        if (!c.is_zero()) p.coeffs_.emplace(e, std::move(c));
    }
    return p;
}

Rational SymPoly::coeff(long half_exp) const {
    auto it = coeffs_.find(half_exp);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

long SymPoly::min_exp() const {
    if (is_zero()) throw DomainError("zero polynomial has no exponent range");
    return coeffs_.begin()->first;
}

long SymPoly::max_exp() const {
    if (is_zero()) throw DomainError("zero polynomial has no exponent range");
    return coeffs_.rbegin()->first;
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    SymPoly out = *this;
    for (const auto& [e, c] : o.coeffs_) {
        auto [it, inserted] = out.coeffs_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) out.coeffs_.erase(it);
        }
    }
    return out;
}

SymPoly SymPoly::operator-() const {
    SymPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
    return out;
}

SymPoly SymPoly::operator-(const SymPoly& o) const { return *this + (-o); }

SymPoly SymPoly::operator*(const SymPoly& o) const {
    SymPoly out;
    for (const auto& [ea, ca] : coeffs_) {
        for (const auto& [eb, cb] : o.coeffs_) {
            const long e = ea + eb;
            auto [it, inserted] = out.coeffs_.try_emplace(e, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

SymPoly SymPoly::times(const Rational& c) const {
    SymPoly out;
    if (c.is_zero()) return out;
    for (const auto& [e, v] : coeffs_) out.coeffs_.emplace(e, v * c);
    return out;
}

SymPoly SymPoly::shifted(long half_steps) const {
    SymPoly out;
    for (const auto& [e, v] : coeffs_) out.coeffs_.emplace(e + half_steps, v);
    return out;
}

Rational SymPoly::value_at_one() const {
    Rational sum(0);
    for (const auto& [e, c] : coeffs_) sum += c;
    return sum;
}

Rational SymPoly::evaluate(const Rational& point) const {
    if (point.is_zero()) throw DomainError("evaluation point must be nonzero");
    bool half_powers = false;
    for (const auto& [e, c] : coeffs_) {
        if (e % 2 != 0) { half_powers = true; break; }
    }
    if (!half_powers) {
        Rational sum(0);
        for (const auto& [e, c] : coeffs_) sum += c * point.pow(e / 2);
        return sum;
    }
    // Genuine half powers: evaluate in z = sqrt(point).
    if (point.sign() < 0 || mpz_perfect_square_p(point.num().get_mpz_t()) == 0 ||
        mpz_perfect_square_p(point.den().get_mpz_t()) == 0) {
        throw DomainError("half-power evaluation at " + point.str() +
                          ": point is not the square of a rational");
    }
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), point.num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), point.den().get_mpz_t());
    const Rational root(rn, rd);
    Rational sum(0);
    for (const auto& [e, c] : coeffs_) sum += c * root.pow(e);
    return sum;
}

bool SymPoly::is_symmetric() const {
    for (const auto& [e, c] : coeffs_) {
        if (coeff(-e) != c) return false;
    }
    return true;
}

bool SymPoly::is_normalized() const {
    return !is_zero() && is_symmetric() && value_at_one() == Rational(1);
}

SymPoly SymPoly::normalized() const {
    if (is_zero()) throw DomainError("cannot normalize the zero polynomial");
    const long lo = min_exp();
    const long hi = max_exp();
    if ((lo + hi) % 2 != 0) {
        throw DomainError("no symmetric representative: exponent support has no grid midpoint");
    }
    const long mid = (lo + hi) / 2;
    for (const auto& [e, c] : coeffs_) {
        if (coeff(2 * mid - e) != c) {
            throw DomainError("no symmetric representative: coefficients are not mirror-symmetric");
        }
    }
    const SymPoly centered = shifted(-mid);
    const Rational v = centered.value_at_one();
    if (v.is_zero()) {
        throw DomainError("polynomial vanishes at 1: the cover is not a rational homology sphere");
    }
    return centered.times(Rational(1) / v);
}

Rational SymPoly::second_derivative_at_one() const {
    if (!is_normalized()) {
        throw DomainError("second derivative at 1 requires a normalized polynomial");
    }
    Rational sum(0);
    for (const auto& [e, c] : coeffs_) {
        const Rational half(e, 2);
        sum += c * half * (half - Rational(1));
    }
    return sum;
}

namespace {

// One exponent, as printed: whole exponents bare ("^2", "^-1"), genuine
// half powers braced ("^{1/2}", "^{-3/2}").
std::string exponent_str(long e) {
    if (e % 2 == 0) return std::to_string(e / 2);
    return "{" + std::to_string(e) + "/2}";
}

}  // namespace

std::string SymPoly::str(std::string_view var, bool spaces) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (spaces ? (negative ? " - " : " + ") : (negative ? "-" : "+"));
        }
        first = false;
        const Rational mag = c.abs();
        if (e == 0) {
            out << mag.str();
        } else {
            if (mag != Rational(1)) out << mag.str() << "*";
            out << var;
            if (e != 2) out << "^" << exponent_str(e);
        }
    }
    return out.str();
}

namespace {

class PolyScanner {
public:
    explicit PolyScanner(std::string_view text) : text_(text) {}

    SymPoly parse() {
        SymPoly::CoeffMap coeffs;
        skip_ws();
        if (at_end()) throw error("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw error("expected '+' or '-' between terms");
            }
            auto [e, c] = parse_term();
            if (sign < 0) c = -c;
            auto [it, inserted] = coeffs.try_emplace(e, c);
            if (!inserted) it->second += c;
            skip_ws();
            first = false;
        }
        return SymPoly::from_coeffs(std::move(coeffs));
    }

private:
    std::pair<long, Rational> parse_term() {
        Rational coeff(1);
        bool have_coeff = false;
        if (at_end()) throw error("expected term");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_rational();
            have_coeff = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
            }
        }
        if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) {
            if (!have_coeff) throw error("expected coefficient or variable");
            return {0, coeff};
        }
        const char var = peek();
        if (seen_var_ != '\0' && seen_var_ != var) {
            throw error(std::string("mixed variables '") + seen_var_ + "' and '" + var + "'");
        }
        seen_var_ = var;
        ++pos_;
        long e = 2;  // bare variable is t^1
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            e = parse_exponent();
        }
        return {e, coeff};
    }

    // Exponent grammar: integer, or a/2 fraction, optionally braced.
    long parse_exponent() {
        const bool braced = !at_end() && peek() == '{';
        if (braced) { ++pos_; skip_ws(); }
        long num = parse_long();
        long e = 2 * num;
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            const long den = parse_long();
            if (den != 2) throw error("half-integer exponents must have denominator 2");
            e = num;
        }
        if (braced) {
            skip_ws();
            if (at_end() || peek() != '}') throw error("unterminated '{' in exponent");
            ++pos_;
        }
        return e;
    }

    Rational parse_rational() {
        const size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        std::string digits(text_.substr(start, pos_ - start));
        const size_t mark = pos_;
        skip_ws();
        if (!at_end() && peek() == '/') {
            // Lookahead: a denominator only if digits follow the slash.
            size_t probe = pos_ + 1;
            while (probe < text_.size() && std::isspace(static_cast<unsigned char>(text_[probe]))) ++probe;
            if (probe < text_.size() && std::isdigit(static_cast<unsigned char>(text_[probe]))) {
                pos_ = probe;
                const size_t dstart = pos_;
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                return Rational::parse(digits + "/" + std::string(text_.substr(dstart, pos_ - dstart)));
            }
        }
        pos_ = mark;
        return Rational::parse(digits);
    }

    long parse_long() {
        bool neg = false;
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            neg = peek() == '-';
            ++pos_;
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            throw error("expected integer");
        }
        long v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    ParseError error(const std::string& msg) const {
        return ParseError("invalid polynomial '" + std::string(text_) + "' at offset " +
                          std::to_string(pos_) + ": " + msg);
    }

    std::string_view text_;
    size_t pos_ = 0;
    char seen_var_ = '\0';
};

}  // namespace

SymPoly SymPoly::parse(std::string_view text) { return PolyScanner(text).parse(); }

bool unit_equivalent(const SymPoly& a, const SymPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const long shift = a.max_exp() - b.max_exp();
    if (shift % 2 != 0) return false;  // units shift by whole powers of t
    if (a.coeffs().size() != b.coeffs().size()) return false;
    const Rational c = a.coeff(a.max_exp()) / b.coeff(b.max_exp());
    for (const auto& [e, v] : b.coeffs()) {
        if (a.coeff(e + shift) != c * v) return false;
    }
    return true;
}

SymPoly exact_div(const SymPoly& a, const SymPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.is_zero()) return SymPoly();
    SymPoly rem = a;
    SymPoly quot;
    const long bmax = b.max_exp();
    const Rational blead = b.coeff(bmax);
    while (!rem.is_zero() && rem.max_exp() - rem.min_exp() >= bmax - b.min_exp()) {
        const Rational c = rem.coeff(rem.max_exp()) / blead;
        const long shift = rem.max_exp() - bmax;
        const SymPoly term = SymPoly::monomial(shift, c);
        quot = quot + term;
        rem = rem - term * b;
    }
    if (!rem.is_zero()) {
        throw DomainError("internal: polynomial division was not exact");
    }
    return quot;
}

}  // namespace cwpair
