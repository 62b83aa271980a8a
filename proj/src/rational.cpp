#include "cwpair/rational.hpp"

#include <cctype>

#include "cwpair/errors.hpp"

namespace cwpair {

Rational::Rational(const Int& n, const Int& d) {
    if (sgn(d) == 0) {
        throw DomainError("rational denominator must be nonzero");
    }
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Int Rational::floor() const {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return f;
}

Rational Rational::abs() const {
    return sgn(q_) < 0 ? -*this : *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero() && e < 0) {
        throw DomainError("zero cannot be raised to a negative power");
    }
    const unsigned long mag = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1
                                    : static_cast<unsigned long>(e);
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), mag);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), mag);
    return e < 0 ? Rational(d, n) : Rational(n, d);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::parse(std::string_view text) {
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_digits = [&]() -> std::string {
        std::string out;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            out.push_back(text[i++]);
        }
        return out;
    };

    skip_ws();
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    const std::string num_digits = read_digits();
    if (num_digits.empty()) {
        throw ParseError("invalid rational '" + std::string(text) + "': expected digits");
    }
    Int num(num_digits, 10);
    if (negative) num = -num;

    skip_ws();
    Int den(1);
    if (i < text.size() && text[i] == '/') {
        ++i;
        skip_ws();
        const std::string den_digits = read_digits();
        if (den_digits.empty()) {
            throw ParseError("invalid rational '" + std::string(text) +
                             "': expected digits after '/' (sign belongs on the numerator)");
        }
        den = Int(den_digits, 10);
        if (sgn(den) == 0) {
            throw ParseError("invalid rational '" + std::string(text) + "': zero denominator");
        }
    }
    skip_ws();
    if (i != text.size()) {
        throw ParseError("invalid rational '" + std::string(text) + "': trailing characters");
    }
    return Rational(num, den);
}

}  // namespace cwpair
