#include "elimdual/rational.hpp"

#include <cctype>

namespace elimdual {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw Error(ErrorCode::kDivisionByZero, "rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num)) {
        throw Error(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
    }
    mpq_class q;
    if (slash == std::string_view::npos) {
        q = mpq_class(parse_integer(num));
    } else {
        const std::string_view den = text.substr(slash + 1);
        if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
            throw Error(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
        }
        const mpz_class d = parse_integer(den);
        if (d == 0) {
            throw Error(ErrorCode::kDivisionByZero, "zero denominator in '" + std::string(text) + "'");
        }
        q = mpq_class(parse_integer(num), d);
    }
    return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by zero");
    value_ /= o.value_;
    return *this;
}

}  // namespace elimdual
