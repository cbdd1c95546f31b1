#include "stripcolor/rational.hpp"

#include <cctype>
#include <ostream>

#include "stripcolor/errors.hpp"

namespace stripcolor {

namespace {

bool valid_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw InvalidInputError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidInputError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational Rational::parse(std::string_view text) {
    std::size_t slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!valid_integer_token(num))
        throw InvalidInputError("bad rational literal: '" + std::string(text) + "'");
    mpq_class v;
    if (slash == std::string_view::npos) {
        v = mpq_class(mpz_class(std::string(num)));
    } else {
        std::string_view den = text.substr(slash + 1);
        if (!valid_integer_token(den) || den[0] == '-' || den[0] == '+')
            throw InvalidInputError("bad rational denominator: '" + std::string(text) + "'");
        mpz_class d{std::string(den)};
        if (d == 0) throw InvalidInputError("rational with zero denominator: '" + std::string(text) + "'");
        v = mpq_class(mpz_class(std::string(num)), d);
        v.canonicalize();
    }
    Rational r;
    r.v_ = std::move(v);
    return r;
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace stripcolor
