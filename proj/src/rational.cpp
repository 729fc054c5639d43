#include "berez/rational.hpp"

#include <cctype>
#include <ostream>

namespace berez {

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw NotInvertibleError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw NotInvertibleError("zero rational has no inverse");
    return Rational(mpq_class(1) / v_);
}

static bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Rational Rational::from_string(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num_part = text.substr(0, slash);
    if (!is_integer_token(num_part))
        throw ParseError("malformed rational '" + text + "'");
    mpz_class num(num_part);
    mpz_class den(1);
    if (slash != std::string::npos) {
        const std::string den_part = text.substr(slash + 1);
        if (!is_integer_token(den_part))
            throw ParseError("malformed rational '" + text + "'");
        den = mpz_class(den_part);
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    }
    return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const {
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

} // namespace berez
