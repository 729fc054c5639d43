#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "berez/errors.hpp"

namespace berez {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; the canonical zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                       // NOLINT: implicit by design
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { canonicalize(); }

    /// Parses "<int>" or "<int>/<int>". Throws ParseError on malformed text
    /// or zero denominator.
    static Rational from_string(const std::string& text);

    /// Renders as "<num>/<den>", denominator always present.
    std::string to_string() const;

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational inverse() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    void canonicalize() { v_.canonicalize(); }

    mpq_class v_;
};

} // namespace berez
