#pragma once

#include <string>
#include <vector>

#include "berez/grassmann.hpp"

namespace berez {

/// Univariate polynomial in an even formal variable z with GrassmannElement
/// coefficients, stored densely by power. The zero polynomial has no stored
/// coefficients; otherwise the top coefficient is nonzero.
///
/// Parity is a computed property: the polynomial is even/odd when every
/// coefficient is. Pipelines that require even coefficients (the scalar-ring
/// uses) check parity at their boundaries, exactly as supermatrix blocks do
/// for plain Grassmann entries.
class GrassmannPoly {
public:
    GrassmannPoly() : n_gens_(0) {}

    static GrassmannPoly zero(int n_generators);
    static GrassmannPoly constant(GrassmannElement c);
    static GrassmannPoly variable(int n_generators); // z
    static GrassmannPoly from_coefficients(int n_generators, std::vector<GrassmannElement> coeffs);

    int generators() const { return n_gens_; }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Zero-padded coefficient access.
    GrassmannElement coefficient(int i) const;
    const std::vector<GrassmannElement>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_even() const;
    bool is_odd() const;
    bool is_unit() const { return degree() == 0 && coeffs_[0].is_unit(); }

    GrassmannPoly zero() const { return zero(n_gens_); }
    GrassmannPoly one() const { return constant(GrassmannElement::constant(n_gens_, Rational(1))); }

    /// Inverse exists only for invertible constants.
    GrassmannPoly inverse() const;
    GrassmannPoly scaled(const GrassmannElement& c) const; // left multiplication
    GrassmannPoly div_exact(long k) const;

    /// Horner evaluation at an even point.
    GrassmannElement eval(const GrassmannElement& at) const;

    GrassmannPoly& operator+=(const GrassmannPoly& o);
    GrassmannPoly& operator-=(const GrassmannPoly& o);
    GrassmannPoly& operator*=(const GrassmannPoly& o) { return *this = *this * o; }

    friend GrassmannPoly operator+(GrassmannPoly a, const GrassmannPoly& b) { return a += b; }
    friend GrassmannPoly operator-(GrassmannPoly a, const GrassmannPoly& b) { return a -= b; }
    friend GrassmannPoly operator-(const GrassmannPoly& a);
    friend GrassmannPoly operator*(const GrassmannPoly& a, const GrassmannPoly& b);

    friend bool operator==(const GrassmannPoly& a, const GrassmannPoly& b) {
        return a.n_gens_ == b.n_gens_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const GrassmannPoly& a, const GrassmannPoly& b) { return !(a == b); }

    std::string to_string() const;

private:
    void check_same_algebra(const GrassmannPoly& o) const;
    void trim();

    int n_gens_;
    std::vector<GrassmannElement> coeffs_;
};

} // namespace berez
