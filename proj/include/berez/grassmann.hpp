#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "berez/errors.hpp"
#include "berez/rational.hpp"

namespace berez {

enum class Parity { even, odd, mixed };

/// Sign picked up when multiplying two disjoint sorted generator monomials,
/// i.e. (-1)^(number of transpositions needed to merge-sort the index lists).
int koszul_sign(std::uint32_t a, std::uint32_t b);

/// Element of the Grassmann algebra on `generators()` anticommuting
/// generators g_1..g_N over the rationals. Terms are kept as a sorted
/// sparse map from generator subsets (bitmask, bit i-1 <-> g_i) to nonzero
/// rational coefficients. Values are immutable in spirit: every operation
/// returns a new, canonical element.
class GrassmannElement {
public:
    // Masks must fit a machine word; raise if a computation ever needs more.
    static constexpr int max_generators = 16;

    using Term = std::pair<std::uint32_t, Rational>;

    GrassmannElement() : n_gens_(0) {}

    static GrassmannElement zero(int n_generators);
    static GrassmannElement constant(int n_generators, Rational c);
    static GrassmannElement generator(int n_generators, int index); // 1-based
    static GrassmannElement monomial(int n_generators, std::uint32_t mask, Rational c);
    static GrassmannElement from_terms(int n_generators, std::vector<Term> terms);

    int generators() const { return n_gens_; }
    const std::vector<Term>& terms() const { return terms_; }
    Rational coefficient(std::uint32_t mask) const;

    bool is_zero() const { return terms_.empty(); }
    /// Zero passes both parity checks; supermatrix blocks rely on that.
    bool is_even() const;
    bool is_odd() const;
    Parity parity() const;

    /// Coefficient of the empty monomial.
    Rational body() const { return coefficient(0); }
    /// Everything except the body; nilpotent of order at most N+1.
    GrassmannElement soul() const;

    bool is_unit() const { return is_even() && !body().is_zero(); }

    /// Exact inverse of an even element with nonzero body, via the
    /// terminating geometric series in the (nilpotent) soul.
    GrassmannElement inverse() const;

    GrassmannElement scaled(const Rational& r) const;
    GrassmannElement div_exact(long k) const;

    // Same-algebra constants, used by code generic over the scalar ring.
    GrassmannElement zero() const { return zero(n_gens_); }
    GrassmannElement one() const { return constant(n_gens_, Rational(1)); }

    GrassmannElement& operator+=(const GrassmannElement& o);
    GrassmannElement& operator-=(const GrassmannElement& o);
    GrassmannElement& operator*=(const GrassmannElement& o) { return *this = *this * o; }

    friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
    friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
    friend GrassmannElement operator-(const GrassmannElement& a);
    friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);

    friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
        return a.n_gens_ == b.n_gens_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const GrassmannElement& a, const GrassmannElement& b) { return !(a == b); }

    /// Human-readable form for diagnostics, e.g. "1/3 - 1/9*g1g2".
    std::string to_string() const;

private:
    void check_same_algebra(const GrassmannElement& o) const;
    void normalize();

    int n_gens_;
    std::vector<Term> terms_; // sorted by mask, no zero coefficients
};

/// Exact exponential of an element with zero body (finite nilpotent series).
GrassmannElement exp_soul(const GrassmannElement& x);

} // namespace berez
