#pragma once

#include <algorithm>
#include <concepts>
#include <numeric>
#include <string>
#include <vector>

#include "berez/errors.hpp"
#include "berez/poly.hpp"

namespace berez {

/// Contract every scalar of the invariant pipeline satisfies. Both the
/// Grassmann algebra and its polynomial extension model it; "constants" are
/// minted from an existing value so the generator count travels with the data.
template <typename S>
concept ScalarRing = requires(const S& a, const S& b, long k) {
    { a + b } -> std::same_as<S>;
    { a - b } -> std::same_as<S>;
    { -a } -> std::same_as<S>;
    { a * b } -> std::same_as<S>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_even() } -> std::convertible_to<bool>;
    { a.is_odd() } -> std::convertible_to<bool>;
    { a.is_unit() } -> std::convertible_to<bool>;
    { a.inverse() } -> std::same_as<S>;
    { a.div_exact(k) } -> std::same_as<S>;
    { a.zero() } -> std::same_as<S>;
    { a.one() } -> std::same_as<S>;
    { a.generators() } -> std::convertible_to<int>;
};

/// Shape of a p|q superspace.
struct Dims {
    int p = 0;
    int q = 0;

    int total() const { return p + q; }
    friend bool operator==(const Dims& a, const Dims& b) { return a.p == b.p && a.q == b.q; }
};

/// Square matrix over a scalar ring with the even-supermatrix block
/// constraint: diagonal blocks (p x p and q x q) hold even entries,
/// off-diagonal blocks hold odd entries. Zero passes both checks.
template <ScalarRing S>
class SuperMatrixT {
public:
    SuperMatrixT(Dims dims, std::vector<S> entries) : dims_(dims), entries_(std::move(entries)) {
        const int n = dims_.total();
        if (dims_.p < 0 || dims_.q < 0 || n < 1)
            throw DimensionError("supermatrix needs p, q >= 0 and p + q >= 1");
        if (static_cast<int>(entries_.size()) != n * n)
            throw DimensionError("supermatrix entry count does not match (p+q)^2");
        for (const auto& e : entries_)
            if (e.generators() != entries_.front().generators())
                throw DimensionError("supermatrix entries from different algebras");
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const bool diagonal_block = (i < dims_.p) == (j < dims_.p);
                const S& e = at(i, j);
                if (diagonal_block ? !e.is_even() : !e.is_odd())
                    throw ParityError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") violates block parity");
            }
        }
    }

    static SuperMatrixT identity(Dims dims, const S& proto) {
        const int n = dims.total();
        std::vector<S> e(static_cast<std::size_t>(n) * n, proto.zero());
        for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = proto.one();
        return SuperMatrixT(dims, std::move(e));
    }

    static SuperMatrixT zero_matrix(Dims dims, const S& proto) {
        const int n = dims.total();
        return SuperMatrixT(dims, std::vector<S>(static_cast<std::size_t>(n) * n, proto.zero()));
    }

    Dims dims() const { return dims_; }
    int size() const { return dims_.total(); }
    int generators() const { return entries_.front().generators(); }
    const std::vector<S>& entries() const { return entries_; }

    const S& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * size() + j]; }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](const S& e) { return e.is_zero(); });
    }

    S supertrace() const {
        S acc = entries_.front().zero();
        for (int i = 0; i < dims_.p; ++i) acc = acc + at(i, i);
        for (int i = dims_.p; i < size(); ++i) acc = acc - at(i, i);
        return acc;
    }

    /// Entrywise left multiplication by an even scalar.
    SuperMatrixT scaled(const S& s) const {
        if (!s.is_even()) throw ParityError("matrix scaling requires an even scalar");
        std::vector<S> e;
        e.reserve(entries_.size());
        for (const auto& own : entries_) e.push_back(s * own);
        return SuperMatrixT(dims_, std::move(e));
    }

    friend SuperMatrixT operator+(const SuperMatrixT& a, const SuperMatrixT& b) {
        a.check_compatible(b);
        std::vector<S> e;
        e.reserve(a.entries_.size());
        for (std::size_t i = 0; i < a.entries_.size(); ++i) e.push_back(a.entries_[i] + b.entries_[i]);
        return SuperMatrixT(a.dims_, std::move(e));
    }

    friend SuperMatrixT operator-(const SuperMatrixT& a, const SuperMatrixT& b) {
        a.check_compatible(b);
        std::vector<S> e;
        e.reserve(a.entries_.size());
        for (std::size_t i = 0; i < a.entries_.size(); ++i) e.push_back(a.entries_[i] - b.entries_[i]);
        return SuperMatrixT(a.dims_, std::move(e));
    }

    friend SuperMatrixT operator-(const SuperMatrixT& a) {
        std::vector<S> e;
        e.reserve(a.entries_.size());
        for (const auto& own : a.entries_) e.push_back(-own);
        return SuperMatrixT(a.dims_, std::move(e));
    }

    friend SuperMatrixT operator*(const SuperMatrixT& a, const SuperMatrixT& b) {
        a.check_compatible(b);
        const int n = a.size();
        std::vector<S> e(static_cast<std::size_t>(n) * n, a.entries_.front().zero());
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                const S& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < n; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    e[static_cast<std::size_t>(i) * n + j] =
                        e[static_cast<std::size_t>(i) * n + j] + aik * b.at(k, j);
                }
            }
        }
        return SuperMatrixT(a.dims_, std::move(e));
    }

    friend bool operator==(const SuperMatrixT& a, const SuperMatrixT& b) {
        return a.dims_ == b.dims_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const SuperMatrixT& a, const SuperMatrixT& b) { return !(a == b); }

private:
    void check_compatible(const SuperMatrixT& o) const {
        if (!(dims_ == o.dims_)) throw DimensionError("supermatrix dimension mismatch");
        if (generators() != o.generators())
            throw DimensionError("supermatrices over different algebras");
    }

    Dims dims_;
    std::vector<S> entries_;
};

using Supermatrix = SuperMatrixT<GrassmannElement>;
using PolySupermatrix = SuperMatrixT<GrassmannPoly>;

template <ScalarRing S>
SuperMatrixT<S> matpow(const SuperMatrixT<S>& a, int k) {
    if (k < 0) throw DomainError("matpow exponent must be non-negative");
    auto result = SuperMatrixT<S>::identity(a.dims(), a.entries().front());
    for (int i = 0; i < k; ++i) result = result * a;
    return result;
}

/// Determinant of a square block of commuting (even) entries by the Leibniz
/// permutation sum; no invertibility or pivoting assumptions. The prototype
/// scalar supplies the ring constants (an empty block has determinant one).
template <ScalarRing S>
S even_block_det(const std::vector<std::vector<S>>& m, const S& proto) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != n) throw DimensionError("determinant of a non-square block");
        for (const auto& e : row)
            if (!e.is_even()) throw ParityError("block determinant requires even entries");
    }
    if (n == 0) return proto.one();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    S acc = proto.zero();
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        S prod = proto.one();
        bool dead = false;
        for (int i = 0; i < n && !dead; ++i) {
            if (m[i][perm[i]].is_zero()) dead = true;
            else prod = prod * m[i][perm[i]];
        }
        if (dead) continue;
        acc = (inversions & 1) ? acc - prod : acc + prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

/// Copies one of the four parity blocks out of a supermatrix
/// (bi, bj in {0, 1} pick the block row/column).
template <ScalarRing S>
std::vector<std::vector<S>> block(const SuperMatrixT<S>& a, int bi, int bj) {
    const Dims d = a.dims();
    const int rows = bi == 0 ? d.p : d.q;
    const int cols = bj == 0 ? d.p : d.q;
    const int ri = bi == 0 ? 0 : d.p;
    const int cj = bj == 0 ? 0 : d.p;
    std::vector<std::vector<S>> out(rows);
    for (int i = 0; i < rows; ++i) {
        out[i].reserve(cols);
        for (int j = 0; j < cols; ++j) out[i].push_back(a.at(ri + i, cj + j));
    }
    return out;
}

// GrassmannElement-specific operations (exact inverses and friends).

/// Exact inverse of a square Grassmann matrix whose rational body matrix is
/// invertible: invert the body over the rationals, then run the terminating
/// Neumann series in the soul part.
std::vector<std::vector<GrassmannElement>> grassmann_matrix_inverse(
    const std::vector<std::vector<GrassmannElement>>& m);

/// Two-sided inverse of an even supermatrix; requires the bodies of both
/// diagonal blocks to be invertible rational matrices.
Supermatrix inverse(const Supermatrix& a);

/// Exact exponential of a supermatrix all of whose entries have zero body.
Supermatrix exp_soul(const Supermatrix& d);

/// det(A00 - A01 A11^{-1} A10) / det(A11); requires the body of A11 to be
/// invertible. Reduces to det(A00) when q = 0 and to 1/det(A11) when p = 0.
GrassmannElement berezinian_classical(const Supermatrix& a);

/// Lifts every entry to a constant polynomial.
PolySupermatrix lift_to_poly(const Supermatrix& a);

/// A - z*1 over the polynomial scalars.
PolySupermatrix characteristic_matrix(const Supermatrix& a);

/// Horner evaluation of an even-coefficient polynomial at a supermatrix.
Supermatrix eval_at_matrix(const GrassmannPoly& poly, const Supermatrix& a);

} // namespace berez
