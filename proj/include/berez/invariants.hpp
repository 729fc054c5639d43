#pragma once

#include <map>
#include <vector>

#include "berez/supermatrix.hpp"

namespace berez {

/// Coefficients c_0..c_m of Ber(1 + Az) expanded at zero, with the usual
/// zero extension c_k = 0 for k < 0. Carries the matrix shape so Hankel
/// windows can be placed without repeating p and q everywhere.
template <ScalarRing S>
struct CharSeries {
    Dims dims;
    std::vector<S> c; // index = k

    int max_k() const { return static_cast<int>(c.size()) - 1; }

    S at(int k) const {
        if (k < 0) return c.front().zero();
        if (k > max_k()) throw Error("characteristic coefficient c_" + std::to_string(k) +
                                     " beyond computed range");
        return c[static_cast<std::size_t>(k)];
    }
};

/// Numerator and denominator coefficients of the characteristic function
/// written as (1 + a_1 z + ... + a_p z^p) / (1 + b_1 z + ... + b_q z^q);
/// the constant terms are fixed to one and not stored.
template <ScalarRing S>
struct CharFunction {
    std::vector<S> a;
    std::vector<S> b;
};

/// s_k = Str A^k for k = 1..count.
template <ScalarRing S>
std::vector<S> power_traces(const SuperMatrixT<S>& a, int count) {
    std::vector<S> s;
    s.reserve(static_cast<std::size_t>(count));
    auto pw = a;
    for (int k = 1; k <= count; ++k) {
        if (k > 1) pw = pw * a;
        s.push_back(pw.supertrace());
    }
    return s;
}

/// Newton-type recurrence turning power traces into characteristic
/// coefficients: c_0 = 1, (k+1) c_{k+1} = sum_j (-1)^j s_{j+1} c_{k-j}.
/// The division by k+1 is exact on rational coefficients.
template <ScalarRing S>
std::vector<S> char_coeffs_from_traces(const std::vector<S>& s, const S& proto) {
    std::vector<S> c;
    c.reserve(s.size() + 1);
    c.push_back(proto.one());
    for (std::size_t k = 0; k < s.size(); ++k) {
        S acc = proto.zero();
        for (std::size_t j = 0; j <= k; ++j) {
            const S term = s[j] * c[k - j];
            acc = (j & 1) ? acc - term : acc + term;
        }
        c.push_back(acc.div_exact(static_cast<long>(k) + 1));
    }
    return c;
}

template <ScalarRing S>
CharSeries<S> char_series(const SuperMatrixT<S>& a, int max_k) {
    const S proto = a.entries().front().zero();
    return CharSeries<S>{a.dims(), char_coeffs_from_traces(power_traces(a, max_k), proto)};
}

/// Square Hankel slice of the characteristic series: entry (i, j) is
/// c_{start + i + j}, with the zero extension below index zero.
template <ScalarRing S>
std::vector<std::vector<S>> hankel_slice(const CharSeries<S>& cs, int start, int size) {
    std::vector<std::vector<S>> m(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        m[i].reserve(static_cast<std::size_t>(size));
        for (int j = 0; j < size; ++j) m[i].push_back(cs.at(start + i + j));
    }
    return m;
}

/// Invariant polynomial in the c's: determinant of the (q+1) x (q+1) Hankel
/// slice with corner entries c_{p-q} and c_{p+q}. Needs c up to index p+q.
template <ScalarRing S>
S ber_plus(const CharSeries<S>& cs) {
    const S proto = cs.c.front().zero();
    return even_block_det(hankel_slice(cs, cs.dims.p - cs.dims.q, cs.dims.q + 1), proto);
}

/// Invariant polynomial in the c's: determinant of the q x q Hankel slice
/// with corner entries c_{p-q+2} and c_{p+q}. An empty slice (q = 0) gives 1.
template <ScalarRing S>
S ber_minus(const CharSeries<S>& cs) {
    const S proto = cs.c.front().zero();
    return even_block_det(hankel_slice(cs, cs.dims.p - cs.dims.q + 2, cs.dims.q), proto);
}

/// Invariant scalar R with Ber+ = R a_p and Ber- = R b_q exactly; on matrices
/// with eigenvalues l_i, m_a it equals prod (l_i - m_a) up to the same common
/// sign carried by ber_plus and ber_minus. Computed as (-1)^q times the q x q
/// Hankel determinant with corners c_{p-q+1} and c_{p+q-1}: the bare Hankel
/// determinant equals prod (l_i - m_a) only up to a q-dependent sign, and the
/// (-1)^q factor is the one that makes the Ber+/Ber- factorisations exact.
template <ScalarRing S>
S resultant(const CharSeries<S>& cs) {
    const S proto = cs.c.front().zero();
    const S det = even_block_det(hankel_slice(cs, cs.dims.p - cs.dims.q + 1, cs.dims.q), proto);
    return (cs.dims.q & 1) ? -det : det;
}

/// Berezinian as a ratio of the two invariant Hankel determinants.
/// Fails NonGeneric when the denominator's body vanishes.
template <ScalarRing S>
S berezinian_via_traces(const CharSeries<S>& cs) {
    const S denom = ber_minus(cs);
    if (!denom.is_unit()) throw NonGenericError("denominator Hankel body singular");
    return ber_plus(cs) * denom.inverse();
}

template <ScalarRing S>
S berezinian_via_traces(const SuperMatrixT<S>& a) {
    return berezinian_via_traces(char_series(a, a.dims().p + a.dims().q));
}

/// Solves the order-q linear recurrence c_{k+q} + b_1 c_{k+q-1} + ... +
/// b_q c_k = 0 at k = p-q+1..p for b_1..b_q (Cramer over the scalar ring).
/// Throws NonGeneric when the system's body is singular.
template <ScalarRing S>
std::vector<S> denominator_coeffs(const CharSeries<S>& cs) {
    const int q = cs.dims.q;
    const int p = cs.dims.p;
    const S proto = cs.c.front().zero();
    if (q == 0) return {};
    // Row for each k: unknown b_j multiplies c_{k+q-j}; right side -c_{k+q}.
    std::vector<std::vector<S>> sys(static_cast<std::size_t>(q));
    std::vector<S> rhs;
    rhs.reserve(static_cast<std::size_t>(q));
    for (int r = 0; r < q; ++r) {
        const int k = p - q + 1 + r;
        for (int j = 1; j <= q; ++j) sys[r].push_back(cs.at(k + q - j));
        rhs.push_back(-cs.at(k + q));
    }
    const S det = even_block_det(sys, proto);
    if (!det.is_unit()) throw NonGenericError("denominator Hankel body singular");
    const S det_inv = det.inverse();
    std::vector<S> b;
    b.reserve(static_cast<std::size_t>(q));
    for (int j = 0; j < q; ++j) {
        auto replaced = sys;
        for (int r = 0; r < q; ++r) replaced[r][j] = rhs[r];
        b.push_back(even_block_det(replaced, proto) * det_inv);
    }
    return b;
}

/// Numerator coefficients a_k = sum_j b_j c_{k-j} (b_0 = 1) for k = 1..p.
/// The same convolution must vanish for p < k <= p+q; a nonzero value there
/// means the recurrence solve went wrong and is reported as such.
template <ScalarRing S>
std::vector<S> numerator_coeffs(const CharSeries<S>& cs, const std::vector<S>& b) {
    const int p = cs.dims.p;
    const int q = cs.dims.q;
    auto convolve = [&](int k) {
        S acc = cs.at(k);
        for (int j = 1; j <= q && j <= static_cast<int>(b.size()); ++j)
            acc = acc + b[static_cast<std::size_t>(j) - 1] * cs.at(k - j);
        return acc;
    };
    for (int k = p + 1; k <= p + q; ++k)
        if (!convolve(k).is_zero())
            throw NonGenericError("numerator convolution does not terminate at degree p");
    std::vector<S> a;
    a.reserve(static_cast<std::size_t>(p));
    for (int k = 1; k <= p; ++k) a.push_back(convolve(k));
    return a;
}

template <ScalarRing S>
CharFunction<S> char_function(const CharSeries<S>& cs) {
    CharFunction<S> f;
    f.b = denominator_coeffs(cs);
    f.a = numerator_coeffs(cs, f.b);
    return f;
}

// Operations tied to honest Grassmann scalars (they need matrix inverses).

/// c*_k = Ber A * c_{p-q-k}(A^{-1}) for k = p-q, p-q-1, ..., p-q-depth;
/// zero for k > p-q by convention (callers rely on the returned map only).
std::map<int, GrassmannElement> dual_coeffs(const Supermatrix& a, int depth);

/// gamma_k = c_k - c*_k over the inclusive window [lo, hi], using the zero
/// extensions of both sequences. Matrix invertibility is only required when
/// the window reaches k <= p-q, where c* contributes.
std::map<int, GrassmannElement> gamma_seq(const Supermatrix& a, int lo, int hi);

/// Determinant of the size x size Hankel matrix seq[k+i+j]; throws when the
/// window does not cover the needed indices.
GrassmannElement hankel_det(const std::map<int, GrassmannElement>& seq, int k, int size);

/// Annihilating polynomial Ber+(A - z) Ber-(A - z) / R of degree p+q, with R
/// the resultant of A itself; requires R to have invertible body.
GrassmannPoly min_poly(const Supermatrix& a);

/// Everything the report needs in one pass; maps may be partial, with the
/// reason for each missing piece recorded under its report key.
struct InvariantSeq {
    Dims dims;
    std::vector<GrassmannElement> s;              // s_1..s_max_k
    std::vector<GrassmannElement> c;              // c_0..c_max_k
    std::map<int, GrassmannElement> c_star;       // k -> c*_k, k <= p-q
    std::map<int, GrassmannElement> gamma;        // k -> gamma_k over window
    int window_lo = 0;
    int window_hi = 0;
};

} // namespace berez
