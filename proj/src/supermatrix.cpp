#include "berez/supermatrix.hpp"

namespace berez {

namespace {

using GMat = std::vector<std::vector<GrassmannElement>>;
using QMat = std::vector<std::vector<Rational>>;

QMat body_matrix(const GMat& m) {
    QMat out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i].reserve(m[i].size());
        for (const auto& e : m[i]) out[i].push_back(e.body());
    }
    return out;
}

// Gauss-Jordan over exact rationals.
QMat rational_inverse(QMat m) {
    const int n = static_cast<int>(m.size());
    QMat inv(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row) {
            if (!m[row][col].is_zero()) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) throw NotInvertibleError("matrix body is singular");
        std::swap(m[col], m[pivot]);
        std::swap(inv[col], inv[pivot]);
        const Rational scale = m[col][col].inverse();
        for (int j = 0; j < n; ++j) {
            m[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            const Rational factor = m[row][col];
            for (int j = 0; j < n; ++j) {
                m[row][j] -= factor * m[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

GMat lift(const QMat& m, int n_gens) {
    GMat out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i].reserve(m[i].size());
        for (const auto& r : m[i]) out[i].push_back(GrassmannElement::constant(n_gens, r));
    }
    return out;
}

GMat mat_mul(const GMat& a, const GMat& b) {
    const int n = static_cast<int>(a.size());
    const int k = n ? static_cast<int>(a[0].size()) : 0;
    const int m = k ? static_cast<int>(b[0].size()) : 0;
    const int n_gens = n ? a[0][0].generators() : 0;
    GMat out(n, std::vector<GrassmannElement>(m, GrassmannElement::zero(n_gens)));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (int j = 0; j < m; ++j) {
                if (b[t][j].is_zero()) continue;
                out[i][j] += a[i][t] * b[t][j];
            }
        }
    return out;
}

bool mat_is_zero(const GMat& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

} // namespace

GMat grassmann_matrix_inverse(const GMat& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return {};
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw DimensionError("inverse of a non-square matrix");
    const int n_gens = m[0][0].generators();
    const GMat body_inv = lift(rational_inverse(body_matrix(m)), n_gens);

    // soul = m - body; t = -body_inv * soul is strictly soul-valued, so the
    // Neumann series sum_k t^k terminates within n_gens steps.
    GMat soul(n, std::vector<GrassmannElement>(n, GrassmannElement::zero(n_gens)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) soul[i][j] = m[i][j].soul();

    GMat t = mat_mul(body_inv, soul);
    for (auto& row : t)
        for (auto& e : row) e = -e;

    GMat acc(n, std::vector<GrassmannElement>(n, GrassmannElement::zero(n_gens)));
    for (int i = 0; i < n; ++i) acc[i][i] = GrassmannElement::constant(n_gens, Rational(1));

    GMat pw = acc;
    for (int k = 1; k <= n_gens; ++k) {
        pw = mat_mul(pw, t);
        if (mat_is_zero(pw)) break;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) acc[i][j] += pw[i][j];
    }
    return mat_mul(acc, body_inv);
}

Supermatrix inverse(const Supermatrix& a) {
    const int n = a.size();
    GMat full(n, std::vector<GrassmannElement>(n, GrassmannElement::zero(a.generators())));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) full[i][j] = a.at(i, j);
    // Off-diagonal blocks are odd, hence body-free: the body matrix is block
    // diagonal and its invertibility is exactly "both diagonal block bodies
    // are invertible".
    GMat inv = grassmann_matrix_inverse(full);
    std::vector<GrassmannElement> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) entries.push_back(std::move(inv[i][j]));
    return Supermatrix(a.dims(), std::move(entries));
}

Supermatrix exp_soul(const Supermatrix& d) {
    for (const auto& e : d.entries())
        if (!e.body().is_zero())
            throw DomainError("matrix exponential requires soul-valued entries");
    auto acc = Supermatrix::identity(d.dims(), d.entries().front());
    auto pw = acc;
    long factorial = 1;
    for (int k = 1; k <= d.generators(); ++k) {
        pw = pw * d;
        if (pw.is_zero()) break;
        factorial *= k;
        acc = acc + pw.scaled(GrassmannElement::constant(d.generators(), Rational(1, factorial)));
    }
    return acc;
}

GrassmannElement berezinian_classical(const Supermatrix& a) {
    const GrassmannElement proto = a.entries().front().zero();
    if (a.dims().q == 0) return even_block_det(block(a, 0, 0), proto);
    const GMat a11 = block(a, 1, 1);
    const GrassmannElement det_a11 = even_block_det(a11, proto);
    if (!det_a11.is_unit()) throw NotInvertibleError("A11 body singular");
    if (a.dims().p == 0) return det_a11.inverse();
    const GMat schur_correction = mat_mul(mat_mul(block(a, 0, 1), grassmann_matrix_inverse(a11)),
                                          block(a, 1, 0));
    GMat schur = block(a, 0, 0);
    for (int i = 0; i < a.dims().p; ++i)
        for (int j = 0; j < a.dims().p; ++j) schur[i][j] -= schur_correction[i][j];
    return even_block_det(schur, proto) * det_a11.inverse();
}

PolySupermatrix lift_to_poly(const Supermatrix& a) {
    std::vector<GrassmannPoly> entries;
    entries.reserve(a.entries().size());
    for (const auto& e : a.entries()) entries.push_back(GrassmannPoly::constant(e));
    return PolySupermatrix(a.dims(), std::move(entries));
}

PolySupermatrix characteristic_matrix(const Supermatrix& a) {
    const auto z = GrassmannPoly::variable(a.generators());
    auto lifted = lift_to_poly(a);
    return lifted - PolySupermatrix::identity(a.dims(), z).scaled(z);
}

Supermatrix eval_at_matrix(const GrassmannPoly& poly, const Supermatrix& a) {
    if (!poly.is_even()) throw ParityError("matrix evaluation needs an even polynomial");
    if (poly.generators() != a.generators())
        throw DimensionError("polynomial and matrix over different algebras");
    auto acc = Supermatrix::zero_matrix(a.dims(), a.entries().front());
    const auto identity = Supermatrix::identity(a.dims(), a.entries().front());
    for (int i = poly.degree(); i >= 0; --i)
        acc = acc * a + identity.scaled(poly.coefficient(i));
    return acc;
}

} // namespace berez
