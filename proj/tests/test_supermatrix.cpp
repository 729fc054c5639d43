#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "berez/oracle.hpp"
#include "berez/supermatrix.hpp"

using namespace berez;

namespace {

GrassmannElement g(int n, int i) { return GrassmannElement::generator(n, i); }
GrassmannElement c(int n, long num, long den = 1) {
    return GrassmannElement::constant(n, Rational(num, den));
}

Supermatrix diag_1_1(long a, long d, int n = 2) {
    return Supermatrix(Dims{1, 1}, {c(n, a), GrassmannElement::zero(n),
                                    GrassmannElement::zero(n), c(n, d)});
}

} // namespace

TEST_CASE("block parity is enforced") {
    const int n = 2;
    // Odd element in a diagonal block.
    CHECK_THROWS_AS(Supermatrix(Dims{1, 1}, {g(n, 1), GrassmannElement::zero(n),
                                             GrassmannElement::zero(n), c(n, 1)}),
                    ParityError);
    // Even element in an off-diagonal block.
    CHECK_THROWS_AS(Supermatrix(Dims{1, 1}, {c(n, 1), c(n, 1),
                                             GrassmannElement::zero(n), c(n, 1)}),
                    ParityError);
    // Zero is fine anywhere; a fully valid 1|1 matrix with odd corners.
    CHECK_NOTHROW(Supermatrix(Dims{1, 1}, {c(n, 2), g(n, 1), g(n, 2), c(n, 3)}));
    CHECK_THROWS_AS(Supermatrix(Dims{0, 0}, std::vector<GrassmannElement>{}), DimensionError);
}

TEST_CASE("supertrace") {
    const int n = 2;
    const auto id21 = Supermatrix::identity(Dims{2, 1}, GrassmannElement::zero(n));
    CHECK(id21.supertrace() == c(n, 1)); // 2 - 1

    CHECK(diag_1_1(2, 3).supertrace() == c(n, -1));

    // [[a, beta], [gamma, d]] -> a - d with Grassmann-valued entries.
    const auto a_entry = c(n, 5) + g(n, 1) * g(n, 2);
    const auto d_entry = c(n, 7);
    const Supermatrix m(Dims{1, 1}, {a_entry, g(n, 1), g(n, 2), d_entry});
    CHECK(m.supertrace() == a_entry - d_entry);
}

TEST_CASE("matrix arithmetic basics") {
    MatrixSampler sampler(101);
    const Dims d{2, 1};
    const auto a = sampler.even_supermatrix(d, 4);
    const auto identity = Supermatrix::identity(d, a.entries().front());
    CHECK(a * identity == a);
    CHECK(identity * a == a);
    CHECK(matpow(a, 0) == identity);
    CHECK(matpow(a, 3) == a * a * a);
    CHECK(a + (-a) == Supermatrix::zero_matrix(d, a.entries().front()));
}

TEST_CASE("products of even supermatrices stay even") {
    // The constructor asserts block parity, so building the product suffices;
    // scan anyway to make the property explicit.
    MatrixSampler sampler(77);
    for (int trial = 0; trial < 20; ++trial) {
        const Dims d{1 + static_cast<int>(sampler.int_in(0, 2)),
                     1 + static_cast<int>(sampler.int_in(0, 1))};
        const auto a = sampler.even_supermatrix(d, 4);
        const auto b = sampler.even_supermatrix(d, 4);
        const auto ab = a * b;
        for (int i = 0; i < ab.size(); ++i) {
            for (int j = 0; j < ab.size(); ++j) {
                const bool diagonal_block = (i < d.p) == (j < d.p);
                CHECK((diagonal_block ? ab.at(i, j).is_even() : ab.at(i, j).is_odd()));
            }
        }
    }
}

TEST_CASE("supertrace is cyclic") {
    MatrixSampler sampler(303);
    for (int trial = 0; trial < 25; ++trial) {
        const Dims d{2, 2};
        const auto a = sampler.even_supermatrix(d, 4);
        const auto b = sampler.even_supermatrix(d, 4);
        CHECK((a * b).supertrace() == (b * a).supertrace());
    }
}

TEST_CASE("even block determinants") {
    const int n = 4;
    const GrassmannElement proto = GrassmannElement::zero(n);
    CHECK(even_block_det(std::vector<std::vector<GrassmannElement>>{}, proto) == c(n, 1));
    CHECK(even_block_det({{c(n, 7)}}, proto) == c(n, 7));
    CHECK(even_block_det({{c(n, 2), GrassmannElement::zero(n)},
                          {GrassmannElement::zero(n), c(n, 3)}},
                         proto) == c(n, 6));
    // 2x2 Leibniz by hand: det [[1, g1g2],[g3g4, 1]] = 1 - g1g2g3g4.
    const auto soul_a = g(n, 1) * g(n, 2);
    const auto soul_b = g(n, 3) * g(n, 4);
    CHECK(even_block_det({{c(n, 1), soul_a}, {soul_b, c(n, 1)}}, proto) ==
          c(n, 1) - soul_a * soul_b);
    CHECK_THROWS_AS(even_block_det({{g(n, 1)}}, proto), ParityError);
}

TEST_CASE("inverse of simple matrices") {
    const int n = 2;
    const auto id = Supermatrix::identity(Dims{1, 1}, GrassmannElement::zero(n));
    CHECK(inverse(id) == id);
    const Supermatrix expected(Dims{1, 1}, {c(n, 1, 2), GrassmannElement::zero(n),
                                            GrassmannElement::zero(n), c(n, 1, 3)});
    CHECK(inverse(diag_1_1(2, 3)) == expected);
}

TEST_CASE("inverse of random matrices is two-sided") {
    MatrixSampler sampler(505);
    int checked = 0;
    for (int trial = 0; trial < 40 && checked < 25; ++trial) {
        const Dims d{1 + static_cast<int>(sampler.int_in(0, 2)),
                     1 + static_cast<int>(sampler.int_in(0, 1))};
        const auto a = sampler.even_supermatrix(d, 4);
        const auto identity = Supermatrix::identity(d, a.entries().front());
        try {
            const auto inv = inverse(a);
            CHECK(a * inv == identity);
            CHECK(inv * a == identity);
            CHECK(inverse(inv) == a);
            ++checked;
        } catch (const NotInvertibleError&) {
            // singular body, resample
        }
    }
    CHECK(checked >= 25);
}

TEST_CASE("inverse rejects singular bodies") {
    const int n = 2;
    CHECK_THROWS_AS(inverse(diag_1_1(0, 3)), NotInvertibleError);
    // Soul-only diagonal entry: body singular even though the entry is nonzero.
    const Supermatrix m(Dims{1, 1}, {g(n, 1) * g(n, 2), GrassmannElement::zero(n),
                                     GrassmannElement::zero(n), c(n, 1)});
    CHECK_THROWS_AS(inverse(m), NotInvertibleError);
}

TEST_CASE("classical Berezinian basics") {
    const int n = 2;
    for (Dims d : {Dims{1, 1}, Dims{2, 1}, Dims{2, 2}, Dims{3, 0}, Dims{0, 2}}) {
        const auto id = Supermatrix::identity(d, GrassmannElement::zero(n));
        CHECK(berezinian_classical(id) == c(n, 1));
    }
    CHECK(berezinian_classical(diag_1_1(2, 3)) == c(n, 2, 3));
    CHECK_THROWS_AS(berezinian_classical(diag_1_1(2, 0)), NotInvertibleError);
}

TEST_CASE("Berezinian off-diagonal example") {
    // 1|1 matrix [[a, beta],[gamma, d]]: Ber = a/d - beta gamma / d^2.
    const int n = 2;
    const auto a = c(n, 3), d = c(n, 2);
    const auto beta = g(n, 1), gamma = g(n, 2);
    const Supermatrix m(Dims{1, 1}, {a, beta, gamma, d});
    const auto expected = (a - beta * d.inverse() * gamma) * d.inverse();
    CHECK(berezinian_classical(m) == expected);
}

TEST_CASE("Berezinian is multiplicative") {
    MatrixSampler sampler(707);
    int checked = 0;
    for (int trial = 0; trial < 60 && checked < 30; ++trial) {
        const Dims d{2, 1};
        const auto a = sampler.even_supermatrix(d, 4);
        const auto b = sampler.even_supermatrix(d, 4);
        try {
            const auto lhs = berezinian_classical(a * b);
            const auto rhs = berezinian_classical(a) * berezinian_classical(b);
            CHECK(lhs == rhs);
            ++checked;
        } catch (const NotInvertibleError&) {
        }
    }
    CHECK(checked >= 30);
}

TEST_CASE("matrix exponential of soul matrices") {
    const int n = 4;
    const Dims d{1, 1};
    const auto zero = Supermatrix::zero_matrix(d, GrassmannElement::zero(n));
    const auto id = Supermatrix::identity(d, GrassmannElement::zero(n));
    CHECK(exp_soul(zero) == id);

    // Single nilpotent entry: the series stops after the linear term.
    const auto soul = g(n, 1) * g(n, 2);
    const Supermatrix single(d, {soul, GrassmannElement::zero(n),
                                 GrassmannElement::zero(n), GrassmannElement::zero(n)});
    CHECK(exp_soul(single) == id + single);

    CHECK_THROWS_AS(exp_soul(id), DomainError);
}

TEST_CASE("Ber(exp D) = exp(Str D) on random soul matrices") {
    MatrixSampler sampler(909);
    for (int trial = 0; trial < 30; ++trial) {
        const Dims d{1 + static_cast<int>(sampler.int_in(0, 1)),
                     1 + static_cast<int>(sampler.int_in(0, 1))};
        const auto soul = sampler.soul_supermatrix(d, 4);
        CHECK(berezinian_classical(exp_soul(soul)) == exp_soul(soul.supertrace()));
    }
}

TEST_CASE("characteristic matrix and polynomial evaluation") {
    const int n = 2;
    const auto a = diag_1_1(2, 3);
    const auto shifted = characteristic_matrix(a);
    CHECK(shifted.at(0, 0).coefficient(1) == c(n, -1));
    CHECK(shifted.at(0, 0).coefficient(0) == c(n, 2));
    CHECK(shifted.at(1, 1).coefficient(0) == c(n, 3));

    // (z - 2)(z - 3) annihilates diag(2; 3).
    const auto z = GrassmannPoly::variable(n);
    const auto poly = (z - GrassmannPoly::constant(c(n, 2))) * (z - GrassmannPoly::constant(c(n, 3)));
    CHECK(eval_at_matrix(poly, a).is_zero());
    CHECK_FALSE(eval_at_matrix(z - GrassmannPoly::constant(c(n, 2)), a).is_zero());
}
