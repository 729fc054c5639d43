#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "berez/oracle.hpp"
#include "berez/serialize.hpp"

using namespace berez;

TEST_CASE("element term-list format") {
    const int n = 4;
    const auto e = GrassmannElement::constant(n, Rational(3)) +
                   (GrassmannElement::generator(n, 1) * GrassmannElement::generator(n, 3))
                       .scaled(Rational(-1, 2));
    const Json j = element_to_json(e);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["coeff"] == "3/1");
    CHECK(j[0]["monomial"] == Json::array());
    CHECK(j[1]["coeff"] == "-1/2");
    CHECK(j[1]["monomial"] == Json::array({1, 3}));
    CHECK(element_to_json(GrassmannElement::zero(n)) == Json::array());
}

TEST_CASE("element round trip is bit-exact") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(rng() % 7);
        std::vector<GrassmannElement::Term> terms;
        const std::uint32_t full = n == 0 ? 0 : (1u << n) - 1;
        for (int t = 0; t < 4; ++t) {
            const long num = static_cast<long>(rng() % 2001) - 1000;
            const long den = 1 + static_cast<long>(rng() % 999);
            terms.emplace_back(static_cast<std::uint32_t>(rng()) & full, Rational(num, den));
        }
        const auto e = GrassmannElement::from_terms(n, std::move(terms));
        const auto restored = element_from_json(element_to_json(e), n);
        CHECK(restored == e);
        CHECK(element_to_json(restored).dump() == element_to_json(e).dump());
    }
}

TEST_CASE("malformed term lists are rejected") {
    CHECK_THROWS_AS(element_from_json(Json::parse(R"([{"coeff":"1/1","monomial":[2,2]}])"), 4),
                    ParseError);
    CHECK_THROWS_WITH_AS(element_from_json(Json::parse(R"([{"coeff":"1/1","monomial":[3,2]}])"), 4),
                         doctest::Contains("non-increasing monomial"), ParseError);
    CHECK_THROWS_AS(element_from_json(Json::parse(R"([{"coeff":"1/1","monomial":[9]}])"), 4),
                    ParseError);
    CHECK_THROWS_AS(element_from_json(Json::parse(R"([{"coeff":"x","monomial":[]}])"), 4),
                    ParseError);
    CHECK_THROWS_AS(element_from_json(Json::parse(R"([{"coeff":"1/1"}])"), 4), ParseError);
    CHECK_THROWS_AS(element_from_json(Json::parse(R"({"coeff":"1/1","monomial":[]})"), 4),
                    ParseError);
}

TEST_CASE("supermatrix documents round trip") {
    MatrixSampler sampler(7);
    for (Dims d : {Dims{1, 1}, Dims{2, 1}, Dims{2, 2}, Dims{3, 0}}) {
        const auto a = sampler.even_supermatrix(d, 4);
        const Json doc = supermatrix_to_json(a);
        const auto restored = supermatrix_from_json(doc);
        CHECK(restored == a);
        CHECK(supermatrix_to_json(restored).dump() == doc.dump());
    }
}

TEST_CASE("supermatrix parse errors carry coordinates") {
    MatrixSampler sampler(8);
    const auto a = sampler.even_supermatrix(Dims{1, 1}, 4);
    Json doc = supermatrix_to_json(a);

    // Odd element moved into a diagonal block.
    Json bad = doc;
    bad["entries"][0][0] = Json::parse(R"([{"coeff":"1/1","monomial":[1]}])");
    try {
        supermatrix_from_json(bad);
        FAIL("expected a parity failure");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("(0,0)") != std::string::npos);
        CHECK(std::string(e.what()).find("parity") != std::string::npos);
    }

    bad = doc;
    bad["entries"][0][1] = Json::parse(R"([{"coeff":"1/1","monomial":[2,2]}])");
    try {
        supermatrix_from_json(bad);
        FAIL("expected a monomial failure");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
        CHECK(std::string(e.what()).find("non-increasing monomial") != std::string::npos);
    }

    bad = doc;
    bad.erase("entries");
    CHECK_THROWS_AS(supermatrix_from_json(bad), ParseError);

    bad = doc;
    bad["p"] = 0;
    bad["q"] = 0;
    CHECK_THROWS_AS(supermatrix_from_json(bad), ParseError);

    bad = doc;
    bad["generators"] = 99;
    CHECK_THROWS_AS(supermatrix_from_json(bad), ParseError);
}

TEST_CASE("polynomial serialization") {
    const int n = 2;
    const auto z = GrassmannPoly::variable(n);
    const auto one = GrassmannPoly::constant(GrassmannElement::constant(n, Rational(1)));
    const Json j = poly_to_json(one - z.scaled(GrassmannElement::constant(n, Rational(5))));
    REQUIRE(j.size() == 2);
    CHECK(j[0][0]["coeff"] == "1/1");
    CHECK(j[1][0]["coeff"] == "-5/1");
}
