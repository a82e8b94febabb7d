#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "circulant/gaussian.hpp"
#include "circulant/polynomial.hpp"

using namespace circulant;

namespace {

GaussianPoly poly(std::initializer_list<GaussianInt> low_to_high) {
    return GaussianPoly(std::vector<GaussianInt>(low_to_high));
}

const GaussianInt I = GaussianInt::unit_i();

GaussianPoly random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::vector<GaussianInt> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& z : c) z = GaussianInt(Int(coef(rng)), Int(coef(rng)));
    return GaussianPoly(std::move(c));
}

GaussianPoly random_monic(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(1, max_degree);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::vector<GaussianInt> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& z : c) z = GaussianInt(Int(coef(rng)), Int(coef(rng)));
    c.back() = GaussianInt(1);
    return GaussianPoly(std::move(c));
}

}  // namespace

TEST_CASE("gaussian integer arithmetic") {
    CHECK(I * I == GaussianInt(-1));
    CHECK((GaussianInt(Int(2), Int(3)) * GaussianInt(Int(1), Int(-1))) ==
          GaussianInt(Int(5), Int(1)));
    CHECK(GaussianInt(Int(2), Int(3)).conj() == GaussianInt(Int(2), Int(-3)));
    CHECK((-GaussianInt(Int(1), Int(-2))) == GaussianInt(Int(-1), Int(2)));
    CHECK(GaussianInt(Int(1), Int(-2)).str() == "1-2i");
    CHECK(GaussianInt(Int(0), Int(1)).str() == "0+1i");
}

TEST_CASE("polynomial canonical form") {
    GaussianPoly p = poly({1, 2, 0, 0});
    CHECK(p.degree() == 1);
    CHECK(GaussianPoly::zero().is_zero());
    CHECK(GaussianPoly::zero().degree() == -1);
    CHECK(poly({0, 0}).is_zero());
    CHECK(GaussianPoly::monomial(GaussianInt(1), 3).degree() == 3);
    CHECK(poly({-1, 0, 1}).is_monic());
}

TEST_CASE("divmod worked examples") {
    // (x^3 - i) / (x + i) = x^2 - i x - 1, remainder 0
    GaussianPoly num = poly({-I, 0, 0, 1});
    GaussianPoly den = poly({I, 1});
    auto [q, r] = poly_divmod(num, den);
    CHECK(q == poly({-1, -I, 1}));
    CHECK(r.is_zero());

    // division by the constant 1 is the identity
    auto [q1, r1] = poly_divmod(num, GaussianPoly::one());
    CHECK(q1 == num);
    CHECK(r1.is_zero());

    // (x^2 + 1) / (x - i) = x + i
    auto [q2, r2] = poly_divmod(poly({1, 0, 1}), poly({-I, 1}));
    CHECK(q2 == poly({I, 1}));
    CHECK(r2.is_zero());

    CHECK_THROWS_AS(poly_divmod(num, GaussianPoly::zero()), std::invalid_argument);
    CHECK_THROWS_AS(poly_divmod(num, poly({1, GaussianInt(2)})), std::invalid_argument);
}

TEST_CASE("divmod recombines on random inputs") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 500; ++trial) {
        GaussianPoly num = random_poly(rng, 18);
        GaussianPoly den = random_monic(rng, 7);
        auto [q, r] = poly_divmod(num, den);
        REQUIRE(den * q + r == num);
        REQUIRE(r.degree() < den.degree());
    }
}

TEST_CASE("reduce_mod worked examples") {
    GaussianPoly x2p1 = poly({1, 0, 1});
    CHECK(reduce_mod(GaussianPoly::monomial(GaussianInt(1), 4), x2p1) == GaussianPoly::one());
    CHECK(reduce_mod(poly({0, 1}), x2p1) == poly({0, 1}));
    // x^3 mod (x^2 - i) = i x
    CHECK(reduce_mod(GaussianPoly::monomial(GaussianInt(1), 3), poly({-I, 0, 1})) == poly({0, I}));
    CHECK_THROWS_AS(reduce_mod(x2p1, GaussianPoly::one()), std::invalid_argument);
}

TEST_CASE("numeric evaluation") {
    CHECK(std::abs(eval_numeric(poly({-I, 1}), {0.0, 1.0})) < 1e-15);

    // w_12 is a root of x^2 - i x - 1
    std::complex<double> w12 = std::polar(1.0, M_PI / 6.0);
    CHECK(std::abs(eval_numeric(poly({-1, -I, 1}), w12)) < 1e-12);

    CHECK(std::abs(eval_numeric(poly({1, 0, -1, 0, 1}), {1.0, 0.0}) -
                   std::complex<double>(1.0, 0.0)) < 1e-15);
}
