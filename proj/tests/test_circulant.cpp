#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "circulant/circulant.hpp"
#include "circulant/symbol_set.hpp"

using namespace circulant;

namespace {

const GaussianInt I = GaussianInt::unit_i();

SymbolSet sset(std::int64_t n, std::initializer_list<std::int64_t> elems) {
    return SymbolSet(n, std::vector<std::int64_t>(elems));
}

SymbolSet random_set(std::mt19937& rng, std::int64_t n) {
    std::bernoulli_distribution pick(0.5);
    std::vector<std::int64_t> elems;
    for (std::int64_t k = 1; k < n; ++k) {
        if (pick(rng)) elems.push_back(k);
    }
    return SymbolSet(n, std::move(elems));
}

}  // namespace

TEST_CASE("symbol set validation") {
    CHECK_THROWS_WITH(SymbolSet(1, {}), "n must be at least 2");
    CHECK_THROWS_WITH(sset(4, {4}), "element out of range");
    CHECK_THROWS_WITH(sset(4, {0}), "element out of range");
    CHECK_THROWS_WITH(sset(4, {1, 1}), "duplicate element");
    CHECK(sset(12, {5, 1, 6}).elements() == std::vector<std::int64_t>{1, 5, 6});
}

TEST_CASE("split into symmetric and skew parts") {
    auto parts = split(sset(12, {1, 5, 6}));
    CHECK(parts.symmetric.elements() == std::vector<std::int64_t>{6});
    CHECK(parts.skew.elements() == std::vector<std::int64_t>{1, 5});

    auto none = split(SymbolSet::empty(4));
    CHECK(none.symmetric.is_empty());
    CHECK(none.skew.is_empty());

    auto closed = split(sset(4, {1, 3}));
    CHECK(closed.symmetric.elements() == std::vector<std::int64_t>{1, 3});
    CHECK(closed.skew.is_empty());
}

TEST_CASE("split parts partition C, with the expected closures") {
    std::mt19937 rng(555);
    for (std::int64_t n = 2; n <= 40; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            SymbolSet c = random_set(rng, n);
            auto parts = split(c);
            REQUIRE(parts.symmetric.size() + parts.skew.size() == c.size());
            for (std::int64_t u : parts.symmetric.elements()) {
                REQUIRE(c.contains(u));
                REQUIRE(parts.symmetric.contains(n - u));
            }
            for (std::int64_t u : parts.skew.elements()) {
                REQUIRE(c.contains(u));
                REQUIRE(!parts.skew.contains(n - u));
            }
        }
    }
}

TEST_CASE("hermitian matrix from symbol set") {
    HermitianCirculant h(sset(4, {1}));
    CHECK(h.first_row() == std::vector<GaussianInt>{0, I, 0, -I});

    HermitianCirculant h2(sset(4, {2}));
    CHECK(h2.first_row() == std::vector<GaussianInt>{0, 0, 1, 0});

    HermitianCirculant h3(SymbolSet::empty(3));
    CHECK(h3.first_row() == std::vector<GaussianInt>{0, 0, 0});

    // Hermitian symmetry and zero diagonal
    HermitianCirculant h4(sset(12, {1, 5, 6}));
    for (std::int64_t u = 0; u < 12; ++u) {
        REQUIRE(h4.entry(u, u).is_zero());
        for (std::int64_t v = 0; v < 12; ++v) {
            REQUIRE(h4.entry(u, v) == h4.entry(v, u).conj());
        }
    }
}

TEST_CASE("numeric spectrum, frozen values") {
    auto near = [](const std::vector<double>& got, const std::vector<double>& expect) {
        REQUIRE(got.size() == expect.size());
        for (std::size_t k = 0; k < got.size(); ++k) {
            REQUIRE(std::abs(got[k] - expect[k]) < 1e-9);
        }
    };
    near(spectrum_numeric(sset(4, {1})), {0, -2, 0, 2});
    near(spectrum_numeric(sset(4, {1, 3})), {2, 0, -2, 0});
    near(spectrum_numeric(SymbolSet::empty(7)), std::vector<double>(7, 0.0));
}

TEST_CASE("symmetric spectra are even, skew spectra are odd") {
    std::mt19937 rng(606);
    for (std::int64_t n = 2; n <= 64; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            auto parts = split(random_set(rng, n));
            auto lambda = spectrum_numeric(parts.symmetric);
            auto mu = spectrum_numeric(parts.skew);
            for (std::int64_t j = 1; j < n; ++j) {
                REQUIRE(std::abs(lambda[j] - lambda[n - j]) < 1e-9);
                REQUIRE(std::abs(mu[j] + mu[n - j]) < 1e-9);
            }
        }
    }
}

TEST_CASE("exact eigenvalues, worked examples") {
    auto e = eigenvalue_exact(sset(12, {1, 5}), 3);
    REQUIRE(e.is_integer());
    CHECK(*e.value == -4);

    auto f = eigenvalue_exact(sset(5, {1}), 1);
    CHECK(!f.is_integer());
    CHECK(f.remainder.degree() >= 1);

    // j = 0 always counts the symmetric part
    for (auto& c : {sset(12, {1, 5, 6}), sset(9, {1, 2, 8}), sset(8, {4})}) {
        auto parts = split(c);
        auto g = eigenvalue_exact(c, 0);
        REQUIRE(g.is_integer());
        CHECK(*g.value == static_cast<std::int64_t>(parts.symmetric.size()));
    }

    CHECK_THROWS_AS(eigenvalue_exact(sset(5, {1}), 5), std::invalid_argument);
}

TEST_CASE("integrality decision with witness") {
    auto r = is_integral(sset(4, {1, 2}));
    CHECK(r.integral);
    CHECK(!r.witness.has_value());

    auto s = is_integral(sset(8, {1, 3}));
    CHECK(!s.integral);
    REQUIRE(s.witness.has_value());
    CHECK(*s.witness == 1);  // mu_1 = -2*sqrt(2)

    CHECK(is_integral(SymbolSet::empty(9)).integral);
}

TEST_CASE("integrality of the parts is integrality of the whole") {
    // exhaustive over all subsets for small n
    for (std::int64_t n = 2; n <= 10; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (n - 1)); ++mask) {
            std::vector<std::int64_t> elems;
            for (std::int64_t k = 1; k < n; ++k) {
                if (mask >> (k - 1) & 1) elems.push_back(k);
            }
            SymbolSet c(n, std::move(elems));
            auto parts = split(c);
            bool whole = is_integral(c).integral;
            bool both = is_integral(parts.symmetric).integral &&
                        is_integral(parts.skew).integral;
            REQUIRE(whole == both);
        }
    }
    // randomized at larger n
    std::mt19937 rng(707);
    for (std::int64_t n = 11; n <= 48; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            SymbolSet c = random_set(rng, n);
            auto parts = split(c);
            REQUIRE(is_integral(c).integral ==
                    (is_integral(parts.symmetric).integral &&
                     is_integral(parts.skew).integral));
        }
    }
}

TEST_CASE("exact and numeric spectra agree") {
    std::mt19937 rng(808);
    for (std::int64_t n = 2; n <= 48; ++n) {
        for (int trial = 0; trial < 4; ++trial) {
            SymbolSet c = random_set(rng, n);
            auto gamma = spectrum_numeric(c);
            for (std::int64_t j = 0; j < n; ++j) {
                auto e = eigenvalue_exact(c, j);
                if (e.is_integer()) {
                    REQUIRE(std::abs(gamma[j] - static_cast<double>(*e.value)) < 1e-6);
                } else {
                    REQUIRE(std::abs(gamma[j] - std::round(gamma[j])) > 1e-6);
                }
            }
        }
    }
}

TEST_CASE("eigenpair residuals") {
    CHECK(verify_eigenpairs(sset(4, {1}), 1e-9));
    CHECK(verify_eigenpairs(sset(12, {1, 5, 6}), 1e-9));
    CHECK(verify_eigenpairs(sset(2, {1}), 1e-9));
    CHECK_THROWS_AS(verify_eigenpairs(sset(2, {1}), 0.0), std::invalid_argument);

    std::mt19937 rng(909);
    for (std::int64_t n : {6, 15, 16, 24, 33, 40}) {
        for (int trial = 0; trial < 3; ++trial) {
            REQUIRE(verify_eigenpairs(random_set(rng, n), 1e-8));
        }
    }
}
