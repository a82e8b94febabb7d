#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>
#include <vector>

#include "circulant/number_theory.hpp"

using namespace circulant;

namespace {

// independent oracles: plain full-range loops, no shortcuts

std::vector<std::int64_t> divisors_oracle(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d == 0) out.push_back(d);
    }
    return out;
}

std::int64_t phi_oracle(std::int64_t n) {
    std::int64_t count = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
        if (std::gcd(k, n) == 1) ++count;
    }
    return count;
}

int moebius_oracle(std::int64_t n) {
    int factors = 0;
    for (std::int64_t p = 2; p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++factors;
    }
    return factors % 2 == 0 ? 1 : -1;
}

std::set<std::int64_t> as_set(const ResidueSet& r) {
    return {r.elements.begin(), r.elements.end()};
}

}  // namespace

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<std::int64_t>{1});
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(20) == std::vector<std::int64_t>{1, 2, 4, 5, 10, 20});
    CHECK_THROWS_AS(divisors(0), std::invalid_argument);

    for (std::int64_t n = 1; n <= 300; ++n) {
        REQUIRE(divisors(n) == divisors_oracle(n));
    }
}

TEST_CASE("odd divisor classes") {
    CHECK(odd_divisors(12, DivisorClass::AllOdd) == std::vector<std::int64_t>{1, 3});
    CHECK(odd_divisors(20, DivisorClass::Odd3Mod4).empty());
    CHECK(odd_divisors(12, DivisorClass::Odd3Mod4) == std::vector<std::int64_t>{3});

    // D_n = D_n^1 (disjoint union) D_n^3
    for (std::int64_t n = 1; n <= 300; ++n) {
        auto all = odd_divisors(n, DivisorClass::AllOdd);
        auto d1 = odd_divisors(n, DivisorClass::Odd1Mod4);
        auto d3 = odd_divisors(n, DivisorClass::Odd3Mod4);
        std::vector<std::int64_t> merged(d1);
        merged.insert(merged.end(), d3.begin(), d3.end());
        std::sort(merged.begin(), merged.end());
        REQUIRE(merged == all);
    }
}

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(20) == 8);
    for (std::int64_t n = 1; n <= 500; ++n) REQUIRE(euler_phi(n) == phi_oracle(n));
}

TEST_CASE("moebius") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    for (std::int64_t n = 1; n <= 500; ++n) REQUIRE(moebius(n) == moebius_oracle(n));
}

TEST_CASE("moebius over the power-of-two direct factor") {
    CHECK(moebius_pow2(1) == 1);
    CHECK(moebius_pow2(5) == -1);
    CHECK(moebius_pow2(12) == 0);  // mu(12) + mu(6) + mu(3)

    // sum over odd d | n of mu_P(n/d) is the delta function
    for (std::int64_t n = 1; n <= 500; ++n) {
        std::int64_t sum = 0;
        for (std::int64_t d : odd_divisors(n, DivisorClass::AllOdd)) sum += moebius_pow2(n / d);
        REQUIRE(sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("g_set and g_class_set") {
    CHECK(as_set(g_set(12, 2)) == std::set<std::int64_t>{2, 10});
    CHECK(as_set(g_class_set(12, 1, 1)) == std::set<std::int64_t>{1, 5});
    CHECK(as_set(g_class_set(12, 1, 3)) == std::set<std::int64_t>{7, 11});
    CHECK(g_set(12, 12).elements.empty());

    CHECK_THROWS_AS(g_set(12, 5), std::invalid_argument);
    CHECK_THROWS_AS(g_class_set(12, 2, 1), std::invalid_argument);  // 2 does not divide 12/4
    CHECK_THROWS_AS(g_class_set(12, 1, 2), std::invalid_argument);

    // half-orbit sizes: |G_n^1(d)| = |G_n^3(d)| = phi(n/d)/2 whenever 4d | n
    for (std::int64_t n = 4; n <= 200; n += 4) {
        for (std::int64_t d : divisors(n / 4)) {
            auto h1 = g_class_set(n, d, 1);
            auto h3 = g_class_set(n, d, 3);
            REQUIRE(static_cast<std::int64_t>(h1.size()) == euler_phi(n / d) / 2);
            REQUIRE(h1.size() == h3.size());

            // G_n(d) = G_n^1(d) (disjoint union) G_n^3(d)
            auto merged = as_set(h1);
            merged.insert(h3.elements.begin(), h3.elements.end());
            REQUIRE(merged.size() == h1.size() + h3.size());
            REQUIRE(merged == as_set(g_set(n, d)));
        }
    }
}

TEST_CASE("m_set and m_class_set") {
    CHECK(as_set(m_set(12, 4)) == std::set<std::int64_t>{4, 8});
    CHECK(as_set(m_class_set(12, 1, 2)) == std::set<std::int64_t>{2, 6, 10});
    CHECK(as_set(m_class_set(12, 1, 0)) == std::set<std::int64_t>{0, 4, 8});
    CHECK(m_set(12, 12).elements.empty());
    CHECK_THROWS_AS(m_set(12, 7), std::invalid_argument);
    CHECK_THROWS_AS(m_class_set(12, 6, 1), std::invalid_argument);
}

TEST_CASE("M_n(d) partitions into gcd orbits") {
    for (std::int64_t n = 2; n <= 120; ++n) {
        for (std::int64_t d : divisors(n)) {
            std::set<std::int64_t> expect = as_set(m_set(n, d));
            std::set<std::int64_t> got;
            std::size_t total = 0;
            for (std::int64_t h : divisors(n / d)) {
                auto orbit = g_set(n, h * d);
                total += orbit.size();
                got.insert(orbit.elements.begin(), orbit.elements.end());
            }
            REQUIRE(got == expect);
            REQUIRE(total == expect.size());  // disjointness
        }
    }
}

TEST_CASE("mod-4 multiple classes decompose into orbits") {
    for (std::int64_t n = 4; n <= 120; n += 4) {
        for (std::int64_t d : divisors(n / 4)) {
            const std::int64_t g = n / (4 * d);

            // M^1 union M^3 = union of odd-divisor orbits
            std::set<std::int64_t> odd_multiples = as_set(m_class_set(n, d, 1));
            for (auto q : m_class_set(n, d, 3).elements) odd_multiples.insert(q);
            std::set<std::int64_t> orbits;
            for (std::int64_t h : odd_divisors(g, DivisorClass::AllOdd)) {
                auto orbit = g_set(n, h * d);
                orbits.insert(orbit.elements.begin(), orbit.elements.end());
            }
            REQUIRE(odd_multiples == orbits);

            // M^2 = union of doubled odd-divisor orbits
            std::set<std::int64_t> expect2 = as_set(m_class_set(n, d, 2));
            std::set<std::int64_t> got2;
            for (std::int64_t h : odd_divisors(g, DivisorClass::AllOdd)) {
                auto orbit = g_set(n, 2 * h * d);
                got2.insert(orbit.elements.begin(), orbit.elements.end());
            }
            REQUIRE(got2 == expect2);

            // M^0 = M(4d) plus zero
            std::set<std::int64_t> expect0 = as_set(m_set(n, 4 * d));
            expect0.insert(0);
            REQUIRE(as_set(m_class_set(n, d, 0)) == expect0);

            // four-way split of M^1 and M^3 over the divisor classes
            std::set<std::int64_t> m1, m3;
            for (std::int64_t h : odd_divisors(g, DivisorClass::Odd1Mod4)) {
                for (auto q : g_class_set(n, h * d, 1).elements) m1.insert(q);
                for (auto q : g_class_set(n, h * d, 3).elements) m3.insert(q);
            }
            for (std::int64_t h : odd_divisors(g, DivisorClass::Odd3Mod4)) {
                for (auto q : g_class_set(n, h * d, 3).elements) m1.insert(q);
                for (auto q : g_class_set(n, h * d, 1).elements) m3.insert(q);
            }
            REQUIRE(m1 == as_set(m_class_set(n, d, 1)));
            REQUIRE(m3 == as_set(m_class_set(n, d, 3)));
        }
    }
}

TEST_CASE("phi identity over odd divisors") {
    for (std::int64_t n = 2; n <= 2000; n += 2) {
        std::int64_t sum = 0;
        for (std::int64_t d : odd_divisors(n, DivisorClass::AllOdd)) sum += euler_phi(n / d);
        REQUIRE(sum == n / 2);
    }
}
