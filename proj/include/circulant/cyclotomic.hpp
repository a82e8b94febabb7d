#pragma once

// Cyclotomic polynomials and their splitting over the Gaussian rationals.
//
// Phi_n is computed by exact division of x^n - 1 by the product of the
// lower-order Phi_d. For n == 0 (mod 4), Phi_n splits over Q(i) into two
// irreducible monic halves of degree phi(n)/2:
//
//   Phi_n^1 has roots w_n^a for a in G_n^1(1),
//   Phi_n^3 has roots w_n^a for a in G_n^3(1),  w_n = exp(2*pi*i/n).
//
// Both are recovered from the telescoping factorizations
//
//   x^{n/4} - i = prod_{d in D_n^1} Phi_{n/d}^1 * prod_{d in D_n^3} Phi_{n/d}^3
//   x^{n/4} + i = prod_{d in D_n^1} Phi_{n/d}^3 * prod_{d in D_n^3} Phi_{n/d}^1
//
// by dividing out the lower factors; every division must be exact. In
// particular Phi_n^1 = x^{n/4} - i when n is a power of two, e.g.
// Phi_4^1 = x - i and Phi_8^1 = x^2 - i. All results are memoized for the
// lifetime of the process; inserts are idempotent, so concurrent sessions
// see a write-once map.

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "circulant/number_theory.hpp"
#include "circulant/polynomial.hpp"

namespace circulant {

namespace detail {

struct CycloCache {
    std::mutex mu;
    std::map<std::int64_t, GaussianPoly> phi;
    std::map<std::pair<std::int64_t, int>, GaussianPoly> phi_factor;
};

inline CycloCache& cyclo_cache() {
    static CycloCache cache;
    return cache;
}

inline GaussianPoly x_power_plus_const(std::int64_t deg, GaussianInt c) {
    GaussianPoly p = GaussianPoly::monomial(GaussianInt(1), static_cast<std::size_t>(deg));
    p += GaussianPoly::constant(std::move(c));
    return p;
}

inline GaussianPoly exact_quotient(const GaussianPoly& num, const GaussianPoly& den,
                                   const char* context) {
    auto [quot, rem] = poly_divmod(num, den);
    if (!rem.is_zero()) {
        throw std::logic_error(std::string(context) + ": division left a non-zero remainder");
    }
    return std::move(quot);
}

}  // namespace detail

// The n-th cyclotomic polynomial, monic of degree phi(n) with integer
// coefficients.
inline GaussianPoly cyclotomic(std::int64_t n) {
    detail::require_positive(n, "n");
    auto& cache = detail::cyclo_cache();
    {
        std::scoped_lock lock(cache.mu);
        auto it = cache.phi.find(n);
        if (it != cache.phi.end()) return it->second;
    }

    GaussianPoly result;
    if (n == 1) {
        result = detail::x_power_plus_const(1, GaussianInt(-1));  // x - 1
    } else {
        GaussianPoly lower = GaussianPoly::one();
        for (std::int64_t d : divisors(n)) {
            if (d < n) lower *= cyclotomic(d);
        }
        GaussianPoly xn1 = detail::x_power_plus_const(n, GaussianInt(-1));
        result = detail::exact_quotient(xn1, lower, "cyclotomic");
    }

    std::scoped_lock lock(cache.mu);
    return cache.phi.emplace(n, std::move(result)).first->second;
}

// Phi_n^r for r in {1,3} and n == 0 (mod 4): the monic factor of Phi_n of
// degree phi(n)/2 whose roots are w_n^a, a in G_n^r(1).
inline GaussianPoly cyclotomic_factor(std::int64_t n, int r) {
    detail::require_positive(n, "n");
    if (n % 4 != 0) throw std::invalid_argument("cyclotomic_factor: n must be divisible by 4");
    if (r != 1 && r != 3) throw std::invalid_argument("cyclotomic_factor: r must be 1 or 3");

    auto& cache = detail::cyclo_cache();
    const auto key = std::make_pair(n, r);
    {
        std::scoped_lock lock(cache.mu);
        auto it = cache.phi_factor.find(key);
        if (it != cache.phi_factor.end()) return it->second;
    }

    // Roots of x^{n/4} - i are w_n^a for a in M_n^1(1); the +i case uses
    // M_n^3(1). Dividing out the orbits of the odd divisors d > 1 leaves
    // exactly the G_n^r(1) orbit.
    const GaussianInt tail = (r == 1) ? -GaussianInt::unit_i() : GaussianInt::unit_i();
    GaussianPoly num = detail::x_power_plus_const(n / 4, tail);

    GaussianPoly den = GaussianPoly::one();
    const int opposite = (r == 1) ? 3 : 1;
    for (std::int64_t d : odd_divisors(n, DivisorClass::Odd1Mod4)) {
        if (d > 1) den *= cyclotomic_factor(n / d, r);
    }
    for (std::int64_t d : odd_divisors(n, DivisorClass::Odd3Mod4)) {
        den *= cyclotomic_factor(n / d, opposite);
    }
    GaussianPoly result = detail::exact_quotient(num, den, "cyclotomic_factor");

    std::scoped_lock lock(cache.mu);
    return cache.phi_factor.emplace(key, std::move(result)).first->second;
}

}  // namespace circulant
