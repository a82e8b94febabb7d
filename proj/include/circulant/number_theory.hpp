#pragma once

// Divisor lattices, multiplicative functions, and the residue-class set
// families on Z_n that index circulant orbits:
//
//   G_n(d)   = { k : 1 <= k <= n-1, gcd(k,n) = d }
//   G_n^r(d) = { dk : k == r (mod 4), gcd(dk,n) = d },      r in {1,3}
//   M_n(d)   = { d, 2d, ..., n-d }
//   M_n^r(d) = { dk : 0 <= dk < n, k == r (mod 4) },        r in {0,1,2,3}
//
// Sets are materialized as sorted vectors: every modulus in scope is
// desk-scale, so O(n) enumeration is simpler and fast enough.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace circulant {

// Selects D_n (all odd divisors), D_n^1 or D_n^3 (odd divisors congruent
// to 1 resp. 3 mod 4). D_n = D_n^1 U D_n^3, disjointly.
enum class DivisorClass { AllOdd, Odd1Mod4, Odd3Mod4 };

// A subset of Z_n, sorted and duplicate-free, elements in [0, n).
struct ResidueSet {
    std::int64_t modulus = 0;
    std::vector<std::int64_t> elements;

    bool contains(std::int64_t x) const {
        return std::binary_search(elements.begin(), elements.end(), x);
    }
    std::size_t size() const { return elements.size(); }
    bool operator==(const ResidueSet&) const = default;
};

namespace detail {

inline void require_positive(std::int64_t n, const char* what) {
    if (n < 1) {
        throw std::invalid_argument(std::string(what) + " must be a positive integer");
    }
}

inline void require_divides(std::int64_t d, std::int64_t n, const char* msg) {
    if (d < 1 || n % d != 0) throw std::invalid_argument(msg);
}

}  // namespace detail

// All divisors of n, ascending.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
    detail::require_positive(n, "n");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Number of divisors tau(n).
inline std::int64_t divisor_count(std::int64_t n) {
    return static_cast<std::int64_t>(divisors(n).size());
}

// D_n and its mod-4 refinements, ascending.
inline std::vector<std::int64_t> odd_divisors(std::int64_t n, DivisorClass sel) {
    detail::require_positive(n, "n");
    std::vector<std::int64_t> out;
    for (std::int64_t d : divisors(n)) {
        if (d % 2 == 0) continue;
        switch (sel) {
            case DivisorClass::AllOdd: out.push_back(d); break;
            case DivisorClass::Odd1Mod4:
                if (d % 4 == 1) out.push_back(d);
                break;
            case DivisorClass::Odd3Mod4:
                if (d % 4 == 3) out.push_back(d);
                break;
        }
    }
    return out;
}

// Euler totient via trial-division factorization.
inline std::int64_t euler_phi(std::int64_t n) {
    detail::require_positive(n, "n");
    std::int64_t result = n;
    std::int64_t m = n;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        result -= result / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) result -= result / m;
    return result;
}

// Classical Moebius function, in {-1, 0, 1}.
inline int moebius(std::int64_t n) {
    detail::require_positive(n, "n");
    int factors = 0;
    std::int64_t m = n;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        m /= p;
        if (m % p == 0) return 0;  // square factor
        ++factors;
    }
    if (m > 1) ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

// Moebius function generalized to the direct factor P = { 2^k : k >= 0 }:
// mu_P(n) = sum over powers of two d | n of mu(n/d).
inline std::int64_t moebius_pow2(std::int64_t n) {
    detail::require_positive(n, "n");
    std::int64_t sum = 0;
    for (std::int64_t d = 1; n % d == 0; d *= 2) {
        sum += moebius(n / d);
    }
    return sum;
}

// G_n(d): elements of {1,...,n-1} with gcd(k,n) = d. G_n(n) is empty.
inline ResidueSet g_set(std::int64_t n, std::int64_t d) {
    detail::require_positive(n, "n");
    detail::require_divides(d, n, "g_set: d must divide n");
    ResidueSet out{n, {}};
    for (std::int64_t k = d; k < n; k += d) {
        if (std::gcd(k, n) == d) out.elements.push_back(k);
    }
    return out;
}

// G_n^r(d) = { dk : k == r (mod 4), gcd(dk,n) = d }, r in {1,3}.
// Defined only when 4d | n.
inline ResidueSet g_class_set(std::int64_t n, std::int64_t d, int r) {
    detail::require_positive(n, "n");
    if (r != 1 && r != 3) throw std::invalid_argument("g_class_set: r must be 1 or 3");
    if (d < 1 || n % d != 0 || (n / d) % 4 != 0) {
        throw std::invalid_argument("g_class_set: d must divide n/4");
    }
    ResidueSet out{n, {}};
    for (std::int64_t k = r; d * k < n; k += 4) {
        if (std::gcd(d * k, n) == d) out.elements.push_back(d * k);
    }
    return out;
}

// M_n(d) = { d, 2d, ..., n-d }, the positive multiples of d below n.
inline ResidueSet m_set(std::int64_t n, std::int64_t d) {
    detail::require_positive(n, "n");
    detail::require_divides(d, n, "m_set: d must divide n");
    ResidueSet out{n, {}};
    for (std::int64_t q = d; q < n; q += d) out.elements.push_back(q);
    return out;
}

// M_n^r(d) = { dk : 0 <= dk < n, k == r (mod 4) }, r in {0,1,2,3}.
// Note M_n^0(d) contains 0. Defined only when 4d | n.
inline ResidueSet m_class_set(std::int64_t n, std::int64_t d, int r) {
    detail::require_positive(n, "n");
    if (r < 0 || r > 3) throw std::invalid_argument("m_class_set: r must be in {0,1,2,3}");
    if (d < 1 || n % d != 0 || (n / d) % 4 != 0) {
        throw std::invalid_argument("m_class_set: d must divide n/4");
    }
    ResidueSet out{n, {}};
    for (std::int64_t k = r; d * k < n; k += 4) out.elements.push_back(d * k);
    return out;
}

}  // namespace circulant
