#pragma once

// Recognition, construction and enumeration of integral symbol sets.
//
// A mixed circulant graph is integral exactly when its symmetric part is a
// union of full orbits G_n(d) and its skew part is a union of tagged
// half-orbits G_n^1(d) or G_n^3(d) with d | n/4 (the skew part must be
// empty when n != 0 mod 4). The Decomposition records those choices; the
// number of distinct integral symbol sets is
//
//   k(n) = 2^{tau(n/4) + tau(n) - 1}   if n == 0 (mod 4)
//   k(n) = 2^{tau(n) - 1}              otherwise.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "circulant/circulant.hpp"
#include "circulant/gaussian.hpp"
#include "circulant/number_theory.hpp"
#include "circulant/symbol_set.hpp"

namespace circulant {

enum class HalfOrbit { Class1, Class3 };

inline const char* half_orbit_name(HalfOrbit tag) {
    return tag == HalfOrbit::Class1 ? "class1" : "class3";
}

// Divisor choices recognizing an integral symbol set: d1 lists full orbits
// G_n(d); d2 maps divisors of n/4 to a tagged half-orbit. The two index
// sets are disjoint, and d2 is empty unless n == 0 (mod 4).
struct Decomposition {
    std::int64_t n = 0;
    std::vector<std::int64_t> d1;                        // sorted, proper divisors of n
    std::vector<std::pair<std::int64_t, HalfOrbit>> d2;  // sorted by divisor of n/4

    friend bool operator==(const Decomposition& a, const Decomposition& b) {
        return a.n == b.n && a.d1 == b.d1 && a.d2 == b.d2;
    }
};

namespace detail {

inline void validate_decomposition(const Decomposition& dec) {
    if (dec.n < 2) throw std::invalid_argument("decomposition: n must be at least 2");
    std::set<std::int64_t> seen;
    for (std::int64_t d : dec.d1) {
        if (d < 1 || d >= dec.n || dec.n % d != 0) {
            throw std::invalid_argument("decomposition: d1 entries must be proper divisors of n");
        }
        if (!seen.insert(d).second) throw std::invalid_argument("decomposition: duplicate divisor");
    }
    for (const auto& [d, tag] : dec.d2) {
        (void)tag;
        if (dec.n % 4 != 0) {
            throw std::invalid_argument("decomposition: d2 requires n divisible by 4");
        }
        if (d < 1 || (dec.n / 4) % d != 0) {
            throw std::invalid_argument("decomposition: d2 keys must divide n/4");
        }
        if (!seen.insert(d).second) throw std::invalid_argument("decomposition: duplicate divisor");
    }
}

}  // namespace detail

// The symbol set named by a decomposition: the union of its full orbits
// and tagged half-orbits.
inline SymbolSet compose(const Decomposition& dec) {
    detail::validate_decomposition(dec);
    std::vector<std::int64_t> elems;
    for (std::int64_t d : dec.d1) {
        const ResidueSet orbit = g_set(dec.n, d);
        elems.insert(elems.end(), orbit.elements.begin(), orbit.elements.end());
    }
    for (const auto& [d, tag] : dec.d2) {
        const ResidueSet half = g_class_set(dec.n, d, tag == HalfOrbit::Class1 ? 1 : 3);
        elems.insert(elems.end(), half.elements.begin(), half.elements.end());
    }
    return SymbolSet(dec.n, std::move(elems));
}

// Inverse of compose on integral symbol sets; absent when C is not a union
// of full orbits plus tagged half-orbits (equivalently, when the graph is
// not integral).
inline std::optional<Decomposition> decompose(const SymbolSet& c) {
    const std::int64_t n = c.n();
    const SymbolSplit parts = split(c);

    Decomposition dec;
    dec.n = n;

    std::set<std::int64_t> handled;
    for (std::int64_t k : parts.symmetric.elements()) {
        const std::int64_t d = std::gcd(k, n);
        if (!handled.insert(d).second) continue;
        for (std::int64_t q : g_set(n, d).elements) {
            if (!parts.symmetric.contains(q)) return std::nullopt;
        }
        dec.d1.push_back(d);
    }

    if (!parts.skew.is_empty() && n % 4 != 0) return std::nullopt;
    std::set<std::int64_t> handled_skew;
    for (std::int64_t k : parts.skew.elements()) {
        const std::int64_t d = std::gcd(k, n);
        if (!handled_skew.insert(d).second) continue;
        if ((n / 4) % d != 0) return std::nullopt;  // half-orbits need d | n/4
        bool full1 = true, none1 = true, full3 = true, none3 = true;
        for (std::int64_t q : g_class_set(n, d, 1).elements) {
            (parts.skew.contains(q) ? none1 : full1) = false;
        }
        for (std::int64_t q : g_class_set(n, d, 3).elements) {
            (parts.skew.contains(q) ? none3 : full3) = false;
        }
        if (full1 && none3) {
            dec.d2.emplace_back(d, HalfOrbit::Class1);
        } else if (full3 && none1) {
            dec.d2.emplace_back(d, HalfOrbit::Class3);
        } else {
            return std::nullopt;
        }
    }

    // symmetric and skew parts are disjoint, so the index sets cannot meet
    for (const auto& [d, tag] : dec.d2) {
        (void)tag;
        if (handled.count(d)) throw std::logic_error("decompose: overlapping divisor choices");
    }
    std::sort(dec.d1.begin(), dec.d1.end());
    std::sort(dec.d2.begin(), dec.d2.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return dec;
}

// Upper bound k(n) on the number of integral symbol sets; attained by the
// enumeration below (distinct symbol sets, not isomorphism classes).
inline Int count_bound(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("count_bound: n must be at least 2");
    std::int64_t exponent = divisor_count(n) - 1;
    if (n % 4 == 0) exponent += divisor_count(n / 4);
    return Int(1) << static_cast<unsigned>(exponent);
}

// Visits every integral symbol set exactly once, by iterating divisor
// choices: divisors of n/4 take one of {skip, full orbit, class-1 half,
// class-3 half}; every other proper divisor of n takes {skip, full orbit}.
// Emission order is lexicographic in the choice vector (divisors
// ascending; skip < full < class1 < class3), so output is deterministic.
inline void enumerate_integral(std::int64_t n,
                               const std::function<void(const SymbolSet&)>& visit) {
    if (n < 2) throw std::invalid_argument("enumerate_integral: n must be at least 2");

    struct Slot {
        std::int64_t d;
        int choices;  // 2 or 4
    };
    std::vector<Slot> slots;
    for (std::int64_t d : divisors(n)) {
        if (d == n) continue;  // G_n(n) is empty; including it would duplicate sets
        const bool quarter = (n % 4 == 0) && ((n / 4) % d == 0);
        slots.push_back({d, quarter ? 4 : 2});
    }

    std::vector<int> choice(slots.size(), 0);
    std::set<std::vector<std::int64_t>> emitted;  // distinctness is asserted, not assumed
    for (;;) {
        Decomposition dec;
        dec.n = n;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            switch (choice[s]) {
                case 0: break;
                case 1: dec.d1.push_back(slots[s].d); break;
                case 2: dec.d2.emplace_back(slots[s].d, HalfOrbit::Class1); break;
                case 3: dec.d2.emplace_back(slots[s].d, HalfOrbit::Class3); break;
            }
        }
        SymbolSet set = compose(dec);
        if (!emitted.insert(set.elements()).second) {
            throw std::logic_error("enumerate_integral: duplicate symbol set emitted");
        }
        visit(set);

        // next choice vector in lexicographic order
        std::size_t s = slots.size();
        while (s > 0) {
            --s;
            if (++choice[s] < slots[s].choices) break;
            choice[s] = 0;
            if (s == 0) return;
        }
        if (slots.empty()) return;
    }
}

inline std::vector<SymbolSet> enumerate_integral(std::int64_t n) {
    std::vector<SymbolSet> out;
    enumerate_integral(n, [&](const SymbolSet& s) { out.push_back(s); });
    return out;
}

// Exhaustive oracle: tests all 2^{n-1} subsets of {1,...,n-1} with the
// exact integrality decision. Guarded by a cap since the cost doubles
// per vertex.
inline void brute_force_integral(std::int64_t n, const std::function<void(const SymbolSet&)>& visit,
                                 std::int64_t cap = 16) {
    if (n < 2) throw std::invalid_argument("brute_force_integral: n must be at least 2");
    if (n > cap) throw std::invalid_argument("brute_force_integral: n exceeds cap");

    const std::uint64_t total = std::uint64_t(1) << (n - 1);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<std::int64_t> elems;
        for (std::int64_t k = 1; k < n; ++k) {
            if (mask >> (k - 1) & 1) elems.push_back(k);
        }
        SymbolSet c(n, std::move(elems));
        if (is_integral(c).integral) visit(c);
    }
}

inline std::vector<SymbolSet> brute_force_integral(std::int64_t n, std::int64_t cap = 16) {
    std::vector<SymbolSet> out;
    brute_force_integral(n, [&](const SymbolSet& s) { out.push_back(s); }, cap);
    return out;
}

}  // namespace circulant
