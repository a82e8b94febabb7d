#pragma once

// Self-contained property suites, one per module, runnable from the CLI
// (`verify --max-n N --suite names`) and reused by the acceptance driver.
// Each check sweeps a canonical range; --max-n caps the sweeps so a quick
// smoke run stays cheap. Randomized checks draw from fixed seeds, so every
// run is reproducible.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "circulant/characterization.hpp"
#include "circulant/circulant.hpp"
#include "circulant/cyclotomic.hpp"
#include "circulant/number_theory.hpp"
#include "circulant/ramanujan.hpp"
#include "circulant/symbol_set.hpp"

namespace circulant::verify {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = true;
    std::string scope;   // swept range, for reporting
    std::string detail;  // first failure, empty when green
};

namespace detail_v {

class Recorder {
public:
    Recorder(std::string suite, std::string name, std::string scope) {
        result_.suite = std::move(suite);
        result_.name = std::move(name);
        result_.scope = std::move(scope);
    }

    template <typename MakeDetail>
    void require(bool cond, MakeDetail&& make_detail) {
        if (cond || !result_.pass) return;
        result_.pass = false;
        result_.detail = make_detail();
    }

    bool ok() const { return result_.pass; }
    CheckResult take() { return std::move(result_); }

private:
    CheckResult result_;
};

inline std::int64_t eff(std::int64_t cap, std::int64_t canonical) {
    return cap > 0 ? std::min(cap, canonical) : canonical;
}

inline std::string at_n(std::int64_t n) { return "fails at n=" + std::to_string(n); }

inline std::string at_n(std::int64_t n, const char* k2, std::int64_t v2) {
    return "fails at n=" + std::to_string(n) + ", " + k2 + "=" + std::to_string(v2);
}

inline SymbolSet random_symbol_set(std::mt19937& rng, std::int64_t n) {
    std::bernoulli_distribution pick(0.5);
    std::vector<std::int64_t> elems;
    for (std::int64_t k = 1; k < n; ++k) {
        if (pick(rng)) elems.push_back(k);
    }
    return SymbolSet(n, std::move(elems));
}

inline Decomposition random_decomposition(std::mt19937& rng, std::int64_t n) {
    Decomposition dec;
    dec.n = n;
    for (std::int64_t d : divisors(n)) {
        if (d == n) continue;
        const bool quarter = (n % 4 == 0) && ((n / 4) % d == 0);
        std::uniform_int_distribution<int> pick(0, quarter ? 3 : 1);
        switch (pick(rng)) {
            case 0: break;
            case 1: dec.d1.push_back(d); break;
            case 2: dec.d2.emplace_back(d, HalfOrbit::Class1); break;
            case 3: dec.d2.emplace_back(d, HalfOrbit::Class3); break;
        }
    }
    return dec;
}

inline std::set<std::vector<std::int64_t>> family(const std::vector<SymbolSet>& sets) {
    std::set<std::vector<std::int64_t>> out;
    for (const auto& s : sets) out.insert(s.elements());
    return out;
}

}  // namespace detail_v

// ---------------------------------------------------------------- number_theory

// M_n(d) is the disjoint union of the orbits G_n(hd), h | n/d.
inline CheckResult check_orbit_partition(std::int64_t bound) {
    detail_v::Recorder rec("number_theory", "orbit_partition", "n <= " + std::to_string(bound));
    for (std::int64_t n = 2; n <= bound && rec.ok(); ++n) {
        for (std::int64_t d : divisors(n)) {
            std::set<std::int64_t> got;
            std::size_t total = 0;
            for (std::int64_t h : divisors(n / d)) {
                const ResidueSet orbit = g_set(n, h * d);
                total += orbit.size();
                got.insert(orbit.elements.begin(), orbit.elements.end());
            }
            const ResidueSet expect = m_set(n, d);
            rec.require(total == got.size() &&
                            got == std::set<std::int64_t>(expect.elements.begin(),
                                                          expect.elements.end()),
                        [&] { return detail_v::at_n(n, "d", d); });
        }
    }
    return rec.take();
}

// The mod-4 multiple classes decompose into gcd orbits and tagged
// half-orbits, and the half-orbits split G_n(d) evenly.
inline CheckResult check_mod4_class_decomposition(std::int64_t bound) {
    detail_v::Recorder rec("number_theory", "mod4_class_decomposition",
                           "n <= " + std::to_string(bound));
    for (std::int64_t n = 4; n <= bound && rec.ok(); n += 4) {
        for (std::int64_t d : divisors(n / 4)) {
            const std::int64_t g = n / (4 * d);
            auto as_set = [](const ResidueSet& r) {
                return std::set<std::int64_t>(r.elements.begin(), r.elements.end());
            };
            auto fail = [&] { return detail_v::at_n(n, "d", d); };

            // odd multiples = union of odd-divisor orbits
            std::set<std::int64_t> odd_multiples = as_set(m_class_set(n, d, 1));
            for (auto q : m_class_set(n, d, 3).elements) odd_multiples.insert(q);
            std::set<std::int64_t> orbits;
            for (std::int64_t h : odd_divisors(g, DivisorClass::AllOdd)) {
                auto orbit = g_set(n, h * d);
                orbits.insert(orbit.elements.begin(), orbit.elements.end());
            }
            rec.require(odd_multiples == orbits, fail);

            // doubled odd multiples
            std::set<std::int64_t> got2;
            for (std::int64_t h : odd_divisors(g, DivisorClass::AllOdd)) {
                auto orbit = g_set(n, 2 * h * d);
                got2.insert(orbit.elements.begin(), orbit.elements.end());
            }
            rec.require(got2 == as_set(m_class_set(n, d, 2)), fail);

            // multiples of 4d, plus zero
            std::set<std::int64_t> expect0 = as_set(m_set(n, 4 * d));
            expect0.insert(0);
            rec.require(as_set(m_class_set(n, d, 0)) == expect0, fail);

            // G splits evenly into the two tagged halves
            const ResidueSet h1 = g_class_set(n, d, 1), h3 = g_class_set(n, d, 3);
            std::set<std::int64_t> both = as_set(h1);
            both.insert(h3.elements.begin(), h3.elements.end());
            rec.require(both == as_set(g_set(n, d)) && both.size() == h1.size() + h3.size(),
                        fail);
            rec.require(static_cast<std::int64_t>(h1.size()) == euler_phi(n / d) / 2 &&
                            h1.size() == h3.size(),
                        fail);

            // four-way split of M^1 and M^3 across the divisor classes
            std::set<std::int64_t> m1, m3;
            for (std::int64_t h : odd_divisors(g, DivisorClass::Odd1Mod4)) {
                for (auto q : g_class_set(n, h * d, 1).elements) m1.insert(q);
                for (auto q : g_class_set(n, h * d, 3).elements) m3.insert(q);
            }
            for (std::int64_t h : odd_divisors(g, DivisorClass::Odd3Mod4)) {
                for (auto q : g_class_set(n, h * d, 3).elements) m1.insert(q);
                for (auto q : g_class_set(n, h * d, 1).elements) m3.insert(q);
            }
            rec.require(m1 == as_set(m_class_set(n, d, 1)), fail);
            rec.require(m3 == as_set(m_class_set(n, d, 3)), fail);
        }
    }
    return rec.take();
}

// n/2 = sum over odd divisors d of phi(n/d), for even n.
inline CheckResult check_phi_identity(std::int64_t bound) {
    detail_v::Recorder rec("number_theory", "phi_identity",
                           "even n <= " + std::to_string(bound));
    for (std::int64_t n = 2; n <= bound && rec.ok(); n += 2) {
        std::int64_t sum = 0;
        for (std::int64_t d : odd_divisors(n, DivisorClass::AllOdd)) sum += euler_phi(n / d);
        rec.require(sum == n / 2, [&] { return detail_v::at_n(n); });
    }
    return rec.take();
}

// sum over odd d | n of mu_P(n/d) is 1 at n = 1 and 0 otherwise.
inline CheckResult check_direct_factor_identity(std::int64_t bound) {
    detail_v::Recorder rec("number_theory", "direct_factor_identity",
                           "n <= " + std::to_string(bound));
    for (std::int64_t n = 1; n <= bound && rec.ok(); ++n) {
        std::int64_t sum = 0;
        for (std::int64_t d : odd_divisors(n, DivisorClass::AllOdd)) sum += moebius_pow2(n / d);
        rec.require(sum == (n == 1 ? 1 : 0), [&] { return detail_v::at_n(n); });
    }
    return rec.take();
}

// --------------------------------------------------------------- gaussian_algebra

// Phi_n^1 * Phi_n^3 = Phi_n, with the right degrees, monic, conjugate halves.
inline CheckResult check_factor_product(std::int64_t bound) {
    detail_v::Recorder rec("gaussian_algebra", "factor_product",
                           "n = 4,8,...," + std::to_string(bound - bound % 4));
    for (std::int64_t n = 4; n <= bound && rec.ok(); n += 4) {
        const GaussianPoly f1 = cyclotomic_factor(n, 1);
        const GaussianPoly f3 = cyclotomic_factor(n, 3);
        auto fail = [&] { return detail_v::at_n(n); };
        rec.require(f1.is_monic() && f3.is_monic(), fail);
        rec.require(f1.degree() == euler_phi(n) / 2 && f3.degree() == euler_phi(n) / 2, fail);
        rec.require(f1 * f3 == cyclotomic(n), fail);
        rec.require(f3 == f1.conjugated(), fail);
    }
    return rec.take();
}

// The odd-divisor products of the factors reconstruct x^{n/4} -+ i exactly.
inline CheckResult check_telescoping_products(std::int64_t bound) {
    detail_v::Recorder rec("gaussian_algebra", "telescoping_products",
                           "n = 4,8,...," + std::to_string(bound - bound % 4));
    for (std::int64_t n = 4; n <= bound && rec.ok(); n += 4) {
        GaussianPoly prod1 = GaussianPoly::one();
        GaussianPoly prod3 = GaussianPoly::one();
        for (std::int64_t d : odd_divisors(n, DivisorClass::Odd1Mod4)) {
            prod1 *= cyclotomic_factor(n / d, 1);
            prod3 *= cyclotomic_factor(n / d, 3);
        }
        for (std::int64_t d : odd_divisors(n, DivisorClass::Odd3Mod4)) {
            prod1 *= cyclotomic_factor(n / d, 3);
            prod3 *= cyclotomic_factor(n / d, 1);
        }
        const GaussianPoly x_pow = GaussianPoly::monomial(GaussianInt(1), n / 4);
        rec.require(prod1 == x_pow + GaussianPoly::constant(-GaussianInt::unit_i()),
                    [&] { return detail_v::at_n(n); });
        rec.require(prod3 == x_pow + GaussianPoly::constant(GaussianInt::unit_i()),
                    [&] { return detail_v::at_n(n); });
    }
    return rec.take();
}

// Each factor vanishes on its own half of the primitive roots and stays
// far from zero on the other half.
inline CheckResult check_root_membership(std::int64_t bound) {
    detail_v::Recorder rec("gaussian_algebra", "root_membership",
                           "n = 4,8,...," + std::to_string(bound - bound % 4));
    for (std::int64_t n = 4; n <= bound && rec.ok(); n += 4) {
        const GaussianPoly f1 = cyclotomic_factor(n, 1);
        const GaussianPoly f3 = cyclotomic_factor(n, 3);
        auto w = [&](std::int64_t a) {
            return std::polar(1.0, 2.0 * M_PI * static_cast<double>(a) / static_cast<double>(n));
        };
        for (std::int64_t a : g_class_set(n, 1, 1).elements) {
            rec.require(std::abs(eval_numeric(f1, w(a))) < 1e-9,
                        [&] { return detail_v::at_n(n, "a", a); });
            rec.require(std::abs(eval_numeric(f3, w(a))) >= 0.1,
                        [&] { return detail_v::at_n(n, "a", a); });
        }
        for (std::int64_t a : g_class_set(n, 1, 3).elements) {
            rec.require(std::abs(eval_numeric(f3, w(a))) < 1e-9,
                        [&] { return detail_v::at_n(n, "a", a); });
            rec.require(std::abs(eval_numeric(f1, w(a))) >= 0.1,
                        [&] { return detail_v::at_n(n, "a", a); });
        }
    }
    return rec.take();
}

// ---------------------------------------------------------------- circulant_core

// Symmetric-part spectra are even in j -> n-j, skew-part spectra odd.
inline CheckResult check_spectrum_symmetry(std::int64_t bound, int draws = 10) {
    detail_v::Recorder rec("circulant_core", "spectrum_symmetry",
                           "n <= " + std::to_string(bound));
    std::mt19937 rng(0x5eed0001);
    for (std::int64_t n = 2; n <= bound && rec.ok(); ++n) {
        for (int trial = 0; trial < draws; ++trial) {
            const SymbolSplit parts = split(detail_v::random_symbol_set(rng, n));
            const auto lambda = spectrum_numeric(parts.symmetric);
            const auto mu = spectrum_numeric(parts.skew);
            for (std::int64_t j = 1; j < n; ++j) {
                rec.require(std::abs(lambda[j] - lambda[n - j]) < 1e-9,
                            [&] { return detail_v::at_n(n, "j", j); });
                rec.require(std::abs(mu[j] + mu[n - j]) < 1e-9,
                            [&] { return detail_v::at_n(n, "j", j); });
            }
        }
    }
    return rec.take();
}

// Integrality of the whole equals integrality of both parts.
inline CheckResult check_split_integrality(std::int64_t exhaustive_bound = 12,
                                           std::int64_t random_bound = 48, int draws = 10) {
    detail_v::Recorder rec("circulant_core", "split_integrality",
                           "exhaustive n <= " + std::to_string(exhaustive_bound) +
                               ", randomized n <= " + std::to_string(random_bound));
    for (std::int64_t n = 2; n <= exhaustive_bound && rec.ok(); ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (n - 1)); ++mask) {
            std::vector<std::int64_t> elems;
            for (std::int64_t k = 1; k < n; ++k) {
                if (mask >> (k - 1) & 1) elems.push_back(k);
            }
            const SymbolSet c(n, std::move(elems));
            const SymbolSplit parts = split(c);
            const bool whole = is_integral(c).integral;
            const bool both = is_integral(parts.symmetric).integral &&
                              is_integral(parts.skew).integral;
            rec.require(whole == both, [&] { return detail_v::at_n(n, "mask", mask); });
        }
    }
    std::mt19937 rng(0x5eed0002);
    for (std::int64_t n = exhaustive_bound + 1; n <= random_bound && rec.ok(); ++n) {
        for (int trial = 0; trial < draws; ++trial) {
            const SymbolSet c = detail_v::random_symbol_set(rng, n);
            const SymbolSplit parts = split(c);
            rec.require(is_integral(c).integral == (is_integral(parts.symmetric).integral &&
                                                    is_integral(parts.skew).integral),
                        [&] { return detail_v::at_n(n); });
        }
    }
    return rec.take();
}

// Exact INTEGER values sit within 1e-6 of the numeric spectrum,
// NON_INTEGER values sit farther than 1e-6 from every integer, and the
// Fourier eigenpair residuals stay below 1e-8.
inline CheckResult check_exact_numeric_coherence(std::int64_t bound, int draws = 10) {
    detail_v::Recorder rec("circulant_core", "exact_numeric_coherence",
                           "n <= " + std::to_string(bound));
    std::mt19937 rng(0x5eed0003);
    for (std::int64_t n = 2; n <= bound && rec.ok(); ++n) {
        for (int trial = 0; trial < draws && rec.ok(); ++trial) {
            const SymbolSet c = detail_v::random_symbol_set(rng, n);
            const auto gamma = spectrum_numeric(c);
            for (std::int64_t j = 0; j < n; ++j) {
                const ExactEigenvalue e = eigenvalue_exact(c, j);
                if (e.is_integer()) {
                    rec.require(std::abs(gamma[j] - static_cast<double>(*e.value)) < 1e-6,
                                [&] { return detail_v::at_n(n, "j", j); });
                } else {
                    rec.require(std::abs(gamma[j] - std::round(gamma[j])) > 1e-6,
                                [&] { return detail_v::at_n(n, "j", j); });
                }
            }
            rec.require(verify_eigenpairs(c, 1e-8), [&] { return detail_v::at_n(n); });
        }
    }
    return rec.take();
}

// ---------------------------------------------------------------- characterization

// The divisor-choice enumeration emits exactly the brute-force family.
inline CheckResult check_enumeration_vs_brute_force(std::int64_t lo, std::int64_t hi) {
    detail_v::Recorder rec("characterization", "enumeration_vs_brute_force",
                           "n = " + std::to_string(lo) + ".." + std::to_string(hi));
    for (std::int64_t n = lo; n <= hi && rec.ok(); ++n) {
        rec.require(detail_v::family(enumerate_integral(n)) ==
                        detail_v::family(brute_force_integral(n, hi)),
                    [&] { return detail_v::at_n(n); });
    }
    return rec.take();
}

// |enumerate_integral(n)| matches the closed-form count.
inline CheckResult check_enumeration_count(std::int64_t bound) {
    detail_v::Recorder rec("characterization", "enumeration_count",
                           "n <= " + std::to_string(bound));
    for (std::int64_t n = 2; n <= bound && rec.ok(); ++n) {
        std::size_t count = 0;
        enumerate_integral(n, [&](const SymbolSet&) { ++count; });
        rec.require(Int(count) == count_bound(n), [&] { return detail_v::at_n(n); });
    }
    return rec.take();
}

// decompose is a two-sided inverse of compose.
inline CheckResult check_compose_decompose_roundtrip(std::int64_t bound, int draws = 20) {
    detail_v::Recorder rec("characterization", "compose_decompose_roundtrip",
                           "n <= " + std::to_string(bound));
    std::mt19937 rng(0x5eed0004);
    for (std::int64_t n = 2; n <= bound && rec.ok(); ++n) {
        for (int trial = 0; trial < draws; ++trial) {
            const Decomposition dec = detail_v::random_decomposition(rng, n);
            const SymbolSet c = compose(dec);
            const auto back = decompose(c);
            rec.require(back.has_value() && *back == dec && compose(*back) == c,
                        [&] { return detail_v::at_n(n); });
        }
    }
    for (std::int64_t n = 2; n <= std::min<std::int64_t>(bound, 16) && rec.ok(); ++n) {
        enumerate_integral(n, [&](const SymbolSet& c) {
            const auto dec = decompose(c);
            rec.require(dec.has_value() && compose(*dec) == c,
                        [&] { return detail_v::at_n(n); });
        });
    }
    return rec.take();
}

// A decomposition exists exactly for the integral symbol sets.
inline CheckResult check_decompose_iff_integral(std::int64_t exhaustive_bound = 16,
                                                int draws = 1000,
                                                std::int64_t random_bound = 48) {
    detail_v::Recorder rec("characterization", "decompose_iff_integral",
                           "exhaustive n <= " + std::to_string(exhaustive_bound) + ", " +
                               std::to_string(draws) + " random draws, n <= " +
                               std::to_string(random_bound));
    for (std::int64_t n = 2; n <= exhaustive_bound && rec.ok(); ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (n - 1)) && rec.ok(); ++mask) {
            std::vector<std::int64_t> elems;
            for (std::int64_t k = 1; k < n; ++k) {
                if (mask >> (k - 1) & 1) elems.push_back(k);
            }
            const SymbolSet c(n, std::move(elems));
            rec.require(decompose(c).has_value() == is_integral(c).integral,
                        [&] { return detail_v::at_n(n, "mask", mask); });
        }
    }
    std::mt19937 rng(0x5eed0005);
    std::uniform_int_distribution<std::int64_t> choose_n(2, random_bound);
    for (int trial = 0; trial < draws && rec.ok(); ++trial) {
        const SymbolSet c = detail_v::random_symbol_set(rng, choose_n(rng));
        rec.require(decompose(c).has_value() == is_integral(c).integral,
                    [&] { return detail_v::at_n(c.n()); });
    }
    return rec.take();
}

// ---------------------------------------------------------------- ramanujan_sums

// Periodicity, antisymmetry, forced zeros and the +-phi(n) peaks of s_n.
inline CheckResult check_s_basic_properties(std::int64_t bound) {
    detail_v::Recorder rec("ramanujan_sums", "s_basic_properties",
                           "n = 4,8,...," + std::to_string(bound - bound % 4));
    for (std::int64_t n = 4; n <= bound && rec.ok(); n += 4) {
        const SumTable s = SumTable::sine(n);
        auto fail = [&] { return detail_v::at_n(n); };
        rec.require(s.at(0) == 0 && s.at(n / 2) == 0, fail);
        rec.require(s.at(n / 4) == euler_phi(n), fail);
        rec.require(s.at(3 * n / 4) == -euler_phi(n), fail);
        for (std::int64_t t = 0; t < n; ++t) {
            rec.require(s.at(n - t) == -s.at(t), [&] { return detail_v::at_n(n, "t", t); });
            rec.require(s.at(t + n) == s.at(t), [&] { return detail_v::at_n(n, "t", t); });
        }
        if (n <= 48) {
            // the single-shot operation folds t the same way the table does
            for (std::int64_t t : {std::int64_t(1), std::int64_t(3), n / 4}) {
                rec.require(s_sum(n, t) == s_sum(n, t + n) && s_sum(n, t) == s.at(t),
                            [&] { return detail_v::at_n(n, "t", t); });
            }
        }
    }
    return rec.take();
}

// The direct-factor closed form matches the exact sine table wherever it
// applies (all odd divisors of n congruent to 1 mod 4).
inline CheckResult check_s_closed_agreement(std::int64_t bound) {
    detail_v::Recorder rec("ramanujan_sums", "s_closed_agreement",
                           "qualifying n <= " + std::to_string(bound));
    for (std::int64_t n = 4; n <= bound && rec.ok(); n += 4) {
        if (!odd_divisors(n, DivisorClass::Odd3Mod4).empty()) continue;
        const SumTable s = SumTable::sine(n);
        for (std::int64_t t = 0; t < n; ++t) {
            rec.require(s_closed(n, t) == s.at(t), [&] { return detail_v::at_n(n, "t", t); });
        }
    }
    return rec.take();
}

// For n = 2^k the sine table is +-2^{k-1} at t == 2^{k-2}, 3*2^{k-2} and 0
// elsewhere.
inline CheckResult check_s_pow2_tables(std::int64_t bound) {
    detail_v::Recorder rec("ramanujan_sums", "s_pow2_tables",
                           "n = 4,8,...,2^k <= " + std::to_string(bound));
    for (std::int64_t n = 4; n <= bound && rec.ok(); n *= 2) {
        const SumTable s = SumTable::sine(n);
        const std::int64_t quarter = n / 4, half = n / 2;
        for (std::int64_t t = 0; t < n; ++t) {
            std::int64_t expect = 0;
            if (t == quarter) expect = half;
            if (t == 3 * quarter) expect = -half;
            rec.require(s.at(t) == expect, [&] { return detail_v::at_n(n, "t", t); });
        }
    }
    return rec.take();
}

// Among all skew-symmetric subsets of the totatives, only the two tagged
// half-orbits give an all-integer sine sum -- and only when 4 | n.
inline CheckResult check_skew_exclusivity(std::int64_t cap = 0) {
    detail_v::Recorder rec("ramanujan_sums", "skew_exclusivity",
                           "n in {4,8,12,20} and {5,6,7,9,10}");
    auto all_integer = [](std::int64_t n, const std::vector<std::int64_t>& c) {
        for (std::int64_t q = 0; q < n; ++q) {
            const double v = s_sum_general(n, c, q);
            if (std::abs(v - std::round(v)) > 1e-6) return false;
        }
        return true;
    };

    for (std::int64_t n : {4, 8, 12, 20, 5, 6, 7, 9, 10}) {
        if (cap > 0 && n > cap) continue;
        if (!rec.ok()) break;
        // negation pairs of totatives; each subset choice is one transversal
        std::vector<std::int64_t> lows;
        for (std::int64_t a = 1; 2 * a < n; ++a) {
            if (std::gcd(a, n) == 1) lows.push_back(a);
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << lows.size()); ++mask) {
            std::vector<std::int64_t> c;
            for (std::size_t idx = 0; idx < lows.size(); ++idx) {
                c.push_back((mask >> idx & 1) ? n - lows[idx] : lows[idx]);
            }
            std::sort(c.begin(), c.end());
            const bool integral = all_integer(n, c);
            bool expected = false;
            if (n % 4 == 0) {
                expected = (c == g_class_set(n, 1, 1).elements) ||
                           (c == g_class_set(n, 1, 3).elements);
            }
            rec.require(integral == expected,
                        [&] { return detail_v::at_n(n, "mask", mask); });
        }
    }
    return rec.take();
}

// Random integral decompositions: the sum-assembled spectrum equals the
// exact spectrum elementwise.
inline CheckResult check_spectrum_reconstruction(std::int64_t cap = 0, int draws = 100) {
    detail_v::Recorder rec("ramanujan_sums", "spectrum_reconstruction",
                           "n in {8,12,16,20,24,48}, " + std::to_string(draws) +
                               " draws each");
    std::mt19937 rng(0x5eed0006);
    for (std::int64_t n : {8, 12, 16, 20, 24, 48}) {
        if (cap > 0 && n > cap) continue;
        if (!rec.ok()) break;
        for (int trial = 0; trial < draws && rec.ok(); ++trial) {
            const Decomposition dec = detail_v::random_decomposition(rng, n);
            const SymbolSet c = compose(dec);
            const std::vector<std::int64_t> assembled = mixed_spectrum_from_sums(dec);
            for (std::int64_t j = 0; j < n; ++j) {
                const ExactEigenvalue e = eigenvalue_exact(c, j);
                rec.require(e.is_integer() && *e.value == assembled[j],
                            [&] { return detail_v::at_n(n, "j", j); });
            }
        }
    }
    return rec.take();
}

// The odd-multiple sine sum telescopes across odd-divisor orbits: the
// class-1 orbits contribute +s_{n/d}, the class-3 orbits contribute
// -s_{n/d}, and the total collapses to +-n/2 at t = n/4, 3n/4 and 0
// elsewhere.
inline CheckResult check_sine_orbit_telescoping(std::int64_t bound) {
    detail_v::Recorder rec("ramanujan_sums", "sine_orbit_telescoping",
                           "n = 4,8,...," + std::to_string(bound - bound % 4));
    for (std::int64_t n = 4; n <= bound && rec.ok(); n += 4) {
        auto sine_orbit_sum = [](std::int64_t m, const std::vector<std::int64_t>& orbit,
                                 std::int64_t t) {
            double sum = 0.0;
            for (std::int64_t a : orbit) {
                sum += 2.0 * std::sin(2.0 * M_PI * static_cast<double>(a % m) *
                                      static_cast<double>(t % m) / static_cast<double>(m));
            }
            return sum;
        };
        const auto d1 = odd_divisors(n, DivisorClass::Odd1Mod4);
        const auto d3 = odd_divisors(n, DivisorClass::Odd3Mod4);
        std::vector<SumTable> tables3;
        for (std::int64_t d : d3) tables3.push_back(SumTable::sine(n / d));

        const auto odd_multiples = m_class_set(n, 1, 1).elements;
        for (std::int64_t t = 0; t < n && rec.ok(); ++t) {
            const double direct = sine_orbit_sum(n, odd_multiples, t);
            double closed = 0.0;
            if (t == n / 4) closed = static_cast<double>(n) / 2.0;
            if (t == 3 * n / 4) closed = -static_cast<double>(n) / 2.0;
            rec.require(std::abs(direct - closed) < 1e-6,
                        [&] { return detail_v::at_n(n, "t", t); });

            double branches = 0.0;
            for (std::int64_t d : d1) {
                branches += sine_orbit_sum(n / d, g_class_set(n / d, 1, 1).elements, t);
            }
            for (std::size_t idx = 0; idx < d3.size(); ++idx) {
                const std::int64_t m = n / d3[idx];
                const double g3 = sine_orbit_sum(m, g_class_set(m, 1, 3).elements, t);
                branches += g3;
                // the class-3 inner sum is the negated sine sum at its scale
                rec.require(std::abs(g3 + static_cast<double>(tables3[idx].at(t))) < 1e-6,
                            [&] { return detail_v::at_n(n, "t", t); });
            }
            rec.require(std::abs(direct - branches) < 1e-6,
                        [&] { return detail_v::at_n(n, "t", t); });
        }
    }
    return rec.take();
}

// ----------------------------------------------------------------------- suites

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"number_theory", "gaussian_algebra",
                                                "circulant_core", "characterization",
                                                "ramanujan_sums"};
    return names;
}

// cap <= 0 runs the canonical ranges; a positive cap shrinks every sweep.
inline std::vector<CheckResult> run_suite(const std::string& name, std::int64_t cap = 0) {
    using detail_v::eff;
    std::vector<CheckResult> out;
    if (name == "number_theory") {
        out.push_back(check_orbit_partition(eff(cap, 200)));
        out.push_back(check_mod4_class_decomposition(eff(cap, 200)));
        out.push_back(check_phi_identity(eff(cap, 10000)));
        out.push_back(check_direct_factor_identity(eff(cap, 10000)));
    } else if (name == "gaussian_algebra") {
        out.push_back(check_factor_product(eff(cap, 256)));
        out.push_back(check_telescoping_products(eff(cap, 256)));
        out.push_back(check_root_membership(eff(cap, 64)));
    } else if (name == "circulant_core") {
        out.push_back(check_spectrum_symmetry(eff(cap, 64)));
        out.push_back(check_split_integrality(eff(cap, 12), eff(cap, 48)));
        out.push_back(check_exact_numeric_coherence(eff(cap, 64)));
    } else if (name == "characterization") {
        out.push_back(check_enumeration_vs_brute_force(2, eff(cap, 16)));
        out.push_back(check_enumeration_count(eff(cap, 64)));
        out.push_back(check_compose_decompose_roundtrip(eff(cap, 48)));
        out.push_back(check_decompose_iff_integral(eff(cap, 16), 1000, eff(cap, 48)));
    } else if (name == "ramanujan_sums") {
        out.push_back(check_s_basic_properties(eff(cap, 400)));
        out.push_back(check_s_closed_agreement(eff(cap, 400)));
        out.push_back(check_s_pow2_tables(eff(cap, 1024)));
        out.push_back(check_skew_exclusivity(cap));
        out.push_back(check_spectrum_reconstruction(cap));
        out.push_back(check_sine_orbit_telescoping(eff(cap, 100)));
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
    return out;
}

inline std::vector<CheckResult> run_all(std::int64_t cap = 0) {
    std::vector<CheckResult> out;
    for (const auto& name : suite_names()) {
        auto results = run_suite(name, cap);
        out.insert(out.end(), results.begin(), results.end());
    }
    return out;
}

}  // namespace circulant::verify
