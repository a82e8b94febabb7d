#pragma once

// The cosine sum c_n(q) over the totatives G_n(1) and its sine analogue
// s_n(t) over the half-orbit G_n^1(1):
//
//   c_n(q) = sum_{a in G_n(1)}   w_n^{aq}                  (integer, all n)
//   s_n(t) = sum_{a in G_n^1(1)} (w_n^{at} - w_n^{-at})/i  (integer iff 4 | n)
//
// Both are evaluated exactly by reducing the exponent-sum polynomial:
// c_n mod Phi_n over Z, s_n mod Phi_n^1 over Z[i]. Floats appear only in
// the unrestricted sine sum s_n^C, which carries no integrality claim.
//
// Integral spectra reassemble from these sums: a full orbit G_n(d)
// contributes c_{n/d}(j), a half-orbit contributes -s_{n/d}(j) for class 1
// and +s_{n/d}(j) for class 3 (the two halves are negatives of each other
// under a -> n-a).

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "circulant/characterization.hpp"
#include "circulant/number_theory.hpp"
#include "circulant/reduction.hpp"

namespace circulant {

using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline std::int64_t expect_integer(const GaussianPoly& remainder, const char* what) {
    auto v = as_integer_constant(remainder);
    if (!v) throw std::logic_error(std::string(what) + ": remainder is not a real constant");
    return v->convert_to<std::int64_t>();
}

// acc += sign * i * x^e (mod the reducer modulus)
inline void accumulate_times_i(const ExactReducer& reducer, std::vector<GaussianInt>& acc,
                               std::int64_t e, int sign) {
    reducer.accumulate(acc, e, sign > 0 ? GaussianInt::unit_i() : -GaussianInt::unit_i());
}

}  // namespace detail

// Exact Ramanujan sum c_n(q). (For n = 1 the sum over residues coprime to
// 1 is the single term w_1^q = 1.)
inline std::int64_t c_sum(std::int64_t n, std::int64_t q) {
    detail::require_positive(n, "n");
    if (q < 0) throw std::invalid_argument("c_sum: q must be non-negative");
    if (n == 1) return 1;

    const ExactReducer& reducer = ExactReducer::full_cyclotomic(n);
    std::vector<GaussianInt> acc(static_cast<std::size_t>(reducer.modulus().degree()),
                                 GaussianInt());
    for (std::int64_t a : g_set(n, 1).elements) {
        reducer.accumulate(acc, (a % n) * (q % n) % n, GaussianInt(1));
    }
    return detail::expect_integer(GaussianPoly(std::move(acc)), "c_sum");
}

// Exact sine sum s_n(t) for n == 0 (mod 4); the sum is an integer only for
// such n, with C = G_n^1(1).
inline std::int64_t s_sum(std::int64_t n, std::int64_t t) {
    detail::require_positive(n, "n");
    if (n % 4 != 0) throw std::invalid_argument("s_sum: n must be divisible by 4");
    if (t < 0) throw std::invalid_argument("s_sum: t must be non-negative");

    const ExactReducer& reducer = ExactReducer::minimal(n);
    std::vector<GaussianInt> acc(static_cast<std::size_t>(reducer.modulus().degree()),
                                 GaussianInt());
    // -i * sum_a (x^{at} - x^{-at}), exponents mod n
    for (std::int64_t a : g_class_set(n, 1, 1).elements) {
        const std::int64_t e = a * (t % n) % n;
        detail::accumulate_times_i(reducer, acc, e, -1);
        detail::accumulate_times_i(reducer, acc, (n - e) % n, +1);
    }
    return detail::expect_integer(GaussianPoly(std::move(acc)), "s_sum");
}

// Numeric sine sum over an arbitrary skew-symmetric set C in G_n(1); no
// integrality claim. C must pick exactly one of {a, n-a} from every
// totative pair.
inline double s_sum_general(std::int64_t n, const std::vector<std::int64_t>& c, std::int64_t q) {
    detail::require_positive(n, "n");
    std::vector<char> in_c(static_cast<std::size_t>(n), 0);
    for (std::int64_t a : c) {
        if (a <= 0 || a >= n || std::gcd(a, n) != 1) {
            throw std::invalid_argument("s_sum_general: C must lie in G_n(1)");
        }
        in_c[static_cast<std::size_t>(a)] = 1;
    }
    for (std::int64_t a : c) {
        if (in_c[static_cast<std::size_t>(n - a)]) {
            throw std::invalid_argument("s_sum_general: C meets its own negation");
        }
    }
    for (std::int64_t a = 1; a < n; ++a) {
        if (std::gcd(a, n) != 1) continue;
        if (!in_c[static_cast<std::size_t>(a)] && !in_c[static_cast<std::size_t>(n - a)]) {
            throw std::invalid_argument("s_sum_general: C and -C must cover G_n(1)");
        }
    }

    double sum = 0.0;
    for (std::int64_t a : c) {
        sum += 2.0 * std::sin(2.0 * M_PI * static_cast<double>(a) * static_cast<double>(q) /
                              static_cast<double>(n));
    }
    return sum;
}

// Closed form for s_n(t) when every odd divisor of n is 1 mod 4:
//
//   s_n(t) = 2 delta mu_P(n1) * sum_{e | delta, te/delta odd, gcd(n1,e)=1}
//            (-1)^{(te-delta)/(2 delta)} mu_P(e)/e
//
// with delta = gcd(n/4, t) and n1 = n/(4 delta). The inner sum is
// accumulated as an exact rational; the total is provably an integer and
// the final denominator is asserted to be 1.
inline std::int64_t s_closed(std::int64_t n, std::int64_t t) {
    detail::require_positive(n, "n");
    if (n % 4 != 0) throw std::invalid_argument("s_closed: n must be divisible by 4");
    if (t < 0) throw std::invalid_argument("s_closed: t must be non-negative");
    if (!odd_divisors(n, DivisorClass::Odd3Mod4).empty()) {
        throw std::invalid_argument("s_closed: requires every odd divisor of n to be 1 mod 4");
    }

    const std::int64_t quarter = n / 4;
    const std::int64_t delta = std::gcd(quarter, t);  // gcd(x, 0) = x covers t = 0
    const std::int64_t n1 = quarter / delta;

    Rational inner = 0;
    for (std::int64_t e : divisors(delta)) {
        if ((t / delta * e) % 2 == 0) continue;  // te/delta must be odd
        if (std::gcd(n1, e) != 1) continue;
        const std::int64_t parity = (t * e - delta) / (2 * delta);
        Rational term(moebius_pow2(e), e);
        if (parity % 2 != 0) term = -term;
        inner += term;
    }
    Rational total = Rational(2 * delta * moebius_pow2(n1)) * inner;
    if (boost::multiprecision::denominator(total) != 1) {
        throw std::logic_error("s_closed: closed form did not evaluate to an integer");
    }
    return boost::multiprecision::numerator(total).convert_to<std::int64_t>();
}

enum class SumKind { CosineC, SineS };

// Exact table of c_n or s_n over one period. Built with a table-local
// reducer so bulk sweeps do not grow the shared cache.
struct SumTable {
    std::int64_t n = 0;
    SumKind kind = SumKind::CosineC;
    std::vector<std::int64_t> values;

    std::int64_t at(std::int64_t t) const {
        std::int64_t r = t % n;
        if (r < 0) r += n;
        return values[static_cast<std::size_t>(r)];
    }

    static SumTable cosine(std::int64_t n) {
        detail::require_positive(n, "n");
        SumTable table{n, SumKind::CosineC, {}};
        if (n == 1) {
            table.values = {1};
            return table;
        }
        const ExactReducer reducer(n, cyclotomic(n));
        const std::size_t deg = static_cast<std::size_t>(reducer.modulus().degree());
        const std::vector<std::int64_t> totatives = g_set(n, 1).elements;
        table.values.reserve(static_cast<std::size_t>(n));
        for (std::int64_t t = 0; t < n; ++t) {
            std::vector<GaussianInt> acc(deg, GaussianInt());
            for (std::int64_t a : totatives) {
                reducer.accumulate(acc, a * t % n, GaussianInt(1));
            }
            table.values.push_back(
                detail::expect_integer(GaussianPoly(std::move(acc)), "SumTable::cosine"));
        }
        return table;
    }

    static SumTable sine(std::int64_t n) {
        detail::require_positive(n, "n");
        if (n % 4 != 0) throw std::invalid_argument("SumTable::sine: n must be divisible by 4");
        SumTable table{n, SumKind::SineS, {}};
        const ExactReducer reducer(n, cyclotomic_factor(n, 1));
        const std::size_t deg = static_cast<std::size_t>(reducer.modulus().degree());
        const std::vector<std::int64_t> half = g_class_set(n, 1, 1).elements;
        table.values.reserve(static_cast<std::size_t>(n));
        for (std::int64_t t = 0; t < n; ++t) {
            std::vector<GaussianInt> acc(deg, GaussianInt());
            for (std::int64_t a : half) {
                const std::int64_t e = a * t % n;
                detail::accumulate_times_i(reducer, acc, e, -1);
                detail::accumulate_times_i(reducer, acc, (n - e) % n, +1);
            }
            table.values.push_back(
                detail::expect_integer(GaussianPoly(std::move(acc)), "SumTable::sine"));
        }
        return table;
    }
};

// Spectrum of the oriented circulant graph with symbol set G_n^r(d):
// d copies of the s_{n/d} period, negated for class 1.
inline std::vector<std::int64_t> oriented_spectrum_from_s(std::int64_t n, std::int64_t d,
                                                          HalfOrbit tag) {
    detail::require_positive(n, "n");
    if (n % 4 != 0) throw std::invalid_argument("oriented_spectrum_from_s: n must be divisible by 4");
    if (d < 1 || (n / 4) % d != 0) {
        throw std::invalid_argument("oriented_spectrum_from_s: d must divide n/4");
    }
    const SumTable s = SumTable::sine(n / d);
    const int sign = (tag == HalfOrbit::Class1) ? -1 : +1;
    std::vector<std::int64_t> mu(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j) {
        mu[static_cast<std::size_t>(j)] = sign * s.at(j);
    }
    return mu;
}

// Spectrum of an integral mixed circulant graph assembled from sums:
// gamma_j = sum_{d in d1} c_{n/d}(j) + sum_{(d,tag) in d2} -+ s_{n/d}(j).
inline std::vector<std::int64_t> mixed_spectrum_from_sums(const Decomposition& dec) {
    detail::validate_decomposition(dec);
    std::vector<std::int64_t> gamma(static_cast<std::size_t>(dec.n), 0);
    for (std::int64_t d : dec.d1) {
        const SumTable c = SumTable::cosine(dec.n / d);
        for (std::int64_t j = 0; j < dec.n; ++j) gamma[static_cast<std::size_t>(j)] += c.at(j);
    }
    for (const auto& [d, tag] : dec.d2) {
        const SumTable s = SumTable::sine(dec.n / d);
        const int sign = (tag == HalfOrbit::Class1) ? -1 : +1;
        for (std::int64_t j = 0; j < dec.n; ++j) {
            gamma[static_cast<std::size_t>(j)] += sign * s.at(j);
        }
    }
    return gamma;
}

}  // namespace circulant
