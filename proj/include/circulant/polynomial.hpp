#pragma once

// Dense univariate polynomials over Z[i], lowest degree first.
//
// Canonical form: no trailing zero coefficients are stored; the zero
// polynomial is the empty coefficient list (degree -1). Division is
// provided for monic divisors only, which keeps every quotient and
// remainder inside Z[i].

#include <complex>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "circulant/gaussian.hpp"

namespace circulant {

struct GaussianPoly {
    std::vector<GaussianInt> coeffs;  // coeffs[k] multiplies x^k

    GaussianPoly() = default;
    explicit GaussianPoly(std::vector<GaussianInt> c) : coeffs(std::move(c)) { trim(); }

    static GaussianPoly zero() { return GaussianPoly{}; }

    static GaussianPoly constant(GaussianInt c) {
        GaussianPoly p;
        if (!c.is_zero()) p.coeffs.push_back(std::move(c));
        return p;
    }

    static GaussianPoly one() { return constant(GaussianInt(1)); }

    // c * x^k
    static GaussianPoly monomial(GaussianInt c, std::size_t k) {
        GaussianPoly p;
        if (!c.is_zero()) {
            p.coeffs.assign(k + 1, GaussianInt());
            p.coeffs[k] = std::move(c);
        }
        return p;
    }

    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }

    const GaussianInt& leading() const {
        if (is_zero()) throw std::logic_error("leading coefficient of the zero polynomial");
        return coeffs.back();
    }
    bool is_monic() const { return !is_zero() && leading().is_one(); }

    GaussianInt coeff(std::size_t k) const {
        return k < coeffs.size() ? coeffs[k] : GaussianInt();
    }

    void trim() {
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    }

    GaussianPoly conjugated() const {
        GaussianPoly out = *this;
        for (auto& c : out.coeffs) c = c.conj();
        return out;
    }

    GaussianPoly operator-() const {
        GaussianPoly out = *this;
        for (auto& c : out.coeffs) c = -c;
        return out;
    }

    GaussianPoly& operator+=(const GaussianPoly& o) {
        if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size());
        for (std::size_t k = 0; k < o.coeffs.size(); ++k) coeffs[k] += o.coeffs[k];
        trim();
        return *this;
    }
    GaussianPoly& operator-=(const GaussianPoly& o) {
        if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size());
        for (std::size_t k = 0; k < o.coeffs.size(); ++k) coeffs[k] -= o.coeffs[k];
        trim();
        return *this;
    }

    friend GaussianPoly operator+(GaussianPoly a, const GaussianPoly& b) { return a += b; }
    friend GaussianPoly operator-(GaussianPoly a, const GaussianPoly& b) { return a -= b; }

    friend GaussianPoly operator*(const GaussianPoly& a, const GaussianPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        GaussianPoly out;
        out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, GaussianInt());
        for (std::size_t j = 0; j < a.coeffs.size(); ++j) {
            if (a.coeffs[j].is_zero()) continue;
            for (std::size_t k = 0; k < b.coeffs.size(); ++k) {
                out.coeffs[j + k] += a.coeffs[j] * b.coeffs[k];
            }
        }
        out.trim();
        return out;
    }
    GaussianPoly& operator*=(const GaussianPoly& o) { return *this = *this * o; }

    friend bool operator==(const GaussianPoly& a, const GaussianPoly& b) {
        return a.coeffs == b.coeffs;
    }
    friend bool operator!=(const GaussianPoly& a, const GaussianPoly& b) { return !(a == b); }
};

struct DivModResult {
    GaussianPoly quotient;
    GaussianPoly remainder;
};

// Long division by a monic divisor: num = den * quotient + remainder with
// deg(remainder) < deg(den). Monicity keeps all coefficients in Z[i].
inline DivModResult poly_divmod(const GaussianPoly& num, const GaussianPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("poly_divmod: zero divisor");
    if (!den.is_monic()) throw std::invalid_argument("poly_divmod: divisor must be monic");

    const std::int64_t dd = den.degree();
    if (dd == 0) return {num, GaussianPoly::zero()};  // den == 1

    GaussianPoly rem = num;
    if (rem.degree() < dd) return {GaussianPoly::zero(), std::move(rem)};

    GaussianPoly quot;
    quot.coeffs.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, GaussianInt());
    while (rem.degree() >= dd) {
        const std::size_t shift = static_cast<std::size_t>(rem.degree() - dd);
        GaussianInt factor = rem.coeffs.back();
        quot.coeffs[shift] = factor;
        for (std::int64_t k = 0; k <= dd; ++k) {
            rem.coeffs[shift + k] -= factor * den.coeffs[k];
        }
        rem.trim();  // the leading term cancels exactly
    }
    quot.trim();
    return {std::move(quot), std::move(rem)};
}

// p mod m for monic m of degree >= 1.
inline GaussianPoly reduce_mod(const GaussianPoly& p, const GaussianPoly& m) {
    if (m.degree() < 1) throw std::invalid_argument("reduce_mod: modulus must have degree >= 1");
    return poly_divmod(p, m).remainder;
}

// Horner evaluation in floating point; the numeric cross-check oracle.
inline std::complex<double> eval_numeric(const GaussianPoly& p, std::complex<double> z) {
    std::complex<double> acc{0.0, 0.0};
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
        acc = acc * z + it->to_complex();
    }
    return acc;
}

}  // namespace circulant
