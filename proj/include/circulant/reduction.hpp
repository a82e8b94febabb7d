#pragma once

// Exact reduction modulo a fixed monic divisor M of x^n - 1.
//
// Because M | x^n - 1, the relation x^n == 1 (mod M) holds and exponents
// fold mod n. The remainders of x^e for e in [0, n) are precomputed once,
// so reducing an exponent-sum polynomial is a handful of coefficient adds
// per term instead of a fresh long division. reduce() agrees with
// poly_divmod by linearity; the unit tests pin the two routes against
// each other on random inputs.
//
// The interesting moduli:
//   minimal(n)        -- the minimal polynomial of w_n over Q(i):
//                        Phi_n^1 when n == 0 (mod 4), else Phi_n.
//   full_cyclotomic(n) -- Phi_n, the minimal polynomial of w_n over Q.
//
// A value p(w_n) lies in Q(i) exactly when p mod minimal(n) is constant;
// that is the integrality test used throughout.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "circulant/cyclotomic.hpp"
#include "circulant/polynomial.hpp"

namespace circulant {

class ExactReducer {
public:
    ExactReducer(std::int64_t n, GaussianPoly modulus) : n_(n), modulus_(std::move(modulus)) {
        detail::require_positive(n, "n");
        if (!modulus_.is_monic() || modulus_.degree() < 1) {
            throw std::invalid_argument("ExactReducer: modulus must be monic of degree >= 1");
        }
        GaussianPoly xn1 = detail::x_power_plus_const(n_, GaussianInt(-1));
        if (!poly_divmod(xn1, modulus_).remainder.is_zero()) {
            throw std::invalid_argument("ExactReducer: modulus must divide x^n - 1");
        }
        build_power_table();
    }

    std::int64_t n() const { return n_; }
    const GaussianPoly& modulus() const { return modulus_; }

    // x^e mod M, with e folded mod n.
    const GaussianPoly& power(std::int64_t e) const {
        e %= n_;
        if (e < 0) e += n_;
        return powers_[static_cast<std::size_t>(e)];
    }

    GaussianPoly reduce(const GaussianPoly& p) const {
        std::vector<GaussianInt> acc(static_cast<std::size_t>(modulus_.degree()), GaussianInt());
        for (std::size_t e = 0; e < p.coeffs.size(); ++e) {
            if (p.coeffs[e].is_zero()) continue;
            accumulate(acc, static_cast<std::int64_t>(e), p.coeffs[e]);
        }
        return GaussianPoly(std::move(acc));
    }

    // acc += c * (x^e mod M); the hot path of every exponent-sum reduction.
    // Only the non-zero entries of the remainder row are touched, which is
    // what makes binomial moduli like x^{n/4} - i cheap.
    void accumulate(std::vector<GaussianInt>& acc, std::int64_t e, const GaussianInt& c) const {
        e %= n_;
        if (e < 0) e += n_;
        const auto& row = sparse_[static_cast<std::size_t>(e)];
        if (c.is_one()) {
            for (const auto& [k, v] : row) acc[k] += v;
        } else if (c == GaussianInt(-1)) {
            for (const auto& [k, v] : row) acc[k] -= v;
        } else {
            for (const auto& [k, v] : row) acc[k] += c * v;
        }
    }

    // Shared, process-lifetime instances (write-once caches).
    static const ExactReducer& minimal(std::int64_t n) {
        return cached(n, /*use_factor=*/n % 4 == 0);
    }
    static const ExactReducer& full_cyclotomic(std::int64_t n) {
        return cached(n, /*use_factor=*/false);
    }

private:
    void build_power_table() {
        const std::size_t deg = static_cast<std::size_t>(modulus_.degree());
        powers_.reserve(static_cast<std::size_t>(n_));
        powers_.push_back(GaussianPoly::one());
        for (std::int64_t e = 1; e < n_; ++e) {
            // multiply the previous remainder by x, then fold the overflow
            // coefficient back using x^deg == -(lower part of M)
            const auto& prev = powers_.back().coeffs;
            std::vector<GaussianInt> next(deg, GaussianInt());
            for (std::size_t k = 0; k + 1 < deg && k < prev.size(); ++k) {
                next[k + 1] = prev[k];
            }
            if (prev.size() == deg && !prev[deg - 1].is_zero()) {
                const GaussianInt& top = prev[deg - 1];
                for (std::size_t k = 0; k < deg; ++k) {
                    next[k] -= top * modulus_.coeffs[k];
                }
            }
            powers_.emplace_back(std::move(next));
        }

        sparse_.reserve(powers_.size());
        for (const GaussianPoly& row : powers_) {
            std::vector<std::pair<std::uint32_t, GaussianInt>> entries;
            for (std::size_t k = 0; k < row.coeffs.size(); ++k) {
                if (!row.coeffs[k].is_zero()) entries.emplace_back(k, row.coeffs[k]);
            }
            sparse_.push_back(std::move(entries));
        }
    }

    static const ExactReducer& cached(std::int64_t n, bool use_factor) {
        static std::mutex mu;
        static std::map<std::pair<std::int64_t, bool>, std::unique_ptr<ExactReducer>> cache;
        const auto key = std::make_pair(n, use_factor);
        {
            std::scoped_lock lock(mu);
            auto it = cache.find(key);
            if (it != cache.end()) return *it->second;
        }
        GaussianPoly modulus = use_factor ? cyclotomic_factor(n, 1) : cyclotomic(n);
        auto reducer = std::make_unique<ExactReducer>(n, std::move(modulus));
        std::scoped_lock lock(mu);
        auto [it, inserted] = cache.emplace(key, std::move(reducer));
        return *it->second;
    }

    std::int64_t n_;
    GaussianPoly modulus_;
    std::vector<GaussianPoly> powers_;
    std::vector<std::vector<std::pair<std::uint32_t, GaussianInt>>> sparse_;
};

// The reduced value as an integer, if the remainder is a constant with
// zero imaginary part.
inline std::optional<Int> as_integer_constant(const GaussianPoly& remainder) {
    if (remainder.is_zero()) return Int(0);
    if (remainder.degree() == 0 && remainder.coeffs[0].is_real()) return remainder.coeffs[0].re;
    return std::nullopt;
}

}  // namespace circulant
