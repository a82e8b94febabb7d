#pragma once

// Hermitian adjacency matrices of mixed circulant graphs and their spectra.
//
// The matrix is circulant, so the Fourier columns F_j are eigenvectors and
// the eigenvalues come straight from the first row:
//
//   gamma_j = lambda_j + mu_j,
//   lambda_j = sum over the symmetric part of w_n^{jk},
//   mu_j     = i * sum over the skew part of (w_n^{jk} - w_n^{-jk}).
//
// Integrality of gamma_j is decided exactly, never by rounding floats: the
// exponent sum becomes a polynomial P_j over Z[i], and gamma_j = P_j(w_n)
// is an integer iff P_j mod minimal(n) is a real constant (minimal(n) is
// the minimal polynomial of w_n over Q(i); a rational eigenvalue of a
// Hermitian matrix is a rational algebraic integer). The numeric spectrum
// exists only as a cross-check oracle.

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "circulant/gaussian.hpp"
#include "circulant/polynomial.hpp"
#include "circulant/reduction.hpp"
#include "circulant/symbol_set.hpp"

namespace circulant {

inline constexpr double kHermitianImagTol = 1e-9;

class HermitianCirculant {
public:
    explicit HermitianCirculant(const SymbolSet& c) : n_(c.n()) {
        row0_.assign(static_cast<std::size_t>(n_), GaussianInt());
        SymbolSplit parts = split(c);
        for (std::int64_t k : parts.symmetric.elements()) {
            row0_[static_cast<std::size_t>(k)] = GaussianInt(1);
        }
        for (std::int64_t k : parts.skew.elements()) {
            row0_[static_cast<std::size_t>(k)] = GaussianInt::unit_i();
            row0_[static_cast<std::size_t>(n_ - k)] = -GaussianInt::unit_i();
        }
    }

    std::int64_t n() const { return n_; }
    const std::vector<GaussianInt>& first_row() const { return row0_; }

    // h_{uv} = c_{(v-u) mod n}; every row is a cyclic shift of row 0.
    const GaussianInt& entry(std::int64_t u, std::int64_t v) const {
        std::int64_t k = (v - u) % n_;
        if (k < 0) k += n_;
        return row0_[static_cast<std::size_t>(k)];
    }

private:
    std::int64_t n_;
    std::vector<GaussianInt> row0_;
};

inline HermitianCirculant hermitian_matrix(const SymbolSet& c) { return HermitianCirculant(c); }

// Numeric spectrum gamma_0..gamma_{n-1}. The computed values are real up
// to rounding; an imaginary residue above tolerance signals instability
// and throws.
inline std::vector<double> spectrum_numeric(const SymbolSet& c) {
    const std::int64_t n = c.n();
    const SymbolSplit parts = split(c);

    std::vector<std::complex<double>> root(static_cast<std::size_t>(n));
    for (std::int64_t t = 0; t < n; ++t) {
        const double angle = 2.0 * M_PI * static_cast<double>(t) / static_cast<double>(n);
        root[static_cast<std::size_t>(t)] = {std::cos(angle), std::sin(angle)};
    }

    std::vector<double> gamma(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j) {
        std::complex<double> acc{0.0, 0.0};
        for (std::int64_t k : parts.symmetric.elements()) {
            acc += root[static_cast<std::size_t>((j * k) % n)];
        }
        for (std::int64_t k : parts.skew.elements()) {
            const std::int64_t e = (j * k) % n;
            std::complex<double> diff = root[static_cast<std::size_t>(e)] -
                                        root[static_cast<std::size_t>((n - e) % n)];
            acc += std::complex<double>(0.0, 1.0) * diff;
        }
        if (std::abs(acc.imag()) > kHermitianImagTol) {
            throw std::runtime_error("spectrum_numeric: imaginary residue above tolerance");
        }
        gamma[static_cast<std::size_t>(j)] = acc.real();
    }
    return gamma;
}

// Outcome of the exact reduction for one eigenvalue index: either the
// integer value, or the non-constant (or non-real) remainder as witness.
struct ExactEigenvalue {
    std::int64_t j = 0;
    std::optional<std::int64_t> value;
    GaussianPoly remainder;

    bool is_integer() const { return value.has_value(); }
};

inline ExactEigenvalue eigenvalue_exact(const SymbolSet& c, std::int64_t j) {
    const std::int64_t n = c.n();
    if (j < 0 || j >= n) throw std::invalid_argument("eigenvalue index out of range");

    const SymbolSplit parts = split(c);
    const ExactReducer& reducer = ExactReducer::minimal(n);

    // P_j(x) = sum_sym x^{jk} + i * sum_skew (x^{jk} - x^{-jk}), exponents mod n
    std::vector<GaussianInt> acc(static_cast<std::size_t>(reducer.modulus().degree()),
                                 GaussianInt());
    for (std::int64_t k : parts.symmetric.elements()) {
        reducer.accumulate(acc, (j * k) % n, GaussianInt(1));
    }
    const GaussianInt unit = GaussianInt::unit_i();
    for (std::int64_t k : parts.skew.elements()) {
        const std::int64_t e = (j * k) % n;
        reducer.accumulate(acc, e, unit);
        reducer.accumulate(acc, (n - e) % n, -unit);
    }

    ExactEigenvalue out;
    out.j = j;
    out.remainder = GaussianPoly(std::move(acc));
    if (auto v = as_integer_constant(out.remainder)) {
        out.value = v->convert_to<std::int64_t>();
    }
    return out;
}

struct IntegralityResult {
    bool integral = false;
    std::optional<std::int64_t> witness;  // least non-integral index, when any
};

inline IntegralityResult is_integral(const SymbolSet& c) {
    for (std::int64_t j = 0; j < c.n(); ++j) {
        if (!eigenvalue_exact(c, j).is_integer()) return {false, j};
    }
    return {true, std::nullopt};
}

// Residual check of the Fourier eigenpairs: ||H F_j - gamma_j F_j||_inf < tol
// for every j. Replaces a dense eigensolver.
inline bool verify_eigenpairs(const SymbolSet& c, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("verify_eigenpairs: tol must be positive");
    const std::int64_t n = c.n();
    const HermitianCirculant h(c);
    const std::vector<double> gamma = spectrum_numeric(c);

    std::vector<std::complex<double>> root(static_cast<std::size_t>(n));
    for (std::int64_t t = 0; t < n; ++t) {
        const double angle = 2.0 * M_PI * static_cast<double>(t) / static_cast<double>(n);
        root[static_cast<std::size_t>(t)] = {std::cos(angle), std::sin(angle)};
    }
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));

    std::vector<std::complex<double>> row0(static_cast<std::size_t>(n));
    for (std::int64_t l = 0; l < n; ++l) {
        row0[static_cast<std::size_t>(l)] = h.first_row()[static_cast<std::size_t>(l)].to_complex();
    }

    for (std::int64_t j = 0; j < n; ++j) {
        for (std::int64_t u = 0; u < n; ++u) {
            std::complex<double> hx{0.0, 0.0};
            for (std::int64_t l = 0; l < n; ++l) {
                if (row0[static_cast<std::size_t>(l)] == std::complex<double>{}) continue;
                hx += row0[static_cast<std::size_t>(l)] *
                      root[static_cast<std::size_t>(((u + l) % n) * j % n)];
            }
            hx *= inv_sqrt_n;
            const std::complex<double> expect =
                gamma[static_cast<std::size_t>(j)] * inv_sqrt_n *
                root[static_cast<std::size_t>((u * j) % n)];
            if (std::abs(hx - expect) >= tol) return false;
        }
    }
    return true;
}

}  // namespace circulant
