#pragma once

// Text rendering of Gaussian polynomials for the CLI: a machine-friendly
// low-to-high coefficient list ("-1+0i, 0-1i, 1+0i") and a readable form
// ("x^2 - i*x - 1").

#include <sstream>
#include <string>

#include "circulant/gaussian.hpp"
#include "circulant/polynomial.hpp"

namespace circulant {

inline std::string poly_coeff_list(const GaussianPoly& p) {
    if (p.is_zero()) return GaussianInt().str();
    std::string out;
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
        if (k > 0) out += ", ";
        out += p.coeffs[k].str();
    }
    return out;
}

namespace detail {

inline std::string power_suffix(std::int64_t k) {
    if (k == 0) return "";
    if (k == 1) return "x";
    return "x^" + std::to_string(k);
}

// magnitude * x^k for a real or purely imaginary magnitude
inline std::string pretty_term(const Int& mag, bool imaginary, std::int64_t k) {
    std::ostringstream os;
    std::string coeff;
    if (imaginary) {
        if (mag != 1) os << mag;
        os << "i";
        coeff = os.str();
    } else if (mag != 1 || k == 0) {
        os << mag;
        coeff = os.str();
    }
    const std::string xs = power_suffix(k);
    if (coeff.empty()) return xs;
    if (xs.empty()) return coeff;
    return coeff + "*" + xs;
}

}  // namespace detail

inline std::string poly_pretty(const GaussianPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::int64_t k = p.degree(); k >= 0; --k) {
        const GaussianInt c = p.coeff(static_cast<std::size_t>(k));
        if (c.is_zero()) continue;

        bool negative = false;
        std::string body;
        if (c.is_real()) {
            negative = c.re < 0;
            body = detail::pretty_term(negative ? Int(-c.re) : c.re, false, k);
        } else if (c.re == 0) {
            negative = c.im < 0;
            body = detail::pretty_term(negative ? Int(-c.im) : c.im, true, k);
        } else {
            std::string suffix = detail::power_suffix(k);
            body = "(" + c.str() + ")" + (suffix.empty() ? "" : "*" + suffix);
        }

        if (out.empty()) {
            out = (negative ? "-" : "") + body;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

}  // namespace circulant
