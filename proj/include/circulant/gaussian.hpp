#pragma once

// Exact arithmetic over the Gaussian integers Z[i]. Components are
// arbitrary-precision: intermediate products in the cyclotomic recursion
// never overflow, and correctness here anchors every exact decision
// downstream.

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

namespace circulant {

using Int = boost::multiprecision::cpp_int;

// a + bi with arbitrary-precision components.
struct GaussianInt {
    Int re;
    Int im;

    GaussianInt() : re(0), im(0) {}
    GaussianInt(Int r) : re(std::move(r)), im(0) {}
    GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
    GaussianInt(int r) : re(r), im(0) {}
    GaussianInt(long long r) : re(r), im(0) {}

    static GaussianInt unit_i() { return GaussianInt(Int(0), Int(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GaussianInt conj() const { return GaussianInt(re, -im); }

    GaussianInt operator-() const { return GaussianInt(-re, -im); }

    GaussianInt& operator+=(const GaussianInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianInt& operator-=(const GaussianInt& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianInt& operator*=(const GaussianInt& o) {
        Int r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }

    friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
    friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
    friend GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }

    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianInt& a, const GaussianInt& b) { return !(a == b); }

    std::complex<double> to_complex() const {
        return {re.convert_to<double>(), im.convert_to<double>()};
    }

    // Canonical "a+bi" form, both components always present: "1+0i", "0-1i".
    std::string str() const {
        std::ostringstream os;
        os << re << (im < 0 ? "-" : "+");
        Int mag = im < 0 ? Int(-im) : im;
        os << mag << "i";
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianInt& z) {
        return os << z.str();
    }
};

}  // namespace circulant
