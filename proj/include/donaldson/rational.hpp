#pragma once

#include <gmpxx.h>
#include <string>

namespace donaldson {

/// Exact Gaussian rational a + b*i with arbitrary-precision rational parts.
/// This is the coefficient field for every polynomial and series in the
/// library; there is no floating point anywhere.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(const mpq_class& re) : re_(re), im_(0) { re_.canonicalize(); }
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }
    /// i^k for any integer k (k taken mod 4).
    static GaussianRational i_pow(long k);

    /// Parse the canonical text form: "a", "a/b", "a/b+c/d*i", "a/b-c/d*i",
    /// or a pure imaginary "c/d*i". No spaces, lowercase i.
    static GaussianRational from_string(const std::string& s);
    std::string str() const;

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_imaginary() const { return re_ == 0 && im_ != 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational inverse() const;

private:
    mpq_class re_, im_;
};

/// c^k for k >= 0.
GaussianRational gr_pow(const GaussianRational& c, int k);

/// Exact rational k! as an mpq, used by exponential-series coefficients.
mpq_class factorial_q(int k);

} // namespace donaldson
