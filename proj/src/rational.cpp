#include "donaldson/rational.hpp"

#include "donaldson/errors.hpp"

namespace donaldson {

GaussianRational GaussianRational::i_pow(long k) {
    long r = ((k % 4) + 4) % 4;
    switch (r) {
        case 0: return GaussianRational(1);
        case 1: return i();
        case 2: return GaussianRational(-1);
        default: return GaussianRational(mpq_class(0), mpq_class(-1));
    }
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    // Real factors dominate in the dense kernels; skip the full complex
    // product when an imaginary part vanishes.
    if (o.im_ == 0) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    if (im_ == 0) {
        im_ = re_ * o.im_;
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw validation_error("division by zero Gaussian rational");
    mpq_class n = re_ * re_ + im_ * im_;
    return GaussianRational(re_ / n, -im_ / n);
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

namespace {

mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw validation_error("empty rational literal");
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw validation_error("bad rational literal: '" + s + "'");
    if (q.get_den() == 0) throw validation_error("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace

GaussianRational GaussianRational::from_string(const std::string& s) {
    if (s.empty()) throw validation_error("empty Gaussian rational literal");
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "*i") == 0) {
        std::string body = s.substr(0, s.size() - 2);
        // Split at the sign separating the real part from the imaginary part.
        // Literals contain no internal signs except a leading one.
        for (std::size_t p = 1; p < body.size(); ++p) {
            if (body[p] == '+' || body[p] == '-') {
                mpq_class re = parse_rational(body.substr(0, p));
                mpq_class im = parse_rational(body.substr(p + 1));
                if (body[p] == '-') im = -im;
                return GaussianRational(re, im);
            }
        }
        return GaussianRational(mpq_class(0), parse_rational(body));
    }
    return GaussianRational(parse_rational(s));
}

std::string GaussianRational::str() const {
    if (re_ == 0 && im_ != 0) return im_.get_str() + "*i";
    std::string out = re_.get_str();
    if (im_ != 0) {
        if (im_ > 0) {
            out += "+" + im_.get_str() + "*i";
        } else {
            mpq_class m = -im_;
            out += "-" + m.get_str() + "*i";
        }
    }
    return out;
}

GaussianRational gr_pow(const GaussianRational& c, int k) {
    GaussianRational out(1);
    for (int j = 0; j < k; ++j) out *= c;
    return out;
}

mpq_class factorial_q(int k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return mpq_class(f);
}

} // namespace donaldson
