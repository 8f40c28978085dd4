#pragma once

#include <vector>

#include "donaldson/poly.hpp"

namespace donaldson {

/// One summand of the reduced Fukaya-Floer ring of Sigma x S^1: the component
/// indexed by r in [-(g-1), g-1]. Eigenvalues are degree-1 polynomials in t,
/// stored as constant + t-coefficient.
struct SpectrumEntry {
    long r;
    bool odd;
    GaussianRational alpha_const; // 4r (odd) or 4r*i (even)
    GaussianRational alpha_t;     // +2 (odd) or -2 (even)
    GaussianRational beta;        // -8 (odd) or 8 (even)
    bool gamma_nilpotent = true;
};

struct HFFSpectrum {
    long g;
    int N; // nilpotency order
    std::vector<SpectrumEntry> entries; // exactly 2g-1, r ascending
};

/// The eigenvalue table for genus g with nilpotency order N.
HFFSpectrum spectrum(long g, int N);

/// One factor (d/d(var) - (c0 + ct * t))^mult of an annihilating operator.
struct AnnFactor {
    bool on_lambda = false; // false: d/ds, true: d/d(lambda)
    GaussianRational c0;
    GaussianRational ct;
    int mult = 1;
};

struct AnnihilatorOp {
    std::vector<AnnFactor> factors;
};

struct AnnihilatorSet {
    AnnihilatorOp plus;     // odd-r s-factors and (d/dl - 2)^N
    AnnihilatorOp minus;    // even-r s-factors and (d/dl + 2)^N
    AnnihilatorOp combined; // product of the two
};

/// The differential operators annihilating a generating function restricted
/// along a surface direction with D.Sigma = dsigma. Plus s-eigenvalues are
/// 2r + t*dsigma over odd r; Minus s-eigenvalues are 2r*i - t*dsigma over
/// even r.
AnnihilatorSet annihilators(long g, int N, long dsigma);

/// Apply the operator termwise to F (a series whose variables include "s"
/// and "lambda", and "t" when a factor has a t-linear eigenvalue) and test
/// whether the result vanishes up to the cutoff remaining after the
/// derivative applications. Throws validation_error when the cutoffs are too
/// shallow to decide.
bool check_annihilated(const TruncSeries& f, const AnnihilatorOp& op);

/// Element of the effective ring: for each r a truncated polynomial in
/// (t, abar, bbar, c) where abar = alpha - mu_alpha(r), bbar = beta -
/// mu_beta(r); nilpotency (abar^N = bbar^N = c^N = 0) and the t-cutoff are
/// enforced by reduction.
class EffectiveRing {
public:
    EffectiveRing(long g, int N, int tcut);

    long g() const { return g_; }
    int N() const { return N_; }
    int tcut() const { return tcut_; }
    const HFFSpectrum& spec() const { return spec_; }
    std::size_t ncomps() const { return spec_.entries.size(); }
    const std::vector<std::string>& vars() const { return vars_; }

    struct Element {
        std::vector<MultiPoly> comps;

        friend bool operator==(const Element& a, const Element& b) { return a.comps == b.comps; }
        bool is_zero() const;
    };

    Element zero() const;
    Element one() const;
    Element gen_alpha() const;
    Element gen_beta() const;
    Element gen_gamma() const;
    Element constant(const GaussianRational& c) const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element mul(const Element& a, const Element& b) const;
    Element pow(const Element& a, int k) const;

private:
    long g_;
    int N_;
    int tcut_;
    HFFSpectrum spec_;
    std::vector<std::string> vars_; // {"t", "abar", "bbar", "c"}

    MultiPoly reduce(const MultiPoly& p) const;
    void check_compatible(const Element& e) const;
};

} // namespace donaldson
