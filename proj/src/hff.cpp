#include "donaldson/hff.hpp"

#include <algorithm>

#include "donaldson/errors.hpp"

namespace donaldson {

HFFSpectrum spectrum(long g, int N) {
    if (g < 1) throw validation_error("genus must be >= 1");
    if (N < 1) throw validation_error("nilpotency order must be >= 1");
    HFFSpectrum s{g, N, {}};
    for (long r = -(g - 1); r <= g - 1; ++r) {
        SpectrumEntry e;
        e.r = r;
        e.odd = (((r % 2) + 2) % 2) == 1;
        if (e.odd) {
            e.alpha_const = GaussianRational(4 * r);
            e.alpha_t = GaussianRational(2);
            e.beta = GaussianRational(-8);
        } else {
            e.alpha_const = GaussianRational(4 * r) * GaussianRational::i();
            e.alpha_t = GaussianRational(-2);
            e.beta = GaussianRational(8);
        }
        s.entries.push_back(e);
    }
    return s;
}

AnnihilatorSet annihilators(long g, int N, long dsigma) {
    HFFSpectrum sp = spectrum(g, N);
    AnnihilatorSet out;
    for (const auto& e : sp.entries) {
        if (!e.odd) continue;
        out.plus.factors.push_back(
            AnnFactor{false, GaussianRational(2 * e.r), GaussianRational(dsigma), N});
    }
    out.plus.factors.push_back(AnnFactor{true, GaussianRational(2), GaussianRational(0), N});
    for (const auto& e : sp.entries) {
        if (e.odd) continue;
        out.minus.factors.push_back(AnnFactor{
            false, GaussianRational(2 * e.r) * GaussianRational::i(), GaussianRational(-dsigma), N});
    }
    out.minus.factors.push_back(AnnFactor{true, GaussianRational(-2), GaussianRational(0), N});
    out.combined.factors = out.plus.factors;
    out.combined.factors.insert(out.combined.factors.end(), out.minus.factors.begin(),
                                out.minus.factors.end());
    return out;
}

bool check_annihilated(const TruncSeries& f, const AnnihilatorOp& op) {
    const auto& vars = f.vars();
    auto find_var = [&](const std::string& name) {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<long>(i);
        return -1L;
    };
    long s_idx = find_var("s");
    long l_idx = find_var("lambda");
    long t_idx = find_var("t");

    TruncSeries cur = f;
    Cutoffs cut = f.cutoffs();
    // Per-variable bookkeeping needs an explicit box; synthesize one from the
    // total cutoff when absent.
    if (cut.per_var.empty()) cut.per_var.assign(vars.size() - (l_idx >= 0 ? 1 : 0), cut.total);

    auto nonlambda_slot = [&](long idx) {
        long slot = idx;
        if (l_idx >= 0 && idx > l_idx) --slot;
        return static_cast<std::size_t>(slot);
    };

    for (const auto& fac : op.factors) {
        if (fac.mult < 1) throw validation_error("factor multiplicity must be >= 1");
        long idx = fac.on_lambda ? l_idx : s_idx;
        if (idx < 0) throw validation_error("series lacks the factor's variable");
        if (!fac.ct.is_zero() && t_idx < 0)
            throw validation_error("series lacks variable t required by the eigenvalue");

        MultiPoly eig(vars);
        if (!fac.c0.is_zero()) eig.add_term(ExpVec(vars.size(), 0), fac.c0);
        if (!fac.ct.is_zero()) {
            ExpVec e(vars.size(), 0);
            e[static_cast<std::size_t>(t_idx)] = 1;
            eig.add_term(e, fac.ct);
        }

        for (int k = 0; k < fac.mult; ++k) {
            if (fac.on_lambda) {
                cut.lambda -= 1;
            } else {
                cut.total -= 1;
                cut.per_var[nonlambda_slot(idx)] -= 1;
            }
            if (cut.lambda < 0 || cut.total < 0 ||
                (!fac.on_lambda && cut.per_var[nonlambda_slot(idx)] < 0))
                throw validation_error("cutoff too shallow for the annihilator check");
            TruncSeries d = cur.derivative(static_cast<std::size_t>(idx));
            cur = d - cur.mul_poly(eig);
        }
    }
    return cur.truncated(cut).is_zero();
}

// -------------------------------------------------------------- effective ring

EffectiveRing::EffectiveRing(long g, int N, int tcut)
    : g_(g), N_(N), tcut_(tcut), spec_(spectrum(g, N)), vars_{"t", "abar", "bbar", "c"} {
    if (tcut < 0) throw validation_error("t-cutoff must be >= 0");
}

MultiPoly EffectiveRing::reduce(const MultiPoly& p) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : p.terms()) {
        if (e[0] > tcut_) continue;
        if (e[1] >= N_ || e[2] >= N_ || e[3] >= N_) continue;
        out.add_term(e, c);
    }
    return out;
}

void EffectiveRing::check_compatible(const Element& e) const {
    if (e.comps.size() != ncomps()) throw validation_error("effective-ring component mismatch");
    for (const auto& p : e.comps)
        if (p.vars() != vars_) throw validation_error("effective-ring variable mismatch");
}

bool EffectiveRing::Element::is_zero() const {
    for (const auto& p : comps)
        if (!p.is_zero()) return false;
    return true;
}

EffectiveRing::Element EffectiveRing::zero() const {
    Element e;
    e.comps.assign(ncomps(), MultiPoly(vars_));
    return e;
}

EffectiveRing::Element EffectiveRing::constant(const GaussianRational& c) const {
    Element e = zero();
    for (auto& p : e.comps) p = MultiPoly::constant(vars_, c);
    return e;
}

EffectiveRing::Element EffectiveRing::one() const { return constant(GaussianRational(1)); }

EffectiveRing::Element EffectiveRing::gen_alpha() const {
    Element e = zero();
    for (std::size_t i = 0; i < ncomps(); ++i) {
        const auto& ent = spec_.entries[i];
        MultiPoly p(vars_);
        p.add_term(ExpVec{0, 1, 0, 0}, GaussianRational(1)); // abar
        if (!ent.alpha_const.is_zero()) p.add_term(ExpVec{0, 0, 0, 0}, ent.alpha_const);
        p.add_term(ExpVec{1, 0, 0, 0}, ent.alpha_t);
        e.comps[i] = reduce(p);
    }
    return e;
}

EffectiveRing::Element EffectiveRing::gen_beta() const {
    Element e = zero();
    for (std::size_t i = 0; i < ncomps(); ++i) {
        MultiPoly p(vars_);
        p.add_term(ExpVec{0, 0, 1, 0}, GaussianRational(1)); // bbar
        p.add_term(ExpVec{0, 0, 0, 0}, spec_.entries[i].beta);
        e.comps[i] = reduce(p);
    }
    return e;
}

EffectiveRing::Element EffectiveRing::gen_gamma() const {
    Element e = zero();
    for (auto& p : e.comps)
        p = reduce(MultiPoly::monomial(vars_, ExpVec{0, 0, 0, 1}, GaussianRational(1)));
    return e;
}

EffectiveRing::Element EffectiveRing::add(const Element& a, const Element& b) const {
    check_compatible(a);
    check_compatible(b);
    Element e = a;
    for (std::size_t i = 0; i < e.comps.size(); ++i) e.comps[i] += b.comps[i];
    return e;
}

EffectiveRing::Element EffectiveRing::sub(const Element& a, const Element& b) const {
    check_compatible(a);
    check_compatible(b);
    Element e = a;
    for (std::size_t i = 0; i < e.comps.size(); ++i) e.comps[i] -= b.comps[i];
    return e;
}

EffectiveRing::Element EffectiveRing::mul(const Element& a, const Element& b) const {
    check_compatible(a);
    check_compatible(b);
    Element e = zero();
    for (std::size_t i = 0; i < e.comps.size(); ++i) e.comps[i] = reduce(a.comps[i] * b.comps[i]);
    return e;
}

EffectiveRing::Element EffectiveRing::pow(const Element& a, int k) const {
    if (k < 0) throw validation_error("negative power in effective ring");
    Element e = one();
    for (int j = 0; j < k; ++j) e = mul(e, a);
    return e;
}

} // namespace donaldson
