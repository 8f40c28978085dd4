#include "donaldson/series.hpp"

#include <algorithm>
#include <map>

#include "donaldson/box.hpp"
#include "donaldson/errors.hpp"

namespace donaldson {

DonaldsonSeries::DonaldsonSeries(ManifoldData manifold, CohClass w, OneCycleWord zword,
                                 std::vector<SeriesTerm> terms, SeriesFlags flags)
    : manifold_(std::move(manifold)),
      w_(std::move(w)),
      zword_(std::move(zword)),
      terms_(std::move(terms)),
      flags_(flags) {
    manifold_.validate();
    if (w_.rank() != manifold_.lattice.rank()) throw validation_error("w rank mismatch");
    auto pv = poly_vars();
    for (const auto& t : terms_) {
        if (t.K.rank() != manifold_.lattice.rank())
            throw validation_error("term class rank mismatch");
        if (t.poly.vars() != pv)
            throw validation_error("term polynomial variable list mismatch");
    }
}

DonaldsonSeries DonaldsonSeries::canonicalized() const {
    std::map<std::pair<int, CohClass>, MultiPoly> merged;
    for (const auto& t : terms_) {
        auto key = std::make_pair(t.sector == Sector::Plus ? 0 : 1, t.K);
        auto it = merged.find(key);
        if (it == merged.end())
            merged.emplace(key, t.poly);
        else
            it->second += t.poly;
    }
    std::vector<SeriesTerm> out;
    for (auto& [key, poly] : merged) {
        if (poly.is_zero()) continue;
        out.push_back(SeriesTerm{key.first == 0 ? Sector::Plus : Sector::Minus, key.second, poly});
    }
    DonaldsonSeries s = *this;
    s.terms_ = std::move(out);
    return s;
}

DonaldsonSeries DonaldsonSeries::with_terms(std::vector<SeriesTerm> terms) const {
    DonaldsonSeries s = *this;
    s.terms_ = std::move(terms);
    return s.canonicalized();
}

DonaldsonSeries DonaldsonSeries::with_w(CohClass w) const {
    DonaldsonSeries s = *this;
    if (w.rank() != manifold_.lattice.rank()) throw validation_error("w rank mismatch");
    s.w_ = std::move(w);
    return s;
}

DonaldsonSeries DonaldsonSeries::scaled(const GaussianRational& c) const {
    std::vector<SeriesTerm> out;
    if (!c.is_zero())
        for (const auto& t : terms_) out.push_back(SeriesTerm{t.sector, t.K, t.poly.scaled(c)});
    return with_terms(std::move(out));
}

int DonaldsonSeries::max_lambda_degree() const {
    int d = -1;
    std::size_t lam = rank();
    for (const auto& t : terms_) d = std::max(d, t.poly.degree_in(lam));
    return d;
}

bool DonaldsonSeries::has_constant_polys() const {
    for (const auto& t : terms_)
        if (!t.poly.is_constant()) return false;
    return true;
}

bool operator==(const DonaldsonSeries& a, const DonaldsonSeries& b) {
    DonaldsonSeries ca = a.canonicalized();
    DonaldsonSeries cb = b.canonicalized();
    return ca.manifold_ == cb.manifold_ && ca.w_ == cb.w_ && ca.zword_ == cb.zword_ &&
           ca.terms_ == cb.terms_;
}

// ------------------------------------------------------------------ expand

TruncSeries expand_directions(const DonaldsonSeries& s, const std::vector<CohClass>& dirs,
                              const std::vector<std::string>& dir_names, const Cutoffs& cut) {
    if (dirs.size() != dir_names.size()) throw validation_error("direction naming mismatch");
    const Lattice& L = s.manifold().lattice;
    for (const auto& d : dirs)
        if (d.rank() != L.rank()) throw validation_error("direction rank mismatch");
    for (const auto& n : dir_names)
        if (n == "lambda") throw validation_error("direction variable may not be named lambda");

    std::vector<std::string> vars = dir_names;
    vars.push_back("lambda");
    const std::size_t m = dirs.size();
    const std::size_t lam = m;

    // Substitutions for the stored polynomials: lattice coordinate t_j
    // becomes sum_a u_a * dirs[a][j].
    std::vector<MultiPoly> subs;
    for (std::size_t j = 0; j < L.rank(); ++j) {
        MultiPoly lin(vars);
        for (std::size_t a = 0; a < m; ++a) {
            ExpVec e(vars.size(), 0);
            e[a] = 1;
            lin.add_term(e, GaussianRational(dirs[a][j]));
        }
        subs.push_back(std::move(lin));
    }
    subs.push_back(MultiPoly::variable(vars, lam));

    TruncSeries shape(vars, cut);
    BoxSeries acc = BoxSeries::from_trunc(shape);
    const std::vector<int> dims = acc.dims;

    // Per sector: sum the p * exp(K.tD +- 2 lambda) boxes (direct exponential
    // fill, cheap), then apply the shared quadratic prefactor exp(+-Q/2) once.
    for (int sec = 0; sec < 2; ++sec) {
        const bool plus = sec == 0;
        BoxSeries sb(vars, dims);
        bool any = false;
        for (const auto& term : s.terms()) {
            if ((term.sector == Sector::Plus) != plus) continue;
            MultiPoly p = term.poly.substitute(subs, vars);
            if (p.is_zero()) continue;
            std::vector<GaussianRational> lin(vars.size(), GaussianRational(0));
            for (std::size_t a = 0; a < m; ++a) {
                long kd = evaluation(term.K, dirs[a]);
                lin[a] = plus ? GaussianRational(kd)
                              : GaussianRational(kd) * GaussianRational::i();
            }
            lin[lam] = GaussianRational(plus ? 2 : -2);
            BoxSeries b = box_fill_exponential(vars, dims, lin);
            box_add(sb, box_mul_poly(b, p));
            any = true;
        }
        if (!any) continue;
        for (std::size_t a = 0; a < m; ++a) {
            long q = pairing(L, dirs[a], dirs[a]);
            if (q == 0) continue;
            ExpVec step(vars.size(), 0);
            step[a] = 2;
            sb = box_mul_exp_monomial(sb, step, GaussianRational(mpq_class(plus ? q : -q, 2)));
        }
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t bb = a + 1; bb < m; ++bb) {
                long q = pairing(L, dirs[a], dirs[bb]);
                if (q == 0) continue;
                ExpVec step(vars.size(), 0);
                step[a] = 1;
                step[bb] = 1;
                sb = box_mul_exp_monomial(sb, step, GaussianRational(plus ? q : -q));
            }
        }
        box_add(acc, sb);
    }
    return acc.to_trunc(cut);
}

TruncSeries expand(const DonaldsonSeries& s, const Cutoffs& cut) {
    std::vector<CohClass> dirs;
    std::vector<std::string> names;
    for (std::size_t j = 0; j < s.rank(); ++j) {
        dirs.push_back(s.manifold().lattice.basis_vector(j));
        names.push_back("t" + std::to_string(j + 1));
    }
    return expand_directions(s, dirs, names, cut);
}

// -------------------------------------------------------------- symmetrize

DonaldsonSeries symmetrize(const DonaldsonSeries& s) {
    int d0md = s.d0_minus_d_mod4(); // throws on parity violation
    GaussianRational phase = GaussianRational::i_pow(-d0md); // i^(d-d0)
    std::vector<GaussianRational> factors(s.rank() + 1, GaussianRational::i());
    factors.back() = GaussianRational(-1); // lambda -> -lambda

    std::vector<SeriesTerm> out;
    for (const auto& t : s.terms())
        if (t.sector == Sector::Plus) out.push_back(t);
    for (const auto& t : s.terms()) {
        if (t.sector != Sector::Plus) continue;
        MultiPoly q = t.poly.scale_vars(factors).scaled(phase);
        if (!q.is_zero()) out.push_back(SeriesTerm{Sector::Minus, t.K, q});
    }
    DonaldsonSeries r = s.with_terms(std::move(out));
    r.flags().claims_symmetric = true;
    return r;
}

PairReport check_pair_structure(const DonaldsonSeries& s) {
    PairReport rep;
    int d0md = s.d0_minus_d_mod4();
    GaussianRational sign = (d0md % 2 == 0) ? GaussianRational(1) : GaussianRational(-1);
    std::vector<GaussianRational> negate(s.rank() + 1, GaussianRational(-1));
    negate.back() = GaussianRational(1); // lambda untouched

    DonaldsonSeries c = s.canonicalized();
    std::map<CohClass, MultiPoly> plus;
    for (const auto& t : c.terms())
        if (t.sector == Sector::Plus) plus.emplace(t.K, t.poly);

    for (const auto& [K, p] : plus) {
        auto it = plus.find(K.negated());
        if (it == plus.end()) {
            rep.ok = false;
            rep.violations.push_back("missing partner class " + K.negated().str());
            continue;
        }
        MultiPoly lhs = it->second.scale_vars(negate);
        MultiPoly rhs = p.scaled(sign);
        if (lhs != rhs) {
            rep.ok = false;
            rep.violations.push_back("pair polynomial mismatch at class " + K.str());
        }
    }
    return rep;
}

std::vector<std::pair<CohClass, MultiPoly>> basic_classes(const DonaldsonSeries& s) {
    std::map<CohClass, MultiPoly> plus;
    DonaldsonSeries canon = s.canonicalized();
    for (const auto& t : canon.terms())
        if (t.sector == Sector::Plus && !t.poly.is_zero()) plus.emplace(t.K, t.poly);
    return {plus.begin(), plus.end()};
}

long min_genus(const DonaldsonSeries& s, const CohClass& surf) {
    if (!s.flags().claims_sst) throw validation_error("min_genus requires a simple-type-shape series");
    if (surf.is_zero()) throw validation_error("min_genus requires a nonzero class");
    long s2 = self_pairing(s.manifold().lattice, surf);
    if (s2 < 0) throw validation_error("min_genus requires surf^2 >= 0");
    long bound = s2;
    long best = 0;
    for (const auto& [K, p] : basic_classes(s))
        best = std::max(best, std::labs(evaluation(K, surf)));
    bound += best;
    // smallest g >= 0 with 2g - 2 >= bound
    long g = (bound + 2 + 1) / 2; // ceil((bound+2)/2), bound >= 0
    return std::max(g, 0L);
}

// ----------------------------------------------------------------- KM form

namespace {

long km_sign_exponent(const Lattice& L, const CohClass& K, const CohClass& w) {
    long e = pairing(L, K, w) + self_pairing(L, w);
    if ((((e % 2) + 2) % 2) != 0)
        throw inconsistency_error("(K.w + w^2)/2 is not an integer: class is not characteristic data");
    return e / 2;
}

} // namespace

std::vector<KmTerm> to_km_form(const DonaldsonSeries& s) {
    if (!s.flags().claims_sst || !s.has_constant_polys())
        throw validation_error("to_km_form requires a simple-type-shape series");
    std::vector<KmTerm> km;
    for (const auto& [K, p] : basic_classes(s)) {
        long e = km_sign_exponent(s.manifold().lattice, K, s.w());
        GaussianRational a = p.constant_value() * GaussianRational(2);
        if (e % 2 != 0) a = -a;
        km.push_back(KmTerm{K, a});
    }
    return km;
}

DonaldsonSeries from_km_form(const std::vector<KmTerm>& km, const ManifoldData& manifold,
                             const CohClass& w) {
    auto vars = series_vars(manifold.lattice.rank());
    std::vector<SeriesTerm> terms;
    for (const auto& t : km) {
        long e = km_sign_exponent(manifold.lattice, t.K, w);
        GaussianRational p = t.a * GaussianRational(mpq_class(1, 2));
        if (e % 2 != 0) p = -p;
        if (!p.is_zero())
            terms.push_back(SeriesTerm{Sector::Plus, t.K, MultiPoly::constant(vars, p)});
    }
    DonaldsonSeries s(manifold, w, OneCycleWord{}, std::move(terms));
    s.flags().claims_sst = true;
    s = symmetrize(s);
    s.flags().claims_characteristic = true;
    for (const auto& t : s.terms())
        if (!is_characteristic(manifold.lattice, t.K)) s.flags().claims_characteristic = false;
    return s;
}

// ------------------------------------------------------------- validation

DonaldsonSeries DonaldsonSeries::with_validated_flags() const {
    DonaldsonSeries s = canonicalized();
    SeriesFlags f;
    f.claims_sst = s.has_constant_polys();
    f.claims_characteristic = true;
    for (const auto& t : s.terms_)
        if (!is_characteristic(s.manifold_.lattice, t.K)) f.claims_characteristic = false;
    f.claims_symmetric = false;
    try {
        DonaldsonSeries sym = symmetrize(s);
        f.claims_symmetric = (sym == s);
    } catch (const validation_error&) {
        // parity-violating data cannot claim symmetry
    }
    s.flags_ = f;
    return s;
}

void DonaldsonSeries::check_claims() const {
    DonaldsonSeries v = with_validated_flags();
    if (flags_.claims_sst && !v.flags().claims_sst)
        throw inconsistency_error("claims_sst but a polynomial is non-constant");
    if (flags_.claims_characteristic && !v.flags().claims_characteristic)
        throw inconsistency_error("claims_characteristic but a class fails the characteristic test");
    if (flags_.claims_symmetric && !v.flags().claims_symmetric)
        throw inconsistency_error("claims_symmetric but the Minus sector is not the symmetrize image");
}

} // namespace donaldson
