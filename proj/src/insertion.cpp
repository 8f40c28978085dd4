#include "donaldson/insertion.hpp"

#include <algorithm>

#include "donaldson/errors.hpp"

namespace donaldson {

namespace {

MultiPoly directional_derivative(const MultiPoly& p, const CohClass& v) {
    MultiPoly out(p.vars());
    for (std::size_t j = 0; j < v.rank(); ++j) {
        if (v[j] == 0) continue;
        out += p.derivative(j).scaled(GaussianRational(v[j]));
    }
    return out;
}

// One application of (insert_point - c) to a single term's polynomial.
// Insertions act diagonally on (sector, K), so shifted factors are exact
// termwise.
MultiPoly point_shift_once(const SeriesTerm& t, std::size_t lam, const GaussianRational& c) {
    GaussianRational eig = GaussianRational(t.sector == Sector::Plus ? 2 : -2) - c;
    MultiPoly out = t.poly.scaled(eig);
    out += t.poly.derivative(lam);
    return out;
}

// One application of (insert_surface_v - c); Q is the precomputed linear form
// Q(t., v), kv the evaluation K.v of this term's class.
MultiPoly surface_shift_once(const SeriesTerm& t, const MultiPoly& Q, long kv, bool reduced,
                             const CohClass& v, const GaussianRational& c) {
    MultiPoly mult(t.poly.vars());
    if (t.sector == Sector::Plus) {
        if (!reduced) mult += Q;
        mult += MultiPoly::constant(t.poly.vars(), GaussianRational(kv) - c);
    } else {
        if (!reduced) mult -= Q;
        mult += MultiPoly::constant(t.poly.vars(), GaussianRational(kv) * GaussianRational::i() - c);
    }
    return mult * t.poly + directional_derivative(t.poly, v);
}

MultiPoly q_linear_form(const Lattice& L, const std::vector<std::string>& vars, const CohClass& v) {
    MultiPoly Q(vars);
    for (std::size_t j = 0; j < L.rank(); ++j) {
        long ev = pairing(L, L.basis_vector(j), v);
        if (ev == 0) continue;
        ExpVec e(vars.size(), 0);
        e[j] = 1;
        Q.add_term(e, GaussianRational(ev));
    }
    return Q;
}

int max_poly_degree(const DonaldsonSeries& s) {
    int d = 0;
    for (const auto& t : s.terms()) d = std::max(d, t.poly.total_degree());
    return d;
}

} // namespace

DonaldsonSeries insert_point(const DonaldsonSeries& s) {
    std::size_t lam = s.rank();
    std::vector<SeriesTerm> out;
    for (const auto& t : s.terms())
        out.push_back(SeriesTerm{t.sector, t.K, point_shift_once(t, lam, GaussianRational(0))});
    return s.with_terms(std::move(out));
}

DonaldsonSeries insert_surface(const DonaldsonSeries& s, const CohClass& v, bool reduced) {
    const Lattice& L = s.manifold().lattice;
    if (v.rank() != L.rank()) throw validation_error("surface class rank mismatch");
    MultiPoly Q = q_linear_form(L, s.poly_vars(), v);
    std::vector<SeriesTerm> out;
    for (const auto& t : s.terms()) {
        long kv = evaluation(t.K, v);
        out.push_back(
            SeriesTerm{t.sector, t.K, surface_shift_once(t, Q, kv, reduced, v, GaussianRational(0))});
    }
    return s.with_terms(std::move(out));
}

int finite_type_order(const DonaldsonSeries& s) {
    DonaldsonSeries cur = s.canonicalized();
    int expected = cur.is_zero() ? 0 : 1 + std::max(cur.max_lambda_degree(), 0);
    std::size_t lam = cur.rank();
    int n = 0;
    while (!cur.is_zero()) {
        // Literal (insert_point^2 - 4 id), applied termwise.
        std::vector<SeriesTerm> out;
        for (const auto& t : cur.terms()) {
            SeriesTerm once{t.sector, t.K, point_shift_once(t, lam, GaussianRational(0))};
            MultiPoly p = point_shift_once(once, lam, GaussianRational(0));
            p -= t.poly.scaled(GaussianRational(4));
            out.push_back(SeriesTerm{t.sector, t.K, std::move(p)});
        }
        cur = cur.with_terms(std::move(out));
        ++n;
        if (n > expected) break;
    }
    if (n != expected)
        throw inconsistency_error("finite-type order disagrees with lambda-degree shortcut");
    return n;
}

bool is_sst_shape(const DonaldsonSeries& s) {
    if (finite_type_order(s) > 1) return false;
    // Nonempty 1-cycle words are only compatible when the underlying manifold
    // is already known not to be of strong simple type (b1 bookkeeping).
    return s.zword().labels.empty() || !s.manifold().sst_manifold;
}

DonaldsonSeries apply_factor(const DonaldsonSeries& s, const EvenFactor& f) {
    DonaldsonSeries cur = s;
    if (const auto* ps = std::get_if<PointShift>(&f)) {
        if (ps->power < 0) throw validation_error("negative factor power");
        std::size_t lam = cur.rank();
        for (int k = 0; k < ps->power; ++k) {
            std::vector<SeriesTerm> out;
            for (const auto& t : cur.terms())
                out.push_back(SeriesTerm{t.sector, t.K, point_shift_once(t, lam, ps->c)});
            cur = cur.with_terms(std::move(out));
        }
        return cur;
    }
    const auto& sh = std::get<SurfaceShift>(f);
    if (sh.power < 0) throw validation_error("negative factor power");
    const Lattice& L = cur.manifold().lattice;
    if (sh.v.rank() != L.rank()) throw validation_error("surface class rank mismatch");
    MultiPoly Q = q_linear_form(L, cur.poly_vars(), sh.v);
    for (int k = 0; k < sh.power; ++k) {
        std::vector<SeriesTerm> out;
        for (const auto& t : cur.terms()) {
            long kv = evaluation(t.K, sh.v);
            out.push_back(
                SeriesTerm{t.sector, t.K, surface_shift_once(t, Q, kv, sh.reduced, sh.v, sh.c)});
        }
        cur = cur.with_terms(std::move(out));
    }
    return cur;
}

DonaldsonSeries apply_even(const DonaldsonSeries& s, const EvenElement& e) {
    if (e.scale.is_zero()) throw validation_error("even element scale must be nonzero");
    DonaldsonSeries cur = s;
    for (const auto& f : e.factors) cur = apply_factor(cur, f);
    return cur.scaled(e.scale);
}

EvenElement isolating_element(const DonaldsonSeries& s, const CohClass& K) {
    DonaldsonSeries cur = s.canonicalized();
    auto basics = basic_classes(cur);
    bool found = false;
    for (const auto& [bk, bp] : basics)
        if (bk == K) found = true;
    if (!found) throw validation_error("class is not a basic class of the series");

    const Lattice& L = cur.manifold().lattice;
    const int N = max_poly_degree(cur) + 1;

    EvenElement e;
    auto push = [&](EvenFactor f) {
        e.factors.push_back(f);
        cur = apply_factor(cur, f);
    };

    // Kill the Minus sector: (x + 2) acts there as d/d(lambda), nilpotent;
    // on the Plus sector it is 4 + d/d(lambda), invertible.
    push(PointShift{GaussianRational(-2), N});

    // Kill the other Plus classes with reduced shifts (D_j - K'.e_j)^N along
    // a coordinate where K' and K evaluate differently.
    for (const auto& [other, op] : basics) {
        if (other == K) continue;
        std::size_t j = L.rank();
        for (std::size_t i = 0; i < L.rank(); ++i) {
            if (other[i] != K[i]) {
                j = i;
                break;
            }
        }
        if (j == L.rank())
            throw inconsistency_error("distinct basic classes evaluate equally on every basis vector");
        push(SurfaceShift{L.basis_vector(j), GaussianRational(other[j]), true, N});
    }

    // Only the target class survives; reduce its polynomial to a constant by
    // differentiating away the graded-lex-maximal monomial. (D_j - K.e_j) acts
    // on the target as d/d(t_j) and (x - 2) as d/d(lambda).
    const MultiPoly* rem = nullptr;
    for (const auto& t : cur.terms())
        if (t.sector == Sector::Plus && t.K == K) rem = &t.poly;
    if (rem == nullptr || rem->is_zero())
        throw inconsistency_error("target class vanished during isolation");
    ExpVec top = rem->terms().rbegin()->first;
    for (std::size_t j = 0; j < L.rank(); ++j) {
        if (top[j] == 0) continue;
        push(SurfaceShift{L.basis_vector(j), GaussianRational(K[j]), true, top[j]});
    }
    if (top[L.rank()] > 0) push(PointShift{GaussianRational(2), top[L.rank()]});

    if (cur.terms().size() != 1 || cur.terms()[0].sector != Sector::Plus ||
        cur.terms()[0].K != K || !cur.terms()[0].poly.is_constant())
        throw inconsistency_error("isolation did not reduce to a single constant term");
    e.scale = cur.terms()[0].poly.constant_value().inverse();
    return e;
}

} // namespace donaldson
