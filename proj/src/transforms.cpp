#include "donaldson/transforms.hpp"

#include <algorithm>
#include <set>

#include "donaldson/errors.hpp"

namespace donaldson {

namespace {

void require_sst_shape(const DonaldsonSeries& s, const char* op) {
    if (!s.flags().claims_sst || !s.has_constant_polys())
        throw validation_error(std::string(op) + " requires a simple-type-shape series");
}

std::string fresh_exceptional_label(const std::vector<std::string>& labels) {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (!seen.count("E")) return "E";
    for (int k = 2;; ++k) {
        std::string cand = "E" + std::to_string(k);
        if (!seen.count(cand)) return cand;
    }
}

CohClass extend(const CohClass& k, long last) {
    std::vector<long> c = k.c;
    c.push_back(last);
    return CohClass(std::move(c));
}

} // namespace

DonaldsonSeries blow_up(const DonaldsonSeries& s, BlowupVariant variant) {
    require_sst_shape(s, "blow_up");
    const Lattice& L = s.manifold().lattice;
    std::size_t n = L.rank();

    std::vector<std::vector<long>> gram(n + 1, std::vector<long>(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram[i][j] = L.gram[i][j];
    gram[n][n] = -1;
    std::vector<std::string> labels = L.labels;
    labels.push_back(fresh_exceptional_label(labels));

    ManifoldData m = s.manifold();
    m.lattice = Lattice(std::move(gram), std::move(labels));

    CohClass w = extend(s.w(), variant == BlowupVariant::Sinh ? 1 : 0);

    auto vars = series_vars(n + 1);
    std::vector<std::size_t> where;
    for (std::size_t i = 0; i < n; ++i) where.push_back(i);
    where.push_back(n + 1); // lambda moves past the exceptional variable

    GaussianRational half(mpq_class(1, 2));
    std::vector<SeriesTerm> terms;
    for (const auto& t : s.terms()) {
        if (t.sector != Sector::Plus) continue;
        MultiPoly p = t.poly.with_vars(vars, where).scaled(half);
        MultiPoly pp = (variant == BlowupVariant::Sinh) ? p.negated() : p;
        // K+E evaluates on the exceptional basis vector as E^2 = -1, K-E as +1.
        terms.push_back(SeriesTerm{Sector::Plus, extend(t.K, -1), std::move(pp)});
        terms.push_back(SeriesTerm{Sector::Plus, extend(t.K, 1), std::move(p)});
    }

    DonaldsonSeries out(std::move(m), std::move(w), s.zword(), std::move(terms), s.flags());
    out = symmetrize(out);
    return out;
}

DonaldsonSeries blow_down_derivative(const DonaldsonSeries& s, std::size_t e_index) {
    const Lattice& L = s.manifold().lattice;
    std::size_t n = L.rank();
    if (e_index >= n) throw validation_error("exceptional index out of range");
    if (n < 2) throw validation_error("cannot blow down a rank-1 lattice");
    if (L.gram[e_index][e_index] != -1) throw validation_error("exceptional class must have square -1");
    for (std::size_t j = 0; j < n; ++j)
        if (j != e_index && L.gram[e_index][j] != 0)
            throw validation_error("exceptional class must be orthogonal to the rest of the lattice");

    std::vector<std::vector<long>> gram;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == e_index) continue;
        std::vector<long> row;
        for (std::size_t j = 0; j < n; ++j)
            if (j != e_index) row.push_back(L.gram[i][j]);
        gram.push_back(std::move(row));
        labels.push_back(L.labels[i]);
    }
    ManifoldData m = s.manifold();
    m.lattice = Lattice(std::move(gram), std::move(labels));

    auto restrict_class = [&](const CohClass& k) {
        std::vector<long> c;
        for (std::size_t i = 0; i < n; ++i)
            if (i != e_index) c.push_back(k[i]);
        return CohClass(std::move(c));
    };
    CohClass w = restrict_class(s.w());

    // Substitution dropping the exceptional variable: t_E -> 0.
    auto new_vars = series_vars(n - 1);
    auto old_vars = series_vars(n);
    std::vector<MultiPoly> subs;
    {
        std::size_t vi = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == e_index) {
                subs.push_back(MultiPoly(new_vars));
                continue;
            }
            subs.push_back(MultiPoly::variable(new_vars, vi++));
        }
        subs.push_back(MultiPoly::variable(new_vars, n - 1)); // lambda
    }

    std::vector<SeriesTerm> terms;
    for (const auto& t : s.terms()) {
        if (t.sector != Sector::Plus) continue;
        // d/dr at r=0 of p(t, r) e^{K.(tD + rE)}: the prefactor cross term
        // vanishes on the E-orthogonal sublattice, leaving K.E = K[e_index].
        MultiPoly contrib = t.poly.scaled(GaussianRational(t.K[e_index])) + t.poly.derivative(e_index);
        MultiPoly restricted = contrib.substitute(subs, new_vars);
        if (restricted.is_zero()) continue;
        terms.push_back(SeriesTerm{Sector::Plus, restrict_class(t.K), std::move(restricted)});
    }

    DonaldsonSeries out(std::move(m), std::move(w), s.zword(), std::move(terms), s.flags());
    return symmetrize(out);
}

DonaldsonSeries recolor(const DonaldsonSeries& s, const CohClass& w2) {
    require_sst_shape(s, "recolor");
    const Lattice& L = s.manifold().lattice;
    if (w2.rank() != L.rank()) throw validation_error("recolor class rank mismatch");

    long ww = self_pairing(L, s.w()) + self_pairing(L, w2);
    CohClass wsum = s.w() + w2;

    std::vector<SeriesTerm> terms;
    for (const auto& t : s.terms()) {
        if (t.sector != Sector::Plus) continue;
        long e = pairing(L, t.K, wsum) + ww;
        if ((((e % 2) + 2) % 2) != 0)
            throw inconsistency_error("recoloring exponent (K.(w+w') + w^2 + w'^2)/2 is not an integer");
        MultiPoly p = (e / 2) % 2 != 0 ? t.poly.negated() : t.poly;
        terms.push_back(SeriesTerm{Sector::Plus, t.K, std::move(p)});
    }

    DonaldsonSeries out(s.manifold(), w2, s.zword(), std::move(terms), s.flags());
    return symmetrize(out);
}

DonaldsonSeries connect_sum_s1s3(const DonaldsonSeries& s, const std::string& new_cycle) {
    if (std::find(s.zword().labels.begin(), s.zword().labels.end(), new_cycle) !=
        s.zword().labels.end())
        throw validation_error("duplicate 1-cycle label");
    ManifoldData m = s.manifold();
    m.b1 += 1;
    m.sst_manifold = false;
    OneCycleWord z = s.zword();
    z.labels.push_back(new_cycle);
    return DonaldsonSeries(std::move(m), s.w(), std::move(z), s.terms(), s.flags());
}

} // namespace donaldson
