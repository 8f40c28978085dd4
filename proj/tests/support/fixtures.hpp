#pragma once

#include <random>
#include <set>
#include <vector>

#include "donaldson/series.hpp"

namespace donaldson::testsupport {

/// Diagonal +-1 lattice with labels e1..en; b1 = 0, b+ = 3 keeps d0 integral
/// for any integer w.
inline ManifoldData random_manifold(std::mt19937& rng, int rank) {
    std::vector<std::vector<long>> gram(rank, std::vector<long>(rank, 0));
    std::vector<std::string> labels;
    std::uniform_int_distribution<int> sign(0, 1);
    for (int i = 0; i < rank; ++i) {
        gram[i][i] = sign(rng) ? 1 : -1;
        labels.push_back("e" + std::to_string(i + 1));
    }
    ManifoldData m;
    m.lattice = Lattice(std::move(gram), std::move(labels));
    m.b1 = 0;
    m.bplus = 3;
    m.name = "random";
    return m;
}

/// Odd coordinates make every class characteristic on a diagonal +-1 gram.
/// coord_max[j] (1 or 3) caps |K_j| per direction.
inline CohClass random_class(std::mt19937& rng, const std::vector<long>& coord_max) {
    std::vector<long> c;
    std::uniform_int_distribution<int> pick(0, 3);
    for (long m : coord_max) {
        long v = (m >= 3 && pick(rng) >= 2) ? 3 : 1;
        c.push_back(pick(rng) % 2 ? v : -v);
    }
    return CohClass(std::move(c));
}

inline GaussianRational random_coeff(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    int n = num(rng);
    if (n == 0) n = 1;
    return GaussianRational(mpq_class(n, den(rng)));
}

inline MultiPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int tdeg,
                             int ldeg) {
    std::size_t n = vars.size() - 1;
    std::uniform_int_distribution<int> nterms(1, 5);
    std::uniform_int_distribution<int> lexp(0, ldeg);
    std::uniform_int_distribution<int> texp(0, tdeg);
    MultiPoly p(vars);
    int tries = 0;
    while (p.is_zero() || tries == 0) {
        int count = nterms(rng);
        for (int k = 0; k < count; ++k) {
            ExpVec e(vars.size(), 0);
            int total = 0;
            for (std::size_t j = 0; j < n; ++j) {
                int x = texp(rng);
                if (total + x > tdeg) x = 0;
                e[j] = x;
                total += x;
            }
            e[n] = lexp(rng);
            p.add_term(e, random_coeff(rng));
        }
        if (++tries > 50) break;
    }
    return p;
}

/// Pair-closed, symmetrized random fixture. Plus classes come in +-K pairs
/// with p_{-K}(t, l) = (-1)^(d0-d) p_K(-t, l); the Minus sector is the
/// symmetrize image. coord_max defaults to 3 on every direction.
inline DonaldsonSeries random_fixture(std::mt19937& rng, int rank, int npairs, int tdeg, int ldeg,
                                      std::vector<long> coord_max = {}) {
    ManifoldData m = random_manifold(rng, rank);
    if (coord_max.empty()) coord_max.assign(rank, 3);
    CohClass w = m.lattice.basis_vector(0);
    auto vars = series_vars(rank);

    std::set<CohClass> used;
    std::vector<CohClass> reps;
    int guard = 0;
    while (static_cast<int>(reps.size()) < npairs && guard++ < 200) {
        CohClass K = random_class(rng, coord_max);
        if (used.count(K) || used.count(K.negated())) continue;
        used.insert(K);
        used.insert(K.negated());
        reps.push_back(K);
    }

    int d0md = d0_minus_d_mod4(m, w, 0);
    GaussianRational sign = (d0md % 2 == 0) ? GaussianRational(1) : GaussianRational(-1);
    std::vector<GaussianRational> negate_t(rank + 1, GaussianRational(-1));
    negate_t.back() = GaussianRational(1);

    std::vector<SeriesTerm> terms;
    for (const auto& K : reps) {
        MultiPoly p = random_poly(rng, vars, tdeg, ldeg);
        MultiPoly pn = p.scale_vars(negate_t).scaled(sign);
        terms.push_back(SeriesTerm{Sector::Plus, K, p});
        terms.push_back(SeriesTerm{Sector::Plus, K.negated(), pn});
    }
    DonaldsonSeries s(std::move(m), std::move(w), OneCycleWord{}, std::move(terms));
    return symmetrize(s).with_validated_flags();
}

inline DonaldsonSeries random_sst_fixture(std::mt19937& rng, int rank, int npairs) {
    return random_fixture(rng, rank, npairs, 0, 0);
}

} // namespace donaldson::testsupport
