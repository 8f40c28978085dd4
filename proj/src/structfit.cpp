#include "donaldson/structfit.hpp"

#include <algorithm>
#include <map>

#include "donaldson/box.hpp"
#include "donaldson/errors.hpp"
#include "donaldson/matrix.hpp"

namespace donaldson {

namespace {

bool gr_less(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re(), b.re());
    if (c != 0) return c < 0;
    return cmp(a.im(), b.im()) < 0;
}

} // namespace

std::vector<MultiPoly> fit_exponential_sum(const FitProblem& prob) {
    const TruncSeries& f = prob.samples;
    std::size_t idx = f.vars().size();
    for (std::size_t i = 0; i < f.vars().size(); ++i)
        if (f.vars()[i] == prob.fit_var) idx = i;
    if (idx == f.vars().size()) throw validation_error("fit variable not present in the series");

    int depth_cut;
    const Cutoffs& cut = f.cutoffs();
    if (static_cast<int>(idx) == f.lambda_index()) {
        depth_cut = cut.lambda;
    } else {
        std::size_t slot = idx;
        if (f.lambda_index() >= 0 && static_cast<int>(idx) > f.lambda_index()) --slot;
        depth_cut = cut.per_var.empty() ? cut.total : std::min(cut.total, cut.per_var[slot]);
    }
    const std::size_t rows = static_cast<std::size_t>(depth_cut) + 1;

    std::size_t ncols = 0;
    for (const auto& [mu, n] : prob.eigenvalues) ncols += static_cast<std::size_t>(n);
    if (rows < ncols) throw validation_error("sample depth below total eigenvalue multiplicity");

    std::vector<MultiPoly> d;
    for (std::size_t k = 0; k < rows; ++k)
        d.push_back(f.coefficient_of(idx, static_cast<int>(k)));

    Matrix v = confluent_vandermonde(prob.eigenvalues, rows);
    Matrix vsq(ncols, ncols);
    for (std::size_t r = 0; r < ncols; ++r)
        for (std::size_t c = 0; c < ncols; ++c) vsq.at(r, c) = v.at(r, c);
    Matrix minv = vsq.inverse();

    std::vector<MultiPoly> x;
    for (std::size_t c = 0; c < ncols; ++c) {
        MultiPoly acc(f.vars());
        for (std::size_t k = 0; k < ncols; ++k) {
            if (minv.at(c, k).is_zero()) continue;
            acc += d[k].scaled(minv.at(c, k));
        }
        x.push_back(std::move(acc));
    }

    // Overdetermined residual: every remaining sampled row must match.
    for (std::size_t k = ncols; k < rows; ++k) {
        MultiPoly pred(f.vars());
        for (std::size_t c = 0; c < ncols; ++c) {
            if (v.at(k, c).is_zero()) continue;
            pred += x[c].scaled(v.at(k, c));
        }
        if (pred != d[k])
            throw inconsistency_error("exponential-sum fit inconsistent at coefficient index " +
                                      std::to_string(k));
    }

    std::vector<MultiPoly> out;
    std::size_t col = 0;
    for (const auto& [mu, n] : prob.eigenvalues) {
        MultiPoly p(f.vars());
        for (int m = 0; m < n; ++m, ++col) {
            ExpVec e(f.vars().size(), 0);
            e[idx] = m;
            p += x[col] * MultiPoly::monomial(f.vars(), e, GaussianRational(1));
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<std::pair<GaussianRational, int>> detect_frequencies(const TruncSeries& f, long bound) {
    if (f.vars().size() != 1) throw validation_error("frequency detection expects one variable");
    if (bound < 0) throw validation_error("negative frequency bound");
    const Cutoffs& cut = f.cutoffs();
    int depth_cut = cut.per_var.empty() ? cut.total : std::min(cut.total, cut.per_var[0]);
    const std::size_t nsamp = static_cast<std::size_t>(depth_cut) + 1;

    // d_k = k! * c_k are the samples of the exponential sum at the shift
    // operator level.
    std::vector<GaussianRational> d;
    for (std::size_t k = 0; k < nsamp; ++k) {
        ExpVec e{static_cast<int>(k)};
        GaussianRational c(GaussianRational(0));
        auto it = f.terms().find(e);
        if (it != f.terms().end()) c = it->second;
        d.push_back(c * GaussianRational(factorial_q(static_cast<int>(k))));
    }

    // Exact Berlekamp-Massey for the minimal linear recurrence.
    std::vector<GaussianRational> C{GaussianRational(1)}, B{GaussianRational(1)};
    std::size_t L = 0, m = 1;
    GaussianRational b(1);
    for (std::size_t n = 0; n < nsamp; ++n) {
        GaussianRational delta = d[n];
        for (std::size_t i = 1; i <= L && i < C.size(); ++i)
            if (!C[i].is_zero()) delta += C[i] * d[n - i];
        if (delta.is_zero()) {
            ++m;
        } else if (2 * L <= n) {
            std::vector<GaussianRational> T = C;
            GaussianRational coef = delta / b;
            if (C.size() < B.size() + m) C.resize(B.size() + m, GaussianRational(0));
            for (std::size_t i = 0; i < B.size(); ++i) C[i + m] -= coef * B[i];
            L = n + 1 - L;
            B = std::move(T);
            b = delta;
            m = 1;
        } else {
            GaussianRational coef = delta / b;
            if (C.size() < B.size() + m) C.resize(B.size() + m, GaussianRational(0));
            for (std::size_t i = 0; i < B.size(); ++i) C[i + m] -= coef * B[i];
            ++m;
        }
    }
    if (2 * L > nsamp) throw validation_error("insufficient depth to determine the recurrence");
    if (L == 0) return {};

    // Characteristic polynomial x^L + C[1] x^(L-1) + ... + C[L], stored
    // low-degree-first.
    std::vector<GaussianRational> chi(L + 1, GaussianRational(0));
    chi[L] = GaussianRational(1);
    for (std::size_t i = 1; i <= L; ++i) chi[L - i] = (i < C.size()) ? C[i] : GaussianRational(0);

    auto eval = [](const std::vector<GaussianRational>& p, const GaussianRational& x) {
        GaussianRational acc(0);
        for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
        return acc;
    };
    auto deflate = [](std::vector<GaussianRational>& p, const GaussianRational& root) {
        std::vector<GaussianRational> q(p.size() - 1, GaussianRational(0));
        GaussianRational carry(0);
        for (std::size_t i = p.size(); i-- > 1;) {
            carry = p[i] + carry * root;
            q[i - 1] = carry;
        }
        p = std::move(q);
    };

    std::vector<std::pair<GaussianRational, int>> found;
    for (long re = -bound; re <= bound; ++re) {
        for (long im = -bound; im <= bound; ++im) {
            GaussianRational mu{mpq_class(re), mpq_class(im)};
            int mult = 0;
            while (chi.size() > 1 && eval(chi, mu).is_zero()) {
                deflate(chi, mu);
                ++mult;
            }
            if (mult > 0) found.emplace_back(mu, mult);
        }
    }
    if (chi.size() > 1)
        throw inconsistency_error("recurrence root outside the Gaussian-integer grid");
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return gr_less(a.first, b.first); });
    return found;
}

// ----------------------------------------------------------------- recovery

DonaldsonSeries recover_structure(const TruncSeries& g, const ManifoldData& manifold,
                                  const CohClass& w, const OneCycleWord& zword,
                                  const RecoverOptions& opts) {
    const std::size_t n = manifold.lattice.rank();
    if (g.vars() != series_vars(n))
        throw validation_error("series variables do not match the lattice rank");

    std::vector<long> bounds = opts.bounds;
    if (bounds.size() == 1 && n > 1) bounds.assign(n, bounds[0]);
    if (bounds.size() != n) throw validation_error("one frequency bound needed per direction");
    for (long bd : bounds)
        if (bd < 0) throw validation_error("negative frequency bound");
    const int D = opts.max_poly_degree;
    const int Lmax = opts.max_lambda_degree;
    if (D < 0 || Lmax < 0) throw validation_error("negative degree bound");

    std::vector<int> dims(n + 1, 0);
    for (std::size_t j = 0; j < n; ++j)
        dims[j] = static_cast<int>(2 * bounds[j] + 1) * (D + 1);
    dims[n] = 2 * (Lmax + 1);

    // The whole working box must lie inside the supplied truncation region.
    {
        ExpVec corner(n + 1, 0);
        for (std::size_t j = 0; j <= n; ++j) corner[j] = dims[j] - 1;
        if (!g.cutoffs().admits(corner, static_cast<int>(n)))
            throw validation_error("truncated series not deep enough for the requested bounds");
    }

    if (g.is_zero()) {
        DonaldsonSeries out(manifold, w, zword, {});
        return out.with_validated_flags();
    }

    BoxSeries work(g.vars(), dims);
    for (const auto& [e, c] : g.terms()) {
        bool inside = true;
        for (std::size_t i = 0; i <= n; ++i)
            if (e[i] >= dims[i]) inside = false;
        if (inside) work.at(e) = c;
    }

    // Sector separation along lambda: eigenvalues +2 (Plus) and -2 (Minus),
    // each with multiplicity Lmax+1.
    {
        std::vector<std::pair<GaussianRational, int>> eigs{{GaussianRational(2), Lmax + 1},
                                                           {GaussianRational(-2), Lmax + 1}};
        Matrix v = confluent_vandermonde(eigs, static_cast<std::size_t>(dims[n]));
        work = box_axis_transform(work, n, v.inverse());
    }
    BoxSeries plus_box = box_slice_axis(work, n, 0, Lmax + 1);
    BoxSeries minus_box = box_slice_axis(work, n, Lmax + 1, Lmax + 1);

    // Divide out the quadratic prefactors exp(+-Q/2) (exact on the
    // downward-closed box).
    const auto& gram = manifold.lattice.gram;
    for (std::size_t j = 0; j < n; ++j) {
        if (gram[j][j] == 0) continue;
        ExpVec step(n + 1, 0);
        step[j] = 2;
        GaussianRational c(mpq_class(gram[j][j], 2));
        plus_box = box_mul_exp_monomial(plus_box, step, -c);
        minus_box = box_mul_exp_monomial(minus_box, step, c);
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            if (gram[j][k] == 0) continue;
            ExpVec step(n + 1, 0);
            step[j] = 1;
            step[k] = 1;
            GaussianRational c(gram[j][k]);
            plus_box = box_mul_exp_monomial(plus_box, step, -c);
            minus_box = box_mul_exp_monomial(minus_box, step, c);
        }
    }

    // Per-direction inverse confluent Vandermonde over the full frequency
    // grid: real integers for Plus, imaginary for Minus.
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::pair<GaussianRational, int>> ep, em;
        for (long r = -bounds[j]; r <= bounds[j]; ++r) {
            ep.emplace_back(GaussianRational(r), D + 1);
            em.emplace_back(GaussianRational(r) * GaussianRational::i(), D + 1);
        }
        std::size_t rows = static_cast<std::size_t>(dims[j]);
        plus_box = box_axis_transform(plus_box, j, confluent_vandermonde(ep, rows).inverse());
        minus_box = box_axis_transform(minus_box, j, confluent_vandermonde(em, rows).inverse());
    }

    // The frequency tuple is the class itself: mu_j = K.e_j in evaluation
    // coordinates (real for Plus, the same integers behind an i for Minus).
    auto vars = series_vars(n);
    std::map<std::pair<int, CohClass>, MultiPoly> polys;
    auto harvest = [&](const BoxSeries& box, bool plus) {
        ExpVec e;
        std::vector<long> mu(n);
        for (std::size_t f = 0; f < box.a.size(); ++f) {
            if (box.a[f].is_zero()) continue;
            box.decode(f, e);
            ExpVec mono(n + 1, 0);
            for (std::size_t j = 0; j < n; ++j) {
                long col = e[j];
                mu[j] = col / (D + 1) - bounds[j];
                mono[j] = static_cast<int>(col % (D + 1));
            }
            mono[n] = e[n];
            CohClass K(mu);
            auto key = std::make_pair(plus ? 0 : 1, K);
            auto it = polys.find(key);
            if (it == polys.end()) it = polys.emplace(key, MultiPoly(vars)).first;
            it->second.add_term(mono, box.a[f]);
        }
    };
    harvest(plus_box, true);
    harvest(minus_box, false);

    std::vector<SeriesTerm> terms;
    for (auto& [key, p] : polys) {
        if (p.is_zero()) continue;
        terms.push_back(SeriesTerm{key.first == 0 ? Sector::Plus : Sector::Minus, key.second,
                                   std::move(p)});
    }
    DonaldsonSeries out(manifold, w, zword, std::move(terms));
    out = out.with_validated_flags();

    // Mandatory exactness check: re-expansion must reproduce the input
    // everywhere inside its truncation region.
    if (expand(out, g.cutoffs()) != g)
        throw inconsistency_error("reconstruction residual nonzero");
    return out;
}

} // namespace donaldson
