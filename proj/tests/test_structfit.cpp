#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "donaldson/catalog.hpp"
#include "donaldson/errors.hpp"
#include "donaldson/structfit.hpp"
#include "support/fixtures.hpp"

using namespace donaldson;
using donaldson::testsupport::random_fixture;

namespace {

GaussianRational q(long n, long d = 1) { return GaussianRational(mpq_class(n, d)); }

// Single-variable truncated series from a coefficient list.
TruncSeries one_var(const std::vector<GaussianRational>& coeffs, int lam = 0) {
    TruncSeries f({"s"}, Cutoffs::total_only(static_cast<int>(coeffs.size()) - 1, lam));
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        f.add_term(ExpVec{static_cast<int>(k)}, coeffs[k]);
    return f;
}

// e^{mu s} as a coefficient list of the given depth.
std::vector<GaussianRational> exp_coeffs(const GaussianRational& mu, int depth) {
    std::vector<GaussianRational> c;
    GaussianRational pw(1);
    for (int k = 0; k <= depth; ++k) {
        c.push_back(pw / GaussianRational(factorial_q(k)));
        pw = pw * mu;
    }
    return c;
}

std::vector<GaussianRational> add_lists(std::vector<GaussianRational> a,
                                        const std::vector<GaussianRational>& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}

// Restrict a rank-2 structured series to the single direction sigma and drop
// the (trivial) lambda slot.
TruncSeries line_restriction(const DonaldsonSeries& s, const CohClass& sigma, int depth) {
    TruncSeries two_var = expand_directions(s, {sigma}, {"s"}, Cutoffs::total_only(depth, 0));
    TruncSeries out({"s"}, Cutoffs::total_only(depth, 0));
    for (const auto& [e, c] : two_var.terms()) out.add_term(ExpVec{e[0]}, c);
    return out;
}

} // namespace

TEST_CASE("exponential sum fitting") {
    // e^{2s} + e^{-2s} against the spectrum {-2, 0, 2} with double multiplicity
    TruncSeries f = one_var(add_lists(exp_coeffs(q(2), 5), exp_coeffs(q(-2), 5)));
    FitProblem prob{f, "s", {{q(-2), 2}, {q(0), 2}, {q(2), 2}}};
    auto p = fit_exponential_sum(prob);
    REQUIRE(p.size() == 3);
    CHECK(p[0] == MultiPoly::constant({"s"}, q(1)));
    CHECK(p[1].is_zero());
    CHECK(p[2] == MultiPoly::constant({"s"}, q(1)));

    // confluent: s * e^{2i s} needs the s-linear polynomial at 2i
    GaussianRational twoi = q(2) * GaussianRational::i();
    std::vector<GaussianRational> sh{q(0)};
    for (const auto& c : exp_coeffs(twoi, 2)) sh.push_back(c);
    auto ps = fit_exponential_sum(FitProblem{one_var(sh), "s", {{twoi, 2}}});
    REQUIRE(ps.size() == 1);
    CHECK(ps[0] == MultiPoly::variable({"s"}, 0));

    // wrong spectrum: e^{s} is not constant, first failing row is s^1
    CHECK_THROWS_AS(
        fit_exponential_sum(FitProblem{one_var(exp_coeffs(q(1), 3)), "s", {{q(0), 1}}}),
        inconsistency_error);

    CHECK_THROWS_AS(fit_exponential_sum(FitProblem{f, "u", {{q(0), 1}}}), validation_error);
    CHECK_THROWS_AS(
        fit_exponential_sum(FitProblem{one_var({q(1), q(1)}), "s", {{q(0), 3}}}),
        validation_error);
}

TEST_CASE("frequency detection") {
    TruncSeries f = one_var(add_lists(exp_coeffs(q(2), 5), exp_coeffs(q(-2), 5)));
    auto freqs = detect_frequencies(f, 3);
    REQUIRE(freqs.size() == 2);
    CHECK(freqs[0] == std::make_pair(q(-2), 1));
    CHECK(freqs[1] == std::make_pair(q(2), 1));

    // a polynomial is a confluent frequency at zero
    auto poly = detect_frequencies(one_var({q(1), q(1), q(0), q(0), q(0)}), 1);
    REQUIRE(poly.size() == 1);
    CHECK(poly[0] == std::make_pair(q(0), 2));

    CHECK(detect_frequencies(one_var({q(0), q(0), q(0)}), 1).empty());

    CHECK_THROWS_AS(detect_frequencies(one_var(exp_coeffs(q(2), 5)), 1), inconsistency_error);
    CHECK_THROWS_AS(
        detect_frequencies(one_var(add_lists(exp_coeffs(q(2), 2), exp_coeffs(q(-2), 2))), 3),
        validation_error);
}

TEST_CASE("frequency detection is odd under s -> -s") {
    std::mt19937 rng(83);
    std::uniform_int_distribution<long> pick(-2, 2);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<GaussianRational> coeffs(9, q(0));
        for (int j = 0; j < 3; ++j) {
            GaussianRational mu = q(pick(rng)) + q(pick(rng)) * GaussianRational::i();
            coeffs = add_lists(coeffs, exp_coeffs(mu, 8));
        }
        std::vector<GaussianRational> flipped = coeffs;
        for (std::size_t k = 1; k < flipped.size(); k += 2) flipped[k] = flipped[k] * q(-1);

        auto a = detect_frequencies(one_var(coeffs), 3);
        auto b = detect_frequencies(one_var(flipped), 3);
        REQUIRE(a.size() == b.size());
        for (auto& [mu, n] : a) mu = mu * q(-1);
        std::sort(a.begin(), a.end(), [](const auto& x, const auto& y) {
            return std::make_pair(x.first.str(), x.second) < std::make_pair(y.first.str(), y.second);
        });
        std::sort(b.begin(), b.end(), [](const auto& x, const auto& y) {
            return std::make_pair(x.first.str(), x.second) < std::make_pair(y.first.str(), y.second);
        });
        CHECK(a == b);
    }
}

TEST_CASE("frequencies of a structured series along a null direction") {
    // sigma = (1,1) has sigma^2 = 0 on diag(1,-1), so the restriction is a pure
    // exponential sum with frequencies K.sigma and i K.sigma.
    DonaldsonSeries two = catalog_series("two-class");
    TruncSeries f = line_restriction(two, CohClass({1, 1}), 8);
    auto freqs = detect_frequencies(f, 2);
    REQUIRE(freqs.size() == 4);
    CHECK(freqs[0].first == q(-2));
    CHECK(freqs[1].first == q(-2) * GaussianRational::i());
    CHECK(freqs[2].first == q(2) * GaussianRational::i());
    CHECK(freqs[3].first == q(2));
    for (const auto& [mu, n] : freqs) CHECK(n == 1);
}

TEST_CASE("structure recovery round trip") {
    DonaldsonSeries two = catalog_series("two-class");
    Cutoffs cut = Cutoffs::total_only(6, 2);
    TruncSeries g = expand(two, cut);

    RecoverOptions opts;
    opts.bounds = {1};
    opts.max_poly_degree = 0;
    opts.max_lambda_degree = 0;
    DonaldsonSeries r = recover_structure(g, two.manifold(), two.w(), two.zword(), opts);
    CHECK(r.canonicalized() == two.canonicalized());

    TruncSeries none(series_vars(2), cut);
    CHECK(recover_structure(none, two.manifold(), two.w(), two.zword(), opts).is_zero());

    // planted non-integer frequency 3/2 must be rejected, not approximated
    MultiPoly half_t(series_vars(2));
    half_t.add_term(ExpVec{1, 0, 0}, q(1, 2));
    TruncSeries planted = g * TruncSeries::exp(half_t, cut);
    CHECK_THROWS_AS(recover_structure(planted, two.manifold(), two.w(), two.zword(), opts),
                    inconsistency_error);

    // too shallow an expansion for the requested bounds
    TruncSeries shallow = expand(two, Cutoffs::total_only(2, 1));
    CHECK_THROWS_AS(recover_structure(shallow, two.manifold(), two.w(), two.zword(), opts),
                    validation_error);

    CHECK_THROWS_AS(recover_structure(g, two.manifold(), two.w(), two.zword(),
                                      RecoverOptions{{1, 1, 1}, 0, 0}),
                    validation_error);
}

TEST_CASE("structure recovery on randomized fixtures") {
    std::mt19937 rng(89);
    for (int k = 0; k < 5; ++k) {
        int rank = 2 + k % 2;
        DonaldsonSeries s =
            random_fixture(rng, rank, 1 + k % 2, 1, 1, std::vector<long>(rank, 1));
        Cutoffs cut = Cutoffs::box(std::vector<int>(rank, 5), 3);
        TruncSeries g = expand(s, cut);
        RecoverOptions opts;
        opts.bounds = {1};
        opts.max_poly_degree = 1;
        opts.max_lambda_degree = 1;
        DonaldsonSeries r = recover_structure(g, s.manifold(), s.w(), s.zword(), opts);
        CHECK(r.canonicalized() == s.canonicalized());
    }
}
