#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "donaldson/catalog.hpp"
#include "donaldson/errors.hpp"
#include "donaldson/transforms.hpp"
#include "support/fixtures.hpp"

using namespace donaldson;
using donaldson::testsupport::random_sst_fixture;

namespace {

GaussianRational q(long n, long d = 1) { return GaussianRational(mpq_class(n, d)); }

// Embed a truncated series over (t1..tn, lambda) into (t1..t(n+1), lambda)
// with zero exponent on the new last t variable.
TruncSeries embed_extra_var(const TruncSeries& s, const Cutoffs& cut) {
    std::size_t n = s.vars().size() - 1;
    TruncSeries out(series_vars(n + 1), cut);
    for (const auto& [e, c] : s.terms()) {
        ExpVec ee(e.begin(), e.begin() + n);
        ee.push_back(0);
        ee.push_back(e[n]);
        out.add_term(ee, c);
    }
    return out;
}

// exp(-tE^2/2) * cosh(tE) truncated, over (t1..t(n+1), lambda) with tE last.
TruncSeries blowup_factor(std::size_t n, const Cutoffs& cut, bool sinh_variant) {
    auto vars = series_vars(n + 1);
    ExpVec e(n + 2, 0);
    TruncSeries hyp(vars, cut);
    for (int k = 0; 2 * k + (sinh_variant ? 1 : 0) <= cut.total; ++k) {
        int p = 2 * k + (sinh_variant ? 1 : 0);
        e[n] = p;
        hyp.add_term(e, GaussianRational(mpq_class(1) / factorial_q(p)));
    }
    e[n] = 2;
    MultiPoly quad = MultiPoly::monomial(vars, e, q(-1, 2));
    return TruncSeries::exp(quad, cut) * hyp;
}

} // namespace

TEST_CASE("cosh blow-up structure") {
    DonaldsonSeries two = catalog_series("two-class");
    DonaldsonSeries b = blow_up(two, BlowupVariant::Cosh);

    CHECK(b.manifold().lattice.rank() == 3);
    CHECK(b.manifold().lattice.labels[2] == "E");
    CHECK(b.manifold().lattice.gram[2][2] == -1);
    CHECK(b.manifold().lattice.gram[0][2] == 0);
    CHECK(b.w() == CohClass({1, 0, 0}));

    auto bc = basic_classes(b);
    std::set<CohClass> got;
    for (const auto& [K, p] : bc) {
        got.insert(K);
        CHECK(p.constant_value() == (K[0] > 0 ? q(1, 2) : q(-1, 2)));
    }
    // K+E evaluates as -1 on the exceptional direction (E^2 = -1), K-E as +1
    std::set<CohClass> want{CohClass({1, 1, -1}), CohClass({1, 1, 1}), CohClass({-1, -1, -1}),
                            CohClass({-1, -1, 1})};
    CHECK(got == want);

    CHECK(blow_up(catalog_series("zero"), BlowupVariant::Cosh).is_zero());
    CHECK_THROWS_AS(blow_up(catalog_series("order-three"), BlowupVariant::Cosh), validation_error);
}

TEST_CASE("sinh blow-up structure") {
    DonaldsonSeries two = catalog_series("two-class");
    DonaldsonSeries b = blow_up(two, BlowupVariant::Sinh);
    CHECK(b.w() == CohClass({1, 0, 1}));
    for (const auto& [K, p] : basic_classes(b)) {
        GaussianRational base = K[0] > 0 ? q(1, 2) : q(-1, 2);
        // the K+E branch (evaluation -1 on E) carries the minus sign
        CHECK(p.constant_value() == (K[2] == -1 ? base * q(-1) : base));
    }
}

TEST_CASE("blow-up expansion identity") {
    // Per sector: the Plus expansion picks up exp(-tE^2/2)cosh(tE) (resp.
    // sinh); the Minus expansion picks up the tE -> i*tE image of that factor,
    // divided by the i coming from the d0 shift in the sinh case.
    auto sector_part = [](const DonaldsonSeries& s, Sector sec) {
        std::vector<SeriesTerm> keep;
        for (const auto& t : s.terms())
            if (t.sector == sec) keep.push_back(t);
        return s.with_terms(std::move(keep));
    };
    auto imag_axis = [](const TruncSeries& f, std::size_t idx, const GaussianRational& phase) {
        TruncSeries out(f.vars(), f.cutoffs());
        for (const auto& [e, c] : f.terms())
            out.add_term(e, c * GaussianRational::i_pow(e[idx]) * phase);
        return out;
    };

    std::mt19937 rng(61);
    Cutoffs cut = Cutoffs::total_only(6, 2);
    for (int k = 0; k < 3; ++k) {
        DonaldsonSeries s = (k == 0) ? catalog_series("two-class") : random_sst_fixture(rng, 2, 2);
        std::size_t n = s.rank();
        for (BlowupVariant variant : {BlowupVariant::Cosh, BlowupVariant::Sinh}) {
            bool sinh_variant = variant == BlowupVariant::Sinh;
            DonaldsonSeries b = blow_up(s, variant);
            TruncSeries fplus = blowup_factor(n, cut, sinh_variant);
            TruncSeries fminus =
                imag_axis(fplus, n, sinh_variant ? GaussianRational::i_pow(-1) : q(1));

            CHECK(expand(sector_part(b, Sector::Plus), cut) ==
                  embed_extra_var(expand(sector_part(s, Sector::Plus), cut), cut) * fplus);
            CHECK(expand(sector_part(b, Sector::Minus), cut) ==
                  embed_extra_var(expand(sector_part(s, Sector::Minus), cut), cut) * fminus);
        }
    }
}

TEST_CASE("blow-down inverts the sinh blow-up") {
    DonaldsonSeries two = catalog_series("two-class");
    CHECK(blow_down_derivative(blow_up(two, BlowupVariant::Sinh), 2) == two);

    std::mt19937 rng(67);
    for (int k = 0; k < 5; ++k) {
        DonaldsonSeries s = random_sst_fixture(rng, 2 + k % 2, 1 + k % 3);
        DonaldsonSeries b = blow_up(s, BlowupVariant::Sinh);
        CHECK(blow_down_derivative(b, s.rank()) == s);
    }

    CHECK_THROWS_AS(blow_down_derivative(two, 0), validation_error);  // e1^2 = 1
    CHECK_THROWS_AS(blow_down_derivative(two, 7), validation_error);  // out of range
}

TEST_CASE("blow-down is the r-derivative of the expansion") {
    std::mt19937 rng(71);
    Cutoffs cut_down = Cutoffs::total_only(4, 2);
    Cutoffs cut_up = Cutoffs::total_only(5, 2);
    for (int k = 0; k < 3; ++k) {
        DonaldsonSeries s = random_sst_fixture(rng, 2, 2);
        DonaldsonSeries b = blow_up(s, BlowupVariant::Sinh);
        std::size_t n = s.rank();

        TruncSeries up = expand(b, cut_up);
        MultiPoly deriv = up.coefficient_of(n, 1); // d/dr at r = 0
        TruncSeries expect(series_vars(n), cut_down);
        for (const auto& [e, c] : deriv.terms()) {
            ExpVec ee(e.begin(), e.begin() + n);
            ee.push_back(e[n + 1]);
            if (cut_down.admits(ee, static_cast<int>(n))) expect.add_term(ee, c);
        }
        CHECK(expand(blow_down_derivative(b, n), cut_down) == expect);
    }
}

TEST_CASE("recolor") {
    DonaldsonSeries two = catalog_series("two-class");
    DonaldsonSeries r = recolor(two, CohClass({0, 1}));
    CHECK(r.w() == CohClass({0, 1}));
    // both sign exponents are even here, so the Plus sector is unchanged
    for (const auto& t : two.terms()) {
        if (t.sector != Sector::Plus) continue;
        bool found = false;
        for (const auto& rt : r.terms())
            if (rt.sector == Sector::Plus && rt.K == t.K && rt.poly == t.poly) found = true;
        CHECK(found);
    }

    std::mt19937 rng(73);
    std::uniform_int_distribution<long> coord(-2, 2);
    for (int k = 0; k < 5; ++k) {
        DonaldsonSeries s = random_sst_fixture(rng, 3, 2);
        CohClass w2({coord(rng), coord(rng), coord(rng)});
        DonaldsonSeries rr = recolor(recolor(s, w2), s.w());
        CHECK(rr == s);

        // w -> w + 2a multiplies the series by (-1)^(a^2)
        CohClass alpha({coord(rng), coord(rng), coord(rng)});
        CohClass wshift = s.w() + alpha + alpha;
        DonaldsonSeries shifted = recolor(s, wshift);
        long a2 = self_pairing(s.manifold().lattice, alpha);
        GaussianRational sign = (((a2 % 2) + 2) % 2 == 0) ? q(1) : q(-1);
        for (const auto& t : s.terms()) {
            if (t.sector != Sector::Plus) continue;
            bool found = false;
            for (const auto& st : shifted.terms())
                if (st.sector == Sector::Plus && st.K == t.K && st.poly == t.poly.scaled(sign))
                    found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("connected sum with S1 x S3") {
    DonaldsonSeries two = catalog_series("two-class");
    DonaldsonSeries s1 = connect_sum_s1s3(two, "delta");
    CHECK(s1.zword().labels == std::vector<std::string>{"delta"});
    CHECK(s1.manifold().b1 == two.manifold().b1 + 1);
    CHECK_FALSE(s1.manifold().sst_manifold);
    CHECK(basic_classes(s1) == basic_classes(two));

    DonaldsonSeries s2 = connect_sum_s1s3(s1, "epsilon");
    CHECK(s2.zword().labels.size() == 2);
    CHECK_THROWS_AS(connect_sum_s1s3(s1, "delta"), validation_error);
}
