#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "donaldson/errors.hpp"
#include "donaldson/series.hpp"
#include "support/fixtures.hpp"

using namespace donaldson;
using donaldson::testsupport::random_fixture;
using donaldson::testsupport::random_sst_fixture;

namespace {

GaussianRational q(long n, long d = 1) { return GaussianRational(mpq_class(n, d)); }

ManifoldData rank1_zero_form() {
    ManifoldData m;
    m.lattice = Lattice({{0}}, {"e1"});
    m.b1 = 1; // keeps d0 integral for w = 0
    m.bplus = 2;
    return m;
}

DonaldsonSeries single_term(ManifoldData m, Sector sec, std::vector<long> K, MultiPoly p) {
    CohClass w(std::vector<long>(K.size(), 0));
    return DonaldsonSeries(std::move(m), std::move(w), OneCycleWord{},
                           {SeriesTerm{sec, CohClass(std::move(K)), std::move(p)}});
}

} // namespace

TEST_CASE("expand on rank-1 examples") {
    ManifoldData m = rank1_zero_form();
    auto vars = series_vars(1);
    MultiPoly one = MultiPoly::constant(vars, q(1));

    // only e^{2 lambda} survives
    TruncSeries a = expand(single_term(m, Sector::Plus, {0}, one), Cutoffs::total_only(0, 2));
    CHECK(a.terms().at(ExpVec{0, 0}) == q(1));
    CHECK(a.terms().at(ExpVec{0, 1}) == q(2));
    CHECK(a.terms().at(ExpVec{0, 2}) == q(2));
    CHECK(a.terms().size() == 3);

    // e^{t1}
    TruncSeries b = expand(single_term(m, Sector::Plus, {1}, one), Cutoffs::total_only(3, 0));
    CHECK(b.terms().at(ExpVec{3, 0}) == q(1, 6));
    CHECK(b.terms().size() == 4);

    // Minus sector: e^{i t1}
    TruncSeries c = expand(single_term(m, Sector::Minus, {1}, one), Cutoffs::total_only(2, 0));
    CHECK(c.terms().at(ExpVec{1, 0}) == GaussianRational::i());
    CHECK(c.terms().at(ExpVec{2, 0}) == q(-1, 2));

    // additivity in terms
    std::mt19937 rng(5);
    DonaldsonSeries s = random_fixture(rng, 2, 2, 1, 1);
    auto terms = s.terms();
    std::vector<SeriesTerm> first(terms.begin(), terms.begin() + terms.size() / 2);
    std::vector<SeriesTerm> second(terms.begin() + terms.size() / 2, terms.end());
    Cutoffs cut = Cutoffs::total_only(4, 2);
    CHECK(expand(s, cut) == expand(s.with_terms(first), cut) + expand(s.with_terms(second), cut));
}

TEST_CASE("symmetrize") {
    ManifoldData m = rank1_zero_form(); // d0 = -3, so d0 - d = 1 (mod 4) for w=0
    auto vars = series_vars(1);

    // Constant p with d0-d even: build a rank-1 manifold with d0 even
    ManifoldData meven = m;
    meven.b1 = 3; // d0 = -(3/2)(1-3+2) = 0
    CHECK(d0_minus_d_mod4(meven, CohClass({0}), 0) == 0);
    DonaldsonSeries s1 = symmetrize(single_term(meven, Sector::Plus, {1},
                                                MultiPoly::constant(vars, q(1))));
    REQUIRE(s1.terms().size() == 2);
    CHECK(s1.terms()[1].sector == Sector::Minus);
    CHECK(s1.terms()[1].poly == MultiPoly::constant(vars, q(1)));

    // p = t1, d0-d even: q = i*t1
    DonaldsonSeries s2 = symmetrize(single_term(meven, Sector::Plus, {1},
                                                MultiPoly::variable(vars, 0)));
    CHECK(s2.terms()[1].poly == MultiPoly::variable(vars, 0).scaled(GaussianRational::i()));

    // p = lambda with d0-d = 2: q = i^{-2} * (-lambda) = lambda
    ManifoldData m4;
    m4.lattice = Lattice({{-1}}, {"e1"});
    m4.b1 = 1;
    m4.bplus = 2;
    CohClass w4({1}); // 2d0 = 2 - 3(1-1+2) = -4, d0 = -2, d0-d = 2 (mod 4)
    CHECK(d0_minus_d_mod4(m4, w4, 0) == 2);
    DonaldsonSeries s3(m4, w4, OneCycleWord{},
                       {SeriesTerm{Sector::Plus, CohClass({1}), MultiPoly::variable(vars, 1)}});
    DonaldsonSeries s3s = symmetrize(s3);
    CHECK(s3s.terms()[1].sector == Sector::Minus);
    CHECK(s3s.terms()[1].poly == MultiPoly::variable(vars, 1));

    // idempotence
    CHECK(symmetrize(s3s) == s3s);
}

TEST_CASE("pair structure report") {
    std::mt19937 rng(17);
    for (int k = 0; k < 5; ++k) {
        DonaldsonSeries s = random_fixture(rng, 3, 2, 2, 1);
        CHECK(check_pair_structure(s).ok);
    }
    // broken pair: {(K,1),(-K,-1)} with d0-d even
    ManifoldData m;
    m.lattice = Lattice({{-1}}, {"e1"});
    m.b1 = 1;
    m.bplus = 2;
    CohClass w({1}); // d0 - d = 2 (mod 4): sign (+1)
    auto vars = series_vars(1);
    DonaldsonSeries bad(m, w, OneCycleWord{},
                        {SeriesTerm{Sector::Plus, CohClass({1}), MultiPoly::constant(vars, q(1))},
                         SeriesTerm{Sector::Plus, CohClass({-1}), MultiPoly::constant(vars, q(-1))}});
    CHECK_FALSE(check_pair_structure(bad).ok);
    DonaldsonSeries good(m, w, OneCycleWord{},
                         {SeriesTerm{Sector::Plus, CohClass({1}), MultiPoly::constant(vars, q(1))},
                          SeriesTerm{Sector::Plus, CohClass({-1}), MultiPoly::constant(vars, q(1))}});
    CHECK(check_pair_structure(good).ok);
}

TEST_CASE("basic classes and min genus") {
    std::mt19937 rng(23);
    DonaldsonSeries z = random_sst_fixture(rng, 2, 0);
    CHECK(basic_classes(z).empty());

    DonaldsonSeries s = random_sst_fixture(rng, 2, 1);
    auto bc = basic_classes(s);
    REQUIRE(bc.size() == 2);
    CHECK(bc[0].first == bc[1].first.negated());

    // scaling changes values but not membership
    auto bc2 = basic_classes(s.scaled(q(7)));
    REQUIRE(bc2.size() == 2);
    CHECK(bc2[0].first == bc[0].first);

    // min_genus examples on a manifold with a square-2 class
    ManifoldData m;
    m.lattice = Lattice({{2}}, {"e1"});
    m.b1 = 1;
    m.bplus = 2;
    auto vars = series_vars(1);
    DonaldsonSeries k0(m, CohClass({0}), OneCycleWord{},
                       {SeriesTerm{Sector::Plus, CohClass({0}), MultiPoly::constant(vars, q(1))}});
    k0.flags().claims_sst = true;
    CHECK(min_genus(k0, CohClass({1})) == 2); // surf^2 = 2, K.surf = 0

    ManifoldData m2;
    m2.lattice = Lattice({{1, 0}, {0, 1}}, {"e1", "e2"});
    m2.b1 = 1;
    m2.bplus = 2;
    auto vars2 = series_vars(2);
    DonaldsonSeries k3(m2, CohClass({0, 0}), OneCycleWord{},
                       {SeriesTerm{Sector::Plus, CohClass({3, 0}), MultiPoly::constant(vars2, q(1))}});
    k3.flags().claims_sst = true;
    CHECK(min_genus(k3, CohClass({1, 0})) == 3); // surf^2 = 1, |K.surf| = 3

    DonaldsonSeries empty(m, CohClass({0}), OneCycleWord{}, {});
    empty.flags().claims_sst = true;
    ManifoldData m0;
    m0.lattice = Lattice({{0}}, {"e1"});
    m0.b1 = 1;
    m0.bplus = 2;
    DonaldsonSeries empty0(m0, CohClass({0}), OneCycleWord{}, {});
    empty0.flags().claims_sst = true;
    CHECK(min_genus(empty0, CohClass({1})) == 1); // surf^2 = 0, no classes

    ManifoldData mneg;
    mneg.lattice = Lattice({{-1}}, {"e1"});
    mneg.b1 = 1;
    mneg.bplus = 2;
    DonaldsonSeries sneg(mneg, CohClass({0}), OneCycleWord{}, {});
    sneg.flags().claims_sst = true;
    CHECK_THROWS_AS(min_genus(sneg, CohClass({1})), validation_error);
    CHECK_THROWS_AS(min_genus(empty0, CohClass({0})), validation_error);
}

TEST_CASE("km normal form") {
    // single (K=0, a=1), w=0 on a zero form: Plus (0, 1/2), Minus (0, i^{-d0}/2)
    ManifoldData m = rank1_zero_form(); // d0 = -3
    DonaldsonSeries s = from_km_form({KmTerm{CohClass({0}), q(1)}}, m, CohClass({0}));
    REQUIRE(s.terms().size() == 2);
    CHECK(s.terms()[0].poly.constant_value() == q(1, 2));
    CHECK(s.terms()[1].poly.constant_value() == q(1, 2) * GaussianRational::i_pow(3));

    auto km = to_km_form(s);
    REQUIRE(km.size() == 1);
    CHECK(km[0].a == q(1));

    // sign example: gram diag(1,-1), K=(1,1), w=(1,0)
    ManifoldData m2;
    m2.lattice = Lattice({{1, 0}, {0, -1}}, {"e1", "e2"});
    m2.b1 = 0;
    m2.bplus = 3;
    CohClass w({1, 0});
    DonaldsonSeries s2 = from_km_form(
        {KmTerm{CohClass({1, 1}), q(1)}, KmTerm{CohClass({-1, -1}), q(-1)}}, m2, w);
    for (const auto& t : s2.terms()) {
        if (t.sector == Sector::Plus && t.K == CohClass({1, 1}))
            CHECK(t.poly.constant_value() == q(-1, 2)); // (-1)^{(K.w+w^2)/2} = -1
    }
    auto km2 = to_km_form(s2);
    REQUIRE(km2.size() == 2);

    // random round trips
    std::mt19937 rng(31);
    for (int k = 0; k < 5; ++k) {
        DonaldsonSeries f = random_sst_fixture(rng, 3, 2);
        DonaldsonSeries back = from_km_form(to_km_form(f), f.manifold(), f.w());
        CHECK(back == f);
    }
}

TEST_CASE("claims validation") {
    std::mt19937 rng(37);
    DonaldsonSeries s = random_sst_fixture(rng, 2, 1);
    CHECK(s.flags().claims_characteristic);
    CHECK(s.flags().claims_symmetric);
    CHECK(s.flags().claims_sst);
    CHECK_NOTHROW(s.check_claims());

    DonaldsonSeries broken = s.with_terms({s.terms()[0]}); // drop the Minus partner
    broken.flags() = s.flags();
    CHECK_THROWS_AS(broken.check_claims(), inconsistency_error);
}
