#include "donaldson/catalog.hpp"

#include "donaldson/errors.hpp"
#include "donaldson/transforms.hpp"

namespace donaldson {

namespace {

ManifoldData hyperbolic_manifold() {
    ManifoldData m;
    m.lattice = Lattice({{1, 0}, {0, -1}}, {"e1", "e2"});
    m.b1 = 0;
    m.bplus = 3;
    m.name = "synthetic-rank2";
    return m;
}

DonaldsonSeries two_class_fixture() {
    ManifoldData m = hyperbolic_manifold();
    CohClass w({1, 0});
    auto vars = series_vars(2);
    // Pair-closed Plus sector: p_{-K}(-t, l) = (-1)^(d0-d) p_K(t, l) with
    // d0 - d = -7 here.
    std::vector<SeriesTerm> terms{
        SeriesTerm{Sector::Plus, CohClass({1, 1}), MultiPoly::constant(vars, GaussianRational(1))},
        SeriesTerm{Sector::Plus, CohClass({-1, -1}),
                   MultiPoly::constant(vars, GaussianRational(-1))}};
    DonaldsonSeries s(std::move(m), std::move(w), OneCycleWord{}, std::move(terms));
    return symmetrize(s).with_validated_flags();
}

DonaldsonSeries zero_fixture() {
    DonaldsonSeries s(hyperbolic_manifold(), CohClass({1, 0}), OneCycleWord{}, {});
    return s.with_validated_flags();
}

DonaldsonSeries order_three_fixture() {
    ManifoldData m = hyperbolic_manifold();
    CohClass w({1, 0});
    auto vars = series_vars(2);
    ExpVec lam2{0, 0, 2};
    std::vector<SeriesTerm> terms{
        SeriesTerm{Sector::Plus, CohClass({1, 1}),
                   MultiPoly::monomial(vars, lam2, GaussianRational(1))},
        SeriesTerm{Sector::Plus, CohClass({-1, -1}),
                   MultiPoly::monomial(vars, lam2, GaussianRational(-1))}};
    DonaldsonSeries s(std::move(m), std::move(w), OneCycleWord{}, std::move(terms));
    return symmetrize(s).with_validated_flags();
}

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> out;
    DonaldsonSeries two = two_class_fixture();
    out.push_back({"zero", "the zero series on a rank-2 odd lattice", zero_fixture()});
    out.push_back({"two-class",
                   "simple-type-shape fixture with basic classes +-(1,1) on diag(1,-1)", two});
    out.push_back({"two-class-cosh-blowup", "cosh blow-up of two-class (same coloring)",
                   blow_up(two, BlowupVariant::Cosh)});
    out.push_back({"two-class-sinh-blowup", "sinh blow-up of two-class (coloring w+E)",
                   blow_up(two, BlowupVariant::Sinh)});
    out.push_back({"order-three",
                   "finite type of order 3: lambda^2 polynomials on classes +-(1,1)",
                   order_three_fixture()});
    out.push_back({"s1s3-sum",
                   "connected sum of two-class with S^1 x S^3: nonempty 1-cycle word",
                   connect_sum_s1s3(two, "delta")});
    return out;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

const DonaldsonSeries& catalog_series(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e.series;
    throw validation_error("unknown catalog fixture: " + name);
}

} // namespace donaldson
