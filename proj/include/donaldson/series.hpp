#pragma once

#include <optional>
#include <string>
#include <vector>

#include "donaldson/lattice.hpp"
#include "donaldson/poly.hpp"

namespace donaldson {

/// The two summands of the structure form: Plus carries the prefactor
/// exp(Q/2 + 2*lambda) with real class exponentials exp(K.tD); Minus carries
/// exp(-Q/2 - 2*lambda) with imaginary exponentials exp(i K.tD).
enum class Sector { Plus, Minus };

struct SeriesTerm {
    Sector sector;
    CohClass K;
    MultiPoly poly; // in (t1..tn, lambda)

    friend bool operator==(const SeriesTerm& a, const SeriesTerm& b) {
        return a.sector == b.sector && a.K == b.K && a.poly == b.poly;
    }
};

/// Opaque word of 1-cycle names labelling the H1 insertions z. The grading
/// gives each H1 element degree 3, so deg2z = 3 * #labels.
struct OneCycleWord {
    std::vector<std::string> labels;

    long deg2z() const { return 3 * static_cast<long>(labels.size()); }
    friend bool operator==(const OneCycleWord& a, const OneCycleWord& b) {
        return a.labels == b.labels;
    }
};

struct SeriesFlags {
    bool claims_characteristic = false;
    bool claims_symmetric = false;
    bool claims_sst = false;

    friend bool operator==(const SeriesFlags&, const SeriesFlags&) = default;
};

/// Structured Donaldson series: two sectors of exponential-polynomial terms
/// over a manifold's intersection lattice.
class DonaldsonSeries {
public:
    DonaldsonSeries() = default;
    DonaldsonSeries(ManifoldData manifold, CohClass w, OneCycleWord zword,
                    std::vector<SeriesTerm> terms, SeriesFlags flags = {});

    const ManifoldData& manifold() const { return manifold_; }
    ManifoldData& manifold() { return manifold_; }
    const CohClass& w() const { return w_; }
    const OneCycleWord& zword() const { return zword_; }
    const std::vector<SeriesTerm>& terms() const { return terms_; }
    const SeriesFlags& flags() const { return flags_; }
    SeriesFlags& flags() { return flags_; }

    std::size_t rank() const { return manifold_.lattice.rank(); }
    std::vector<std::string> poly_vars() const { return series_vars(rank()); }
    bool is_zero() const { return terms_.empty(); }

    /// Sort by (sector, lex K), merge duplicate (sector, K) terms, prune
    /// zero polynomials.
    DonaldsonSeries canonicalized() const;

    /// Replace the term set (re-canonicalizes).
    DonaldsonSeries with_terms(std::vector<SeriesTerm> terms) const;
    DonaldsonSeries with_w(CohClass w) const;
    DonaldsonSeries scaled(const GaussianRational& c) const;

    /// Max lambda-degree across all term polynomials, -1 for the zero series.
    int max_lambda_degree() const;
    /// True when every polynomial is a nonzero constant (the Theorem-shape of
    /// strong simple type).
    bool has_constant_polys() const;

    long twice_d0() const { return donaldson::twice_d0(manifold_, w_); }
    int d0_minus_d_mod4() const { return donaldson::d0_minus_d_mod4(manifold_, w_, zword_.deg2z()); }

    /// Structural equality after canonicalization of both sides.
    friend bool operator==(const DonaldsonSeries& a, const DonaldsonSeries& b);

    /// Run the validators and set the claim flags accordingly.
    DonaldsonSeries with_validated_flags() const;
    /// Throw inconsistency_error if any claimed flag fails its validator.
    void check_claims() const;

private:
    ManifoldData manifold_;
    CohClass w_;
    OneCycleWord zword_;
    std::vector<SeriesTerm> terms_;
    SeriesFlags flags_;
};

/// Expand the structured series as a truncated power series in (t1..tn,
/// lambda): sum over Plus terms of exp(Q/2 + 2l + K.t) p and Minus terms of
/// exp(-Q/2 - 2l + iK.t) q.
TruncSeries expand(const DonaldsonSeries& s, const Cutoffs& cut);

/// Expand along explicit direction classes: tD = sum_j u_j * dirs[j], with
/// fresh variable names (plus lambda). Used to restrict along a surface.
TruncSeries expand_directions(const DonaldsonSeries& s, const std::vector<CohClass>& dirs,
                              const std::vector<std::string>& dir_names, const Cutoffs& cut);

/// Regenerate the Minus sector from the Plus sector via
/// q = i^(d-d0) p(i t, -lambda) and set claims_symmetric.
DonaldsonSeries symmetrize(const DonaldsonSeries& s);

struct PairReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Check that Plus classes come in pairs +-K with
/// p_{-K}(-t, lambda) = (-1)^(d0-d) p_K(t, lambda). Report-only.
PairReport check_pair_structure(const DonaldsonSeries& s);

/// Plus-sector classes with nonzero polynomial, canonically ordered.
std::vector<std::pair<CohClass, MultiPoly>> basic_classes(const DonaldsonSeries& s);

/// Smallest genus g >= 0 with 2g-2 >= surf^2 + max |K.surf|. Requires
/// claims_sst, surf != 0, surf^2 >= 0.
long min_genus(const DonaldsonSeries& s, const CohClass& surf);

struct KmTerm {
    CohClass K;
    GaussianRational a;
};

/// Convert to/from the simple-type normal form e^{Q/2} sum (-1)^((K.w+w^2)/2)
/// a_i e^{K_i}: a (1+x/2)-insertion at lambda = 0 of the two-sector series
/// reproduces the normal form. The a_i are relative to the series' own w.
std::vector<KmTerm> to_km_form(const DonaldsonSeries& s);
DonaldsonSeries from_km_form(const std::vector<KmTerm>& km, const ManifoldData& manifold,
                             const CohClass& w);

} // namespace donaldson
