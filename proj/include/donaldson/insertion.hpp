#pragma once

#include <variant>
#include <vector>

#include "donaldson/series.hpp"

namespace donaldson {

/// Factor (x - c) in the even part of A(X): point-class insertion shifted by
/// a scalar, repeated `power` times.
struct PointShift {
    GaussianRational c;
    int power = 1;
};

/// Factor (v - c): surface-class insertion along v shifted by a scalar,
/// repeated `power` times. Reduced mode conjugates away the sector prefactor
/// (drops the +-Q(t.,v) summand).
struct SurfaceShift {
    CohClass v;
    GaussianRational c;
    bool reduced = false;
    int power = 1;
};

using EvenFactor = std::variant<PointShift, SurfaceShift>;

/// A word in point and surface shift factors with a scalar, acting on series
/// by left-to-right insertion.
struct EvenElement {
    std::vector<EvenFactor> factors;
    GaussianRational scale = GaussianRational(1);
};

/// Point-class insertion: d/d(lambda) of the generating function.
/// Plus (K, p) -> (K, 2p + p_lambda); Minus (K, q) -> (K, -2q + q_lambda).
DonaldsonSeries insert_point(const DonaldsonSeries& s);

/// Surface-class insertion along v. Raw Plus: (K, p) -> (K, (Q(t.,v) + K.v) p
/// + grad_v p); raw Minus: (K, q) -> (K, (-Q(t.,v) + i K.v) q + grad_v q).
/// Reduced mode drops the +-Q(t.,v) summand.
DonaldsonSeries insert_surface(const DonaldsonSeries& s, const CohClass& v, bool reduced);

/// Least n with (insert_point^2 - 4 id)^n (S) = 0; 0 for the zero series.
/// Computed by literally applying the operator; cross-checked internally
/// against the closed form 1 + max lambda-degree.
int finite_type_order(const DonaldsonSeries& s);

/// Finite type of order <= 1 with compatible 1-cycle bookkeeping.
bool is_sst_shape(const DonaldsonSeries& s);

/// Apply (insert_point - c)^power or (insert_surface_v - c)^power.
DonaldsonSeries apply_factor(const DonaldsonSeries& s, const EvenFactor& f);

/// Left-to-right composition of the factors, then scalar multiply.
DonaldsonSeries apply_even(const DonaldsonSeries& s, const EvenElement& e);

/// Build an even element that isolates the basic class K: apply_even(S, e)
/// has the single term (Plus, K, 1). Uses reduced surface shifts.
EvenElement isolating_element(const DonaldsonSeries& s, const CohClass& K);

} // namespace donaldson
