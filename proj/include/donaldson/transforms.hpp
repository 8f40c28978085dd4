#pragma once

#include <string>

#include "donaldson/series.hpp"

namespace donaldson {

enum class BlowupVariant { Cosh, Sinh };

/// Blow up a simple-type-shape series: extend the lattice by an exceptional
/// class E with E^2 = -1 and split each Plus term. Cosh keeps w and maps
/// (K, p) to (K+E, p/2), (K-E, p/2); Sinh uses w+E and maps to (K+E, -p/2),
/// (K-E, p/2). The Minus sector is regenerated by symmetrize.
DonaldsonSeries blow_up(const DonaldsonSeries& s, BlowupVariant variant);

/// Inverse of the sinh blow-up: directional derivative along E at r = 0,
/// restricted to the E-orthogonal sublattice. Requires gram block-diagonal
/// with a -1 entry at e_index.
DonaldsonSeries blow_down_derivative(const DonaldsonSeries& s, std::size_t e_index);

/// Change the coloring w -> w2: each Plus coefficient picks up the sign
/// (-1)^((K.(w+w2) + w^2 + w2^2)/2); Minus regenerated by symmetrize.
DonaldsonSeries recolor(const DonaldsonSeries& s, const CohClass& w2);

/// Connected sum with S^1 x S^3: same lattice and terms, b1 incremented,
/// zword extended by the new 1-cycle label, manifold-level strong-simple-type
/// flag cleared.
DonaldsonSeries connect_sum_s1s3(const DonaldsonSeries& s, const std::string& new_cycle);

} // namespace donaldson
