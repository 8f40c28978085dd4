#pragma once

#include "json.hpp"

#include "donaldson/hff.hpp"
#include "donaldson/insertion.hpp"
#include "donaldson/series.hpp"

namespace donaldson {

using ordered_json = nlohmann::ordered_json;

/// Document formats. All rationals are strings (see GaussianRational::str);
/// polynomial maps are keyed by comma-joined exponent vectors in graded-lex
/// order, so serialization is canonical and byte-stable.

ordered_json series_to_json(const DonaldsonSeries& s);
DonaldsonSeries series_from_json(const ordered_json& j);

ordered_json trunc_to_json(const TruncSeries& s);
TruncSeries trunc_from_json(const ordered_json& j);

ordered_json even_to_json(const EvenElement& e);
EvenElement even_from_json(const ordered_json& j, std::size_t rank);

ordered_json annihilator_to_json(const AnnihilatorOp& op);

ordered_json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const ordered_json& j, const std::vector<std::string>& vars);

} // namespace donaldson
