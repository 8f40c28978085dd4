#pragma once

#include <string>
#include <vector>

#include "donaldson/series.hpp"

namespace donaldson {

struct CatalogEntry {
    std::string name;
    std::string description;
    DonaldsonSeries series;
};

/// Built-in synthetic fixtures: validated by the library's own invariants
/// (characteristic classes, pair structure, symmetry), not tied to any
/// specific manifold's published invariants.
const std::vector<CatalogEntry>& catalog();

/// Lookup by name; throws validation_error when absent.
const DonaldsonSeries& catalog_series(const std::string& name);

} // namespace donaldson
