#pragma once

#include <string>

#include "gifzs/fuzzy_grid.hpp"

namespace gifzs {

/// Binary PGM (P5) with maxval = levels. 1-D grids are height-1 strips;
/// for 2-D grids the top image row carries the highest axis-1 coordinate.
/// Round trips are bit-exact.
void write_pgm(const std::string& path, const FuzzyGrid& grid);

/// Reads a P5 image onto the given domain bounds (defaults to the unit box).
/// A height-1 image becomes a 1-D grid unless force_2d is set.
FuzzyGrid read_pgm(const std::string& path,
                   const std::vector<double>& lo = {},
                   const std::vector<double>& hi = {},
                   bool wrap = false, bool force_2d = false);

} // namespace gifzs
