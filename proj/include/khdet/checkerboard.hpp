#pragma once

#include <vector>

#include "khdet/diagram.hpp"
#include "khdet/int_matrix.hpp"

namespace khdet::diagram {

/// Checkerboard structure of a connected diagram: the regions of the plane
/// graph, properly two-colored with a chosen unbounded region white, and per
/// crossing the pair of white regions it touches together with its type
/// eta = +-1 (which diagonal of the crossing the shaded regions occupy,
/// measured relative to the under-strand).
struct Checkerboard {
  int region_count = 0;
  std::vector<bool> shaded;              // per region
  std::vector<int> quadrant_region;      // 4 * crossings entries: region of
                                         // the sector between slots s, s+1
  std::vector<std::array<int, 2>> white_pair;  // per crossing, two white regions
  std::vector<int> eta;                        // per crossing, +-1

  int unbounded_region = 0;  // always white
};

/// Build the checkerboard structure. Requires a nonempty connected diagram
/// with no crossingless extras; throws validation_error otherwise (callers
/// split the diagram first). Region count is checked against the Euler count
/// crossings + 2.
Checkerboard checkerboard(const PlanarDiagram& d);

/// The Goeritz matrix of the diagram: the quadratic form on white regions
/// (off-diagonal entries -sum of eta over shared crossings, diagonal chosen
/// so rows sum to zero) with the unbounded region's row and column deleted.
/// Symmetric; presents H1 of the double cover of S^3 branched along the link,
/// and |det| is the link determinant.
homalg::IntMatrix goeritz_matrix(const PlanarDiagram& d);

}  // namespace khdet::diagram
