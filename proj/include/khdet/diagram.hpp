#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "khdet/errors.hpp"

namespace khdet::diagram {

/// One crossing of a link diagram. `edges` lists the four incident edge
/// labels counterclockwise, starting from the incoming under-strand; the
/// under-strand runs slot 0 -> slot 2 and the over-strand joins slots 1 and 3.
/// `sign` is derived from the strand orientations: +1 exactly when the
/// over-strand runs slot 1 -> slot 3.
struct Crossing {
  std::array<int, 4> edges;
  int sign;
  bool operator==(const Crossing&) const = default;
};

/// Where an edge meets a crossing.
struct Endpoint {
  int crossing;
  int slot;  // 0..3
  bool operator==(const Endpoint&) const = default;
};

/// An immutable link diagram: crossing tuples plus a count of crossingless
/// circle components. Orientations, signs and the component partition are
/// derived from the tuples at construction and validated.
class PlanarDiagram {
public:
  /// Build and validate. Throws validation_error on malformed data: an edge
  /// label used other than exactly twice, non-contiguous labels, or
  /// orientation constraints with no consistent solution.
  static PlanarDiagram from_crossings(const std::vector<std::array<int, 4>>& tuples,
                                      int unknotted_extras = 0,
                                      std::optional<int> basepoint = std::nullopt);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return edge_count_; }
  int unknotted_extras() const { return unknotted_extras_; }
  std::optional<int> basepoint_edge() const { return basepoint_; }

  /// Edge cycles traced through the crossings (crossingless circles are not
  /// listed; they are counted by unknotted_extras).
  const std::vector<std::vector<int>>& edge_components() const { return components_; }
  /// |L|: traced cycles plus crossingless circles.
  int component_count() const {
    return static_cast<int>(components_.size()) + unknotted_extras_;
  }

  int writhe() const;
  int positive_crossings() const;
  int negative_crossings() const { return crossing_count() - positive_crossings(); }

  /// True when the over-strand at crossing c runs slot 1 -> slot 3.
  bool over_forward(int c) const { return over_forward_[c]; }

  /// (tail, head): the endpoints the edge flows out of and into.
  std::pair<Endpoint, Endpoint> edge_endpoints(int e) const;

  PlanarDiagram with_basepoint(int edge) const;

  /// Canonical PD text; parse_pd round-trips it.
  std::string serialize() const;

  bool operator==(const PlanarDiagram&) const = default;

private:
  std::vector<Crossing> crossings_;
  std::vector<bool> over_forward_;
  int edge_count_ = 0;
  int unknotted_extras_ = 0;
  std::optional<int> basepoint_;
  std::vector<std::vector<int>> components_;
  // per edge (1-based): tail and head endpoints
  std::vector<Endpoint> tail_, head_;
};

/// Parse the PD grammar: `PD[X(a,b,c,d){,X(...)}*]` with an optional
/// suffix `+ k` adding k crossingless circles. Whitespace-insensitive.
/// Throws parse_error (with position) or validation_error.
PlanarDiagram parse_pd(const std::string& text);

/// Closure of a braid word on the given number of strands. Letters are
/// nonzero integers: +i crosses strand i over strand i+1, -i the reverse.
PlanarDiagram braid_closure(const std::vector<int>& word, int strands);

/// The two-cabled Hopf link H_{m,n}: each component of the Hopf link is
/// replaced by two parallel strands, with an |m|-crossing twist region on one
/// cable and an |n|-crossing twist region on the other (8 further crossings
/// come from the cabled clasp). Positive parameters give right-handed twists;
/// when both parameters are non-positive the whole diagram is mirrored, so
/// hopf_cable(-m,-n) is the mirror image of hopf_cable(m,n) for m,n >= 0.
PlanarDiagram hopf_cable(int m, int n);

/// Mirror image: every crossing switched; an involution.
PlanarDiagram mirror(const PlanarDiagram& d);

PlanarDiagram disjoint_union(const PlanarDiagram& a, const PlanarDiagram& b);

/// Splice the two diagrams along the chosen edges (one from each). The
/// edges' components are joined, so |L| drops by one relative to the union.
PlanarDiagram connected_sum(const PlanarDiagram& a, int edge_a,
                            const PlanarDiagram& b, int edge_b);

/// Insert a one-crossing twist of the given sign (+1 or -1) on an edge.
/// Pass edge = 0 to kink one of the crossingless circles instead.
PlanarDiagram add_r1_kink(const PlanarDiagram& d, int edge, int sign);

/// Split into connected pieces of the underlying 4-valent plane graph, each
/// crossingless circle becoming its own piece. Edges are renumbered within
/// each piece; piece order follows the lowest original crossing index.
std::vector<PlanarDiagram> connected_pieces(const PlanarDiagram& d);

}  // namespace khdet::diagram
