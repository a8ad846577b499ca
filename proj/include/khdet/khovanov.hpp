#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "khdet/diagram.hpp"
#include "khdet/graded_complex.hpp"

namespace khdet::khovanov {

using homalg::BigradedTable;
using homalg::GradedComplex;
using homalg::Ring;

/// One complete resolution of a diagram. Bit c of `bits` selects the
/// smoothing of crossing c: 0 joins slots (0,3) and (1,2), 1 joins slots
/// (0,1) and (2,3). Circles are numbered in order of their smallest slot.
struct ResolutionState {
  std::uint64_t bits = 0;
  int circles = 0;
  std::vector<std::uint8_t> slot_circle;  // 4 * crossings entries
};

/// Smooth every crossing according to state_bits and collect the circles.
ResolutionState resolve(const diagram::PlanarDiagram& d, std::uint64_t state_bits);

struct ComplexOptions {
  bool reduced = false;     // requires ring F2 and a basepoint edge
  bool lee = false;         // requires ring Q; adds the filtered perturbation
  long max_generators = default_max_generators();

  static long default_max_generators();  // 2^20, or KHDET_MAX_GENERATORS
};

/// The (co)chain complex of the cube of resolutions, with the rank-2 module
/// assigned to every circle. Bigradings follow the convention that places
/// the crossingless circle at (0, +-1): homological degree i runs over
/// [-n_minus, n_plus] and quantum degrees are shifted by n_plus - 2*n_minus.
/// Cube edges carry the sign (-1)^(number of 1-bits below the flipped bit).
GradedComplex khovanov_complex(const diagram::PlanarDiagram& d, Ring ring,
                               const ComplexOptions& opt = {});

/// Homology of the Khovanov complex. With `reduced` (F2 only) the quantum
/// grading is renormalized so the crossingless circle sits at (0, 0).
BigradedTable khovanov_homology(const diagram::PlanarDiagram& d, Ring ring,
                                bool reduced = false,
                                long max_generators = ComplexOptions::default_max_generators());

/// Total dimension over Q of the homology of the filtered deformation of the
/// Khovanov differential. Always at least 2^(number of components), with
/// equality for every diagram in this engine's test corpus.
long lee_rank(const diagram::PlanarDiagram& d,
              long max_generators = ComplexOptions::default_max_generators());

/// Sum of free ranks (field dimensions) of a table.
long total_rank(const BigradedTable& table);

/// Generating function sum rank * t^i q^j of a table's free ranks.
class PoincarePolynomial {
public:
  explicit PoincarePolynomial(const BigradedTable& table);
  const std::map<std::pair<int, int>, long>& terms() const { return terms_; }
  std::string to_string() const;
  bool operator==(const PoincarePolynomial&) const = default;

private:
  std::map<std::pair<int, int>, long> terms_;
};

}  // namespace khdet::khovanov
