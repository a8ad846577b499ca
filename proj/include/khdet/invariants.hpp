#pragma once

#include <map>

#include "khdet/abelian.hpp"
#include "khdet/diagram.hpp"
#include "khdet/graded_complex.hpp"
#include "khdet/khovanov.hpp"
#include "khdet/laurent.hpp"

namespace khdet::invariants {

using homalg::AbelianGroup;

/// Kauffman bracket of the diagram, a Laurent polynomial in the variable A,
/// normalized so a single crossingless circle has bracket 1. Brute state sum
/// over all 2^n resolutions; refuses diagrams whose state count exceeds
/// max_states.
Laurent kauffman_bracket(const diagram::PlanarDiagram& d,
                         long max_states = khovanov::ComplexOptions::default_max_generators());

/// Jones polynomial in q = t^(1/2), normalized so that
/// (q + q^-1) * J equals the graded Euler characteristic of the Khovanov
/// homology; J(crossingless circle) = 1. Computed by the writhe-normalized
/// bracket state sum, independent of the homology pipeline.
Laurent jones(const diagram::PlanarDiagram& d,
              long max_states = khovanov::ComplexOptions::default_max_generators());

/// Same normalization, read off a Khovanov table (ring Z free ranks or any
/// field dimensions): the graded Euler characteristic divided exactly by
/// q + q^-1. A failed division signals a grading convention bug.
Laurent jones_from_kh(const homalg::BigradedTable& table);

/// The classical single-variable Jones polynomial V in t = q^2, related to
/// jones() by a sign depending on the component count. Exposed for
/// cross-checking the two normalizations against each other.
Laurent jones_via_bracket(const diagram::PlanarDiagram& d,
                          long max_states = khovanov::ComplexOptions::default_max_generators());

/// Link determinant: |J(-1)| via formal evaluation (exponents all even or
/// all odd in q), cross-checked against the Goeritz route (|det G| per
/// connected piece, 0 for split diagrams). The two must agree; disagreement
/// throws internal_check_error.
Int determinant(const diagram::PlanarDiagram& d,
                long max_states = khovanov::ComplexOptions::default_max_generators());

/// H1 of the double cover of S^3 branched along the link: the Goeritz
/// cokernel of each connected piece, summed, plus one Z for every extra
/// split piece (each separating sphere contributes an S^1 x S^2 summand).
AbelianGroup branched_h1(const diagram::PlanarDiagram& d);

/// Factor out every cyclotomic polynomial (to maximal multiplicity) after
/// stripping the unit +-q^k. The remainder has no roots of unity.
struct CyclotomicSplit {
  std::map<int, int> multiplicities;  // cyclotomic index -> multiplicity
  Laurent cyclotomic;                 // product of the factors found
  Laurent remainder;                  // cyclotomic * remainder = unit-stripped input
};
CyclotomicSplit cyclotomic_part(const Laurent& p);

/// True iff p has exactly two nonzero terms, both coefficients +-1 and of
/// opposite sign.
bool two_term_shape(const Laurent& p);

/// Equality up to a unit +-q^k and the substitution q -> q^-1. This is the
/// normalization under which Jones polynomials of unoriented, chirality-free
/// inputs are compared.
bool equal_up_to_units_and_mirror(const Laurent& a, const Laurent& b);

/// Everything the CLI reports for one link.
struct InvariantReport {
  Laurent jones;
  Int determinant = 0;
  AbelianGroup branched_h1;
  std::map<homalg::Ring, long> kh_ranks;  // total rank of Kh per coefficient ring
};

InvariantReport compute_report(const diagram::PlanarDiagram& d,
                               long max_generators = khovanov::ComplexOptions::default_max_generators());

}  // namespace khdet::invariants
