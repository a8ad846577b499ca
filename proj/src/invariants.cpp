#include "khdet/invariants.hpp"

#include <bit>

#include "khdet/checkerboard.hpp"
#include "khdet/smith.hpp"

namespace khdet::invariants {

using diagram::PlanarDiagram;
using homalg::BigradedTable;
using homalg::Ring;

namespace {

void check_state_budget(const PlanarDiagram& d, long max_states) {
  const int n = d.crossing_count();
  if (n >= 63 || (long(1) << n) > max_states)
    throw size_cap_error("state sum over 2^" + std::to_string(n) +
                         " resolutions exceeds the configured cap");
}

Laurent q_plus_qinv() {
  return Laurent::from_terms({{1, Int(1)}, {-1, Int(1)}});
}

}  // namespace

Laurent kauffman_bracket(const PlanarDiagram& d, long max_states) {
  check_state_budget(d, max_states);
  const int n = d.crossing_count();
  const Laurent delta =
      Laurent::from_terms({{2, Int(-1)}, {-2, Int(-1)}});  // -A^2 - A^-2
  Laurent total;
  for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s) {
    auto rs = khovanov::resolve(d, s);
    int ones = std::popcount(s);
    // A-smoothings contribute A, B-smoothings A^-1: exponent n - 2*ones
    Laurent term = Laurent::monomial(1, n - 2 * ones);
    for (int k = 0; k < rs.circles - 1; ++k) term = term * delta;
    total = total + term;
  }
  return total;
}

Laurent jones(const PlanarDiagram& d, long max_states) {
  check_state_budget(d, max_states);
  const int n = d.crossing_count();
  const int n_minus = d.negative_crossings();
  const int n_plus = d.positive_crossings();

  // graded Euler characteristic of the cube, no homology needed:
  // (-1)^(n-) q^(n+ - 2 n-) * sum_s (-q)^|s| (q + q^-1)^(circles)
  Laurent sum;
  const Laurent v = q_plus_qinv();
  for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s) {
    auto rs = khovanov::resolve(d, s);
    int ones = std::popcount(s);
    Laurent term = Laurent::monomial((ones % 2) ? -1 : 1, ones);
    for (int k = 0; k < rs.circles; ++k) term = term * v;
    sum = sum + term;
  }
  Laurent euler = sum.shifted(n_plus - 2 * n_minus);
  if (n_minus % 2) euler = -euler;
  auto j = euler.divided_exactly(v);
  if (!j)
    throw internal_check_error("Euler characteristic not divisible by q + q^-1");
  return *j;
}

Laurent jones_from_kh(const BigradedTable& table) {
  Laurent euler;
  for (const auto& [ij, e] : table.cells()) {
    const auto& [i, j] = ij;
    if (e.free_rank == 0) continue;
    Int coef = Int(e.free_rank);
    if (i % 2 != 0) coef = -coef;
    euler = euler + Laurent::monomial(coef, j);
  }
  auto j = euler.divided_exactly(q_plus_qinv());
  if (!j)
    throw internal_check_error(
        "graded Euler characteristic of the table is not divisible by q + q^-1");
  return *j;
}

Laurent jones_via_bracket(const PlanarDiagram& d, long max_states) {
  Laurent bracket = kauffman_bracket(d, max_states);
  const int w = d.writhe();
  // V = (-A)^(-3w) * <D>, then t^(1/2) = A^-2 maps A-exponent -2k to q^k
  Laurent normalized = bracket.shifted(-3 * w);
  if (w % 2) normalized = -normalized;
  std::vector<std::pair<int, Int>> terms;
  for (const auto& [e, c] : normalized.terms()) {
    if (e % 2 != 0)
      throw internal_check_error("normalized bracket has odd exponents");
    terms.emplace_back(-e / 2, c);
  }
  return Laurent::from_terms(terms);
}

namespace {

// |p(i)| where i^2 = -1, valid when the exponents of p are all even or all
// odd (true for the Jones polynomial of any link).
Int abs_value_at_i(const Laurent& p) {
  if (p.is_zero()) return 0;
  bool has_even = false, has_odd = false;
  for (const auto& [e, c] : p.terms()) ((e % 2) ? has_odd : has_even) = true;
  if (has_even && has_odd)
    throw internal_check_error("Jones evaluation at t=-1: mixed exponent parity");
  Int acc = 0;
  for (const auto& [e, c] : p.terms()) {
    // q^(2k) -> (-1)^k, q^(2k+1) -> i * (-1)^k; a global unit i drops in |.|
    int k = (e - (has_odd ? 1 : 0)) / 2;
    acc += (k % 2) ? -c : c;
  }
  return abs(acc);
}

}  // namespace

Int determinant(const PlanarDiagram& d, long max_states) {
  const Int via_jones = abs_value_at_i(jones(d, max_states));

  Int via_goeritz;
  auto pieces = diagram::connected_pieces(d);
  if (pieces.size() > 1) {
    via_goeritz = 0;  // a separating sphere gives H1 an infinite summand
  } else {
    via_goeritz = 1;
    for (const auto& piece : pieces)
      if (piece.crossing_count() > 0)
        via_goeritz *= homalg::abs_det(diagram::goeritz_matrix(piece));
  }

  if (via_jones != via_goeritz)
    throw internal_check_error("determinant routes disagree: |J(-1)| = " +
                               via_jones.get_str() + " vs |det Goeritz| = " +
                               via_goeritz.get_str());
  return via_jones;
}

AbelianGroup branched_h1(const PlanarDiagram& d) {
  auto pieces = diagram::connected_pieces(d);
  AbelianGroup h1 = AbelianGroup::free_of_rank(static_cast<long>(pieces.size()) - 1);
  for (const auto& piece : pieces) {
    if (piece.crossing_count() == 0) continue;  // branched cover of the circle is S^3
    h1 = homalg::direct_sum(h1, homalg::cokernel(diagram::goeritz_matrix(piece)));
  }
  return h1;
}

CyclotomicSplit cyclotomic_part(const Laurent& p) {
  if (p.is_zero()) throw validation_error("cyclotomic_part of the zero polynomial");

  CyclotomicSplit out;
  out.cyclotomic = Laurent::one();
  Laurent rest = p.shifted(-p.min_exp());  // strip the unit q^k

  // phi(d) <= deg bounds the candidates: phi(d) >= sqrt(d/2), so d <= 2 deg^2
  auto phi = [](int d) {
    int result = d;
    for (int q = 2; q * q <= d; ++q) {
      if (d % q) continue;
      result -= result / q;
      while (d % q == 0) d /= q;
    }
    if (d > 1) result -= result / d;
    return result;
  };

  int deg = rest.span();
  for (int d = 1; d <= 2 * deg * deg + 2; ++d) {
    if (rest.span() == 0) break;
    if (phi(d) > rest.span()) continue;
    const Laurent cyc = cyclotomic_polynomial(d);
    for (;;) {
      auto q = rest.divided_exactly(cyc);
      if (!q) break;
      rest = *q;
      ++out.multiplicities[d];
      out.cyclotomic = out.cyclotomic * cyc;
    }
  }
  out.remainder = rest.shifted(-rest.min_exp());
  return out;
}

bool two_term_shape(const Laurent& p) {
  if (p.term_count() != 2) return false;
  auto it = p.terms().begin();
  const Int& c1 = it->second;
  const Int& c2 = std::next(it)->second;
  return abs(c1) == 1 && abs(c2) == 1 && ((c1 < 0) != (c2 < 0));
}

bool equal_up_to_units_and_mirror(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  for (const Laurent& candidate : {b, b.inverted()}) {
    if (a.term_count() != candidate.term_count()) continue;
    Laurent aligned = candidate.shifted(a.min_exp() - candidate.min_exp());
    if (a == aligned || a == -aligned) return true;
  }
  return false;
}

InvariantReport compute_report(const PlanarDiagram& d, long max_generators) {
  InvariantReport rep;
  rep.jones = jones(d, max_generators);
  rep.determinant = determinant(d, max_generators);
  rep.branched_h1 = branched_h1(d);
  rep.kh_ranks[Ring::Z] =
      khovanov::total_rank(khovanov::khovanov_homology(d, Ring::Z, false, max_generators));
  rep.kh_ranks[Ring::F2] =
      khovanov::total_rank(khovanov::khovanov_homology(d, Ring::F2, false, max_generators));
  rep.kh_ranks[Ring::Q] =
      khovanov::total_rank(khovanov::khovanov_homology(d, Ring::Q, false, max_generators));
  return rep;
}

}  // namespace khdet::invariants
