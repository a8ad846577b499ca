#include <doctest.h>

#include "khdet/diagram.hpp"
#include "khdet/invariants.hpp"
#include "khdet/khovanov.hpp"
#include "khdet/torusbundle.hpp"

using namespace khdet::invariants;
using khdet::diagram::PlanarDiagram;
using khdet::homalg::AbelianGroup;
using khdet::homalg::Ring;

namespace {

PlanarDiagram right_trefoil() { return khdet::diagram::braid_closure({1, 1, 1}, 2); }
PlanarDiagram left_trefoil() {
  return khdet::diagram::parse_pd("PD[X(1,4,2,3),X(3,6,4,5),X(5,2,6,1)]");
}
PlanarDiagram hopf_link() { return khdet::diagram::braid_closure({1, 1}, 2); }
PlanarDiagram figure_eight() { return khdet::diagram::braid_closure({1, -2, 1, -2}, 3); }
PlanarDiagram unknot() { return khdet::diagram::parse_pd("PD[] + 1"); }
PlanarDiagram unlink2() { return khdet::diagram::parse_pd("PD[] + 2"); }

Laurent lau(std::vector<std::pair<int, long>> terms) {
  std::vector<std::pair<int, Int>> t;
  for (auto& [e, c] : terms) t.emplace_back(e, Int(c));
  return Laurent::from_terms(t);
}

}  // namespace

TEST_CASE("kauffman bracket: pinned values") {
  // single crossingless circle normalizes to 1
  CHECK(kauffman_bracket(unknot()) == Laurent::one());
  // two circles: delta = -A^2 - A^-2
  CHECK(kauffman_bracket(unlink2()) == lau({{2, -1}, {-2, -1}}));
  // one positive kink: -A^3
  PlanarDiagram kink = khdet::diagram::add_r1_kink(unknot(), 0, +1);
  CHECK(kauffman_bracket(kink) == lau({{3, -1}}));
  CHECK(kauffman_bracket(khdet::diagram::add_r1_kink(unknot(), 0, -1)) ==
        lau({{-3, -1}}));
}

TEST_CASE("jones: pinned values in q = t^(1/2)") {
  CHECK(jones(unknot()) == Laurent::one());
  CHECK(jones(unlink2()) == lau({{1, 1}, {-1, 1}}));

  // right trefoil: -t^4 + t^3 + t
  Laurent rt = jones(right_trefoil());
  CHECK(rt == lau({{8, -1}, {6, 1}, {2, 1}}));
  CHECK(rt.to_t_string() == "-t^4 + t^3 + t");
  // left trefoil: mirror image, t -> 1/t
  CHECK(jones(left_trefoil()) == rt.inverted());

  // positive Hopf link
  CHECK(jones(hopf_link()) == lau({{5, 1}, {1, 1}}));
  // figure-eight: t^-2 - t^-1 + 1 - t + t^2, symmetric
  Laurent f8 = jones(figure_eight());
  CHECK(f8 == lau({{4, 1}, {2, -1}, {0, 1}, {-2, -1}, {-4, 1}}));
  CHECK(f8 == f8.inverted());
}

TEST_CASE("jones: both routes agree on the corpus") {
  for (const PlanarDiagram& d : {unknot(), unlink2(), hopf_link(), right_trefoil(),
                                 left_trefoil(), figure_eight()}) {
    Laurent direct = jones(d);
    Laurent from_table = jones_from_kh(khdet::khovanov::khovanov_homology(d, Ring::Z));
    CHECK(direct == from_table);
    // and against the classical normalization: J = (-1)^(|L|-1) V
    Laurent v = jones_via_bracket(d);
    if (d.component_count() % 2 == 0) v = -v;
    CHECK(direct == v);
  }
}

TEST_CASE("jones: mirror inverts and connected sum multiplies") {
  for (const PlanarDiagram& d : {right_trefoil(), figure_eight(), hopf_link()})
    CHECK(jones(khdet::diagram::mirror(d)) == jones(d).inverted());

  struct Pair {
    PlanarDiagram a, b;
    int ea, eb;
  };
  std::vector<Pair> pairs = {{right_trefoil(), right_trefoil(), 1, 2},
                             {right_trefoil(), left_trefoil(), 2, 3},
                             {figure_eight(), right_trefoil(), 1, 1},
                             {hopf_link(), right_trefoil(), 3, 1},
                             {hopf_link(), figure_eight(), 2, 5}};
  for (const auto& p : pairs) {
    PlanarDiagram s = khdet::diagram::connected_sum(p.a, p.ea, p.b, p.eb);
    CHECK(jones(s) == jones(p.a) * jones(p.b));
  }

  // disjoint union picks up a factor q + q^-1
  PlanarDiagram u = khdet::diagram::disjoint_union(right_trefoil(), figure_eight());
  CHECK(jones(u) == jones(right_trefoil()) * jones(figure_eight()) * lau({{1, 1}, {-1, 1}}));
}

TEST_CASE("jones is invariant under one-crossing kinks") {
  for (int sign : {+1, -1}) {
    PlanarDiagram t = right_trefoil();
    CHECK(jones(khdet::diagram::add_r1_kink(t, 4, sign)) == jones(t));
  }
}

TEST_CASE("determinant: pinned values, both routes checked internally") {
  CHECK(determinant(unknot()) == 1);
  CHECK(determinant(unlink2()) == 0);
  CHECK(determinant(hopf_link()) == 2);
  CHECK(determinant(right_trefoil()) == 3);
  CHECK(determinant(left_trefoil()) == 3);
  CHECK(determinant(figure_eight()) == 5);
  CHECK(determinant(khdet::diagram::hopf_cable(1, 3)) == 0);
  CHECK(determinant(khdet::diagram::hopf_cable(1, 1)) == 0);
  // split and connected-sum behavior
  CHECK(determinant(khdet::diagram::disjoint_union(right_trefoil(), unknot())) == 0);
  CHECK(determinant(khdet::diagram::connected_sum(right_trefoil(), 1, right_trefoil(), 2)) == 9);
}

TEST_CASE("branched double cover H1: pinned groups") {
  CHECK(branched_h1(right_trefoil()) == AbelianGroup{0, {Int(3)}});
  CHECK(branched_h1(unknot()).is_trivial());
  CHECK(branched_h1(unlink2()) == AbelianGroup{1, {}});
  CHECK(branched_h1(hopf_link()) == AbelianGroup{0, {Int(2)}});
  CHECK(branched_h1(figure_eight()) == AbelianGroup{0, {Int(5)}});
  CHECK(branched_h1(khdet::diagram::hopf_cable(1, 3)) == AbelianGroup{1, {}});
  // torsion |4 - mn| alongside the Z summand
  CHECK(branched_h1(khdet::diagram::hopf_cable(1, 1)) == AbelianGroup{1, {Int(3)}});
  CHECK(branched_h1(khdet::diagram::hopf_cable(3, 5)) == AbelianGroup{1, {Int(11)}});
}

TEST_CASE("branched H1 matches the torus-bundle route, mixed signs included") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{
           {1, 3}, {3, 1}, {-1, -3}, {1, -3}, {-1, 3}, {1, 1}, {3, 3}, {1, 5}, {-3, 5}}) {
    AbelianGroup diagram_side = branched_h1(khdet::diagram::hopf_cable(m, n));
    AbelianGroup bundle_side =
        khdet::torusbundle::torus_bundle_h1(khdet::torusbundle::hopf_cable_monodromy(m, n));
    CHECK(diagram_side == bundle_side);
  }
}

TEST_CASE("cyclotomic_part: pinned splits") {
  // t^2 - 1 = Phi_1 Phi_2
  auto s1 = cyclotomic_part(lau({{2, 1}, {0, -1}}));
  CHECK(s1.multiplicities == std::map<int, int>{{1, 1}, {2, 1}});
  CHECK(s1.remainder == Laurent::one());

  // f(t) = t^7 + t^5 - t + 1: only Phi_2 = t + 1 divides
  Laurent f = lau({{7, 1}, {5, 1}, {1, -1}, {0, 1}});
  auto sf = cyclotomic_part(f);
  CHECK(sf.multiplicities == std::map<int, int>{{2, 1}});
  CHECK(sf.cyclotomic == lau({{1, 1}, {0, 1}}));
  CHECK(sf.remainder.span() == 6);
  CHECK(sf.cyclotomic * sf.remainder == f);
  // the remainder itself has no cyclotomic part
  auto again = cyclotomic_part(sf.remainder);
  CHECK(again.multiplicities.empty());
  CHECK(again.remainder == sf.remainder);

  // t^3 - 2 has no cyclotomic factor
  auto s3 = cyclotomic_part(lau({{3, 1}, {0, -2}}));
  CHECK(s3.multiplicities.empty());

  // units are stripped: q^5 * (t^2 - 1) splits the same way
  auto s4 = cyclotomic_part(lau({{7, 1}, {5, -1}}));
  CHECK(s4.multiplicities == std::map<int, int>{{1, 1}, {2, 1}});

  CHECK_THROWS_AS(cyclotomic_part(Laurent()), khdet::validation_error);
}

TEST_CASE("two_term_shape") {
  CHECK(two_term_shape(lau({{3, 1}, {1, -1}})));          // t^3 - t
  CHECK(!two_term_shape(lau({{7, 1}, {5, 1}, {1, -1}, {0, 1}})));  // four terms
  CHECK(!two_term_shape(lau({{3, 1}, {1, 1}})));          // same sign
  CHECK(!two_term_shape(lau({{3, 2}, {1, -2}})));         // coefficient 2
  CHECK(!two_term_shape(Laurent::one()));

  // a two-term polynomial has only roots of unity: remainder must be a unit
  Laurent p = lau({{9, 1}, {2, -1}});  // q^9 - q^2 = q^2 (q^7 - 1)
  auto split = cyclotomic_part(p);
  CHECK(split.remainder == Laurent::one());
}

TEST_CASE("jones of the (-1,-3) cable matches the pinned four-term polynomial") {
  // -t^(-23/2) + t^(-21/2) - t^(-13/2) - t^(-9/2), stored in q = t^(1/2)
  Laurent displayed = lau({{-23, -1}, {-21, 1}, {-13, -1}, {-9, -1}});
  // internal consistency: it equals -t^(-23/2) * f(t)
  Laurent f_in_q = lau({{14, 1}, {10, 1}, {2, -1}, {0, 1}});
  CHECK(displayed == -(f_in_q.shifted(-23)));
  CHECK(displayed.to_t_string() ==
        "-t^(-9/2) - t^(-13/2) + t^(-21/2) - t^(-23/2)");

  Laurent computed = jones(khdet::diagram::hopf_cable(-1, -3));
  CHECK(equal_up_to_units_and_mirror(computed, displayed));
  CHECK(!two_term_shape(computed));
  CHECK(computed.term_count() == 4);
}

TEST_CASE("invariant report: totals for the trefoil") {
  InvariantReport rep = compute_report(right_trefoil());
  CHECK(rep.determinant == 3);
  CHECK(rep.jones == lau({{8, -1}, {6, 1}, {2, 1}}));
  CHECK(rep.branched_h1 == AbelianGroup{0, {Int(3)}});
  CHECK(rep.kh_ranks.at(Ring::Z) == 4);
  CHECK(rep.kh_ranks.at(Ring::F2) == 6);
  CHECK(rep.kh_ranks.at(Ring::Q) == 4);
}
