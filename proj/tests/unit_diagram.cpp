#include <doctest.h>

#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "khdet/checkerboard.hpp"
#include "khdet/diagram.hpp"
#include "khdet/smith.hpp"

using namespace khdet::diagram;

namespace {

// Independent component-count oracle: union-find over edges joined through
// each crossing's two strand passages.
int traced_components(const PlanarDiagram& d) {
  int n = d.edge_count();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : d.crossings()) {
    parent[find(c.edges[0])] = find(c.edges[2]);
    parent[find(c.edges[1])] = find(c.edges[3]);
  }
  std::set<int> roots;
  for (int e = 1; e <= n; ++e) roots.insert(find(e));
  return static_cast<int>(roots.size()) + d.unknotted_extras();
}

// Independent braid-closure component oracle: cycle count of the induced
// permutation, plus untouched strands.
int braid_components(const std::vector<int>& word, int strands) {
  std::vector<int> perm(strands + 1);
  std::iota(perm.begin(), perm.end(), 0);
  for (int g : word) {
    int i = std::abs(g);
    std::swap(perm[i], perm[i + 1]);
  }
  std::vector<bool> seen(strands + 1, false);
  int cycles = 0;
  for (int p = 1; p <= strands; ++p) {
    if (seen[p]) continue;
    ++cycles;
    for (int q = p; !seen[q]; q = perm[q]) seen[q] = true;
  }
  return cycles;
}

std::multiset<int> sign_multiset(const PlanarDiagram& d) {
  std::multiset<int> s;
  for (const auto& c : d.crossings()) s.insert(c.sign);
  return s;
}

PlanarDiagram left_trefoil() {
  return parse_pd("PD[X(1,4,2,3),X(3,6,4,5),X(5,2,6,1)]");
}
PlanarDiagram right_trefoil() { return braid_closure({1, 1, 1}, 2); }
PlanarDiagram figure_eight() { return braid_closure({1, -2, 1, -2}, 3); }
PlanarDiagram hopf_link() { return braid_closure({1, 1}, 2); }
PlanarDiagram unknot() { return parse_pd("PD[] + 1"); }

}  // namespace

TEST_CASE("parse_pd: pinned examples") {
  PlanarDiagram t = left_trefoil();
  CHECK(t.crossing_count() == 3);
  CHECK(t.component_count() == 1);
  CHECK(t.edge_count() == 6);

  PlanarDiagram u2 = parse_pd("PD[] + 2");
  CHECK(u2.component_count() == 2);
  CHECK(u2.crossing_count() == 0);

  CHECK_THROWS_AS(parse_pd("PD[X(1,4,2,3),X(1,4,2,3)]"), khdet::validation_error);
  CHECK_THROWS_AS(parse_pd("PD[]"), khdet::validation_error);
  CHECK_THROWS_AS(parse_pd("PD[X(1,2"), khdet::parse_error);
  CHECK_THROWS_AS(parse_pd("PD[X(1,4,2,3)] junk"), khdet::parse_error);

  // whitespace-insensitive, and the serializer emits the canonical form
  PlanarDiagram t2 = parse_pd(" PD[ X(1,4,2,3), X(3,6,4,5) ,X(5,2,6,1) ] ");
  CHECK(t2 == t);
  CHECK(t.serialize() == "PD[X(1,4,2,3),X(3,6,4,5),X(5,2,6,1)]");
  CHECK(parse_pd(t.serialize()) == t);
  CHECK(u2.serialize() == "PD[] + 2");
  CHECK(parse_pd(u2.serialize()) == u2);
}

TEST_CASE("parse_pd: the standard trefoil is left-handed") {
  PlanarDiagram t = left_trefoil();
  CHECK(t.writhe() == -3);
}

TEST_CASE("braid_closure: component counts match the permutation oracle") {
  CHECK(braid_closure({1, 1}, 2).component_count() == 2);   // Hopf
  CHECK(braid_closure({1, 1}, 2).component_count() == braid_components({1, 1}, 2));
  CHECK(braid_closure({1, 1, 1}, 2).component_count() == 1);  // trefoil
  CHECK(braid_closure({}, 1).component_count() == 1);         // crossingless circle
  CHECK(braid_closure({}, 1).crossing_count() == 0);
  CHECK_THROWS_AS(braid_closure({2}, 2), khdet::validation_error);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int strands = 2 + static_cast<int>(rng() % 4);
    int len = 1 + static_cast<int>(rng() % 7);
    std::vector<int> word;
    for (int k = 0; k < len; ++k) {
      int g = 1 + static_cast<int>(rng() % (strands - 1));
      word.push_back((rng() & 1) ? g : -g);
    }
    PlanarDiagram d = braid_closure(word, strands);
    CHECK(d.crossing_count() == len);
    CHECK(d.component_count() == braid_components(word, strands));
    CHECK(d.component_count() == traced_components(d));
    int pos = 0;
    for (int g : word) pos += (g > 0);
    CHECK(d.positive_crossings() == pos);
  }
}

TEST_CASE("hopf_cable: crossing counts, components, mirror behavior") {
  PlanarDiagram h13 = hopf_cable(1, 3);
  CHECK(h13.crossing_count() == 12);
  CHECK(h13.component_count() == 2);

  PlanarDiagram h00 = hopf_cable(0, 0);
  CHECK(h00.crossing_count() == 8);
  CHECK(h00.component_count() == 4);

  PlanarDiagram hm = hopf_cable(-1, -3);
  CHECK(hm.crossing_count() == 12);
  CHECK(sign_multiset(hm) == sign_multiset(mirror(h13)));

  for (int m : {-5, -2, 0, 1, 4}) {
    for (int n : {-3, 2, 5}) {
      PlanarDiagram h = hopf_cable(m, n);
      CHECK(h.crossing_count() == 8 + std::abs(m) + std::abs(n));
      if (m % 2 != 0 && n % 2 != 0) CHECK(h.component_count() == 2);
      CHECK(h.component_count() == traced_components(h));
    }
  }
}

TEST_CASE("mirror: involution that negates every sign") {
  for (const PlanarDiagram& d :
       {left_trefoil(), right_trefoil(), figure_eight(), hopf_cable(1, 3)}) {
    PlanarDiagram m = mirror(d);
    CHECK(m.crossing_count() == d.crossing_count());
    CHECK(m.component_count() == d.component_count());
    CHECK(m.writhe() == -d.writhe());
    for (int c = 0; c < d.crossing_count(); ++c)
      CHECK(m.crossings()[c].sign == -d.crossings()[c].sign);
    CHECK(mirror(m) == d);
  }
}

TEST_CASE("disjoint_union and connected_sum: component bookkeeping") {
  PlanarDiagram u2 = disjoint_union(unknot(), unknot());
  CHECK(u2.component_count() == 2);
  CHECK(u2.crossing_count() == 0);

  PlanarDiagram granny = connected_sum(right_trefoil(), 1, right_trefoil(), 1);
  CHECK(granny.crossing_count() == 6);
  CHECK(granny.component_count() == 1);
  CHECK(granny.component_count() == traced_components(granny));

  CHECK(disjoint_union(right_trefoil(), hopf_link()).component_count() == 3);
  CHECK(connected_sum(right_trefoil(), 2, hopf_link(), 1).component_count() == 2);
  CHECK_THROWS_AS(connected_sum(right_trefoil(), 99, hopf_link(), 1),
                  khdet::validation_error);
}

TEST_CASE("add_r1_kink: one extra crossing, same components") {
  PlanarDiagram k = add_r1_kink(unknot(), 0, +1);
  CHECK(k.crossing_count() == 1);
  CHECK(k.component_count() == 1);
  CHECK(k.writhe() == 1);
  CHECK(add_r1_kink(unknot(), 0, -1).writhe() == -1);

  for (int sign : {+1, -1}) {
    PlanarDiagram d = right_trefoil();
    PlanarDiagram kinked = add_r1_kink(d, 3, sign);
    CHECK(kinked.crossing_count() == d.crossing_count() + 1);
    CHECK(kinked.component_count() == d.component_count());
    CHECK(kinked.writhe() == d.writhe() + sign);
  }
  CHECK_THROWS_AS(add_r1_kink(right_trefoil(), 7, 1), khdet::validation_error);
}

TEST_CASE("every edge appears exactly twice in generated diagrams") {
  for (const PlanarDiagram& d : {right_trefoil(), figure_eight(), hopf_cable(2, -3),
                                 connected_sum(right_trefoil(), 1, figure_eight(), 2)}) {
    std::map<int, int> uses;
    for (const auto& c : d.crossings())
      for (int e : c.edges) ++uses[e];
    CHECK(static_cast<int>(uses.size()) == d.edge_count());
    for (const auto& [e, k] : uses) CHECK(k == 2);
    // stored component partition covers each edge once
    std::set<int> covered;
    for (const auto& comp : d.edge_components())
      for (int e : comp) CHECK(covered.insert(e).second);
    CHECK(static_cast<int>(covered.size()) == d.edge_count());
  }
}

TEST_CASE("checkerboard: proper coloring and Euler region count") {
  std::mt19937_64 rng(99);
  std::vector<PlanarDiagram> sample = {right_trefoil(), left_trefoil(), figure_eight(),
                                       hopf_link(), hopf_cable(1, 3), hopf_cable(2, 2)};
  for (int trial = 0; trial < 12; ++trial) {
    int strands = 2 + static_cast<int>(rng() % 3);
    std::vector<int> word;
    int len = 2 + static_cast<int>(rng() % 6);
    for (int k = 0; k < len; ++k) {
      int g = 1 + static_cast<int>(rng() % (strands - 1));
      word.push_back((rng() & 1) ? g : -g);
    }
    PlanarDiagram d = braid_closure(word, strands);
    if (connected_pieces(d).size() == 1 && d.unknotted_extras() == 0)
      sample.push_back(d);
  }
  for (const PlanarDiagram& d : sample) {
    Checkerboard cb = checkerboard(d);  // properness asserted internally
    CHECK(cb.region_count == d.crossing_count() + 2);
    CHECK(!cb.shaded[cb.unbounded_region]);
    for (int c = 0; c < d.crossing_count(); ++c) {
      CHECK((cb.eta[c] == 1 || cb.eta[c] == -1));
      CHECK(!cb.shaded[cb.white_pair[c][0]]);
      CHECK(!cb.shaded[cb.white_pair[c][1]]);
    }
  }
}

TEST_CASE("goeritz matrix: symmetry and pinned determinants") {
  for (const PlanarDiagram& d :
       {right_trefoil(), figure_eight(), hopf_link(), hopf_cable(1, 3)})
    CHECK(goeritz_matrix(d).is_symmetric());

  CHECK(khdet::homalg::abs_det(goeritz_matrix(right_trefoil())) == 3);
  CHECK(khdet::homalg::abs_det(goeritz_matrix(left_trefoil())) == 3);
  CHECK(khdet::homalg::abs_det(goeritz_matrix(hopf_link())) == 2);
  CHECK(khdet::homalg::abs_det(goeritz_matrix(figure_eight())) == 5);
  CHECK(khdet::homalg::abs_det(goeritz_matrix(hopf_cable(1, 3))) == 0);

  CHECK_THROWS_AS(checkerboard(disjoint_union(right_trefoil(), right_trefoil())),
                  khdet::validation_error);
}

TEST_CASE("connected_pieces: splits along plane-graph components") {
  PlanarDiagram split = disjoint_union(right_trefoil(), hopf_link());
  auto pieces = connected_pieces(split);
  CHECK(pieces.size() == 2);
  CHECK(pieces[0].crossing_count() == 3);
  CHECK(pieces[1].crossing_count() == 2);

  auto with_circle = connected_pieces(disjoint_union(right_trefoil(), unknot()));
  CHECK(with_circle.size() == 2);
  CHECK(with_circle[1].crossing_count() == 0);

  CHECK(connected_pieces(right_trefoil()).size() == 1);
}
