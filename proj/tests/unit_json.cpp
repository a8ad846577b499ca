#include <doctest.h>

#include "khdet/report_json.hpp"

using namespace khdet;
using cli::json;

TEST_CASE("json schema: invariant report fields and determinism") {
  auto d = diagram::braid_closure({1, 1, 1}, 2);
  auto report = invariants::compute_report(d);
  json doc = cli::make_document("braid 1,1,1 on 2 strands", cli::to_json(report));

  CHECK(doc["schema_version"] == 1);
  CHECK(doc["input"] == "braid 1,1,1 on 2 strands");
  CHECK(doc["results"]["determinant"] == "3");
  CHECK(doc["results"]["branched_h1"]["free_rank"] == 0);
  CHECK(doc["results"]["branched_h1"]["torsion"][0] == "3");
  CHECK(doc["results"]["kh_total_ranks"]["F2"] == 6);

  // byte-identical across repeated computation
  auto report2 = invariants::compute_report(d);
  json doc2 = cli::make_document("braid 1,1,1 on 2 strands", cli::to_json(report2));
  CHECK(doc.dump() == doc2.dump());
}

TEST_CASE("json schema: homology table cells sorted by (i, j)") {
  auto d = diagram::braid_closure({1, 1, 1}, 2);
  json t = cli::to_json(khovanov::khovanov_homology(d, homalg::Ring::Z));
  CHECK(t["ring"] == "Z");
  CHECK(t["total_rank"] == 4);
  const auto& cells = t["cells"];
  REQUIRE(cells.size() >= 2);
  std::pair<int, int> prev{-1000000, -1000000};
  bool found_torsion = false;
  for (const auto& cell : cells) {
    std::pair<int, int> cur{cell["i"].get<int>(), cell["j"].get<int>()};
    CHECK(prev < cur);
    prev = cur;
    if (!cell["torsion"].empty()) {
      found_torsion = true;
      CHECK(cell["i"] == 3);
      CHECK(cell["j"] == 7);
      CHECK(cell["torsion"][0] == "2");
    }
  }
  CHECK(found_torsion);
}

TEST_CASE("json schema: laurent and classification records") {
  auto j = invariants::jones(diagram::braid_closure({1, 1}, 2));
  json pj = cli::to_json(j);
  CHECK(pj["variable"] == "q");
  CHECK(pj["terms"].size() == 2);
  CHECK(pj["terms"][0]["exp"] == 1);
  CHECK(pj["terms"][0]["coeff"] == "1");

  json rec = cli::to_json(torusbundle::classify_hopf_cable(1, 3));
  CHECK(rec["trace"] == "1");
  CHECK(rec["order"] == 6);
  CHECK(rec["trefoil_surgery_type"] == true);
  CHECK(rec["h1"]["free_rank"] == 1);

  json inf = cli::to_json(torusbundle::classify_hopf_cable(1, 5));
  CHECK(inf["order"] == "infinite");
}
