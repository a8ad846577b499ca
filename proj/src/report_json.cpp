#include "khdet/report_json.hpp"

namespace khdet::cli {

json to_json(const invariants::Laurent& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json{{"exp", e}, {"coeff", c.get_str()}});
  return json{{"variable", "q"},
              {"terms", terms},
              {"display", p.to_string()},
              {"display_t", p.to_t_string()}};
}

json to_json(const homalg::AbelianGroup& g) {
  json torsion = json::array();
  for (const auto& d : g.torsion) torsion.push_back(d.get_str());
  return json{{"free_rank", g.free_rank},
              {"torsion", torsion},
              {"display", g.to_string()}};
}

json to_json(const homalg::BigradedTable& table) {
  json cells = json::array();
  for (const auto& [ij, e] : table.cells()) {  // std::map: sorted by (i, j)
    json torsion = json::array();
    for (const auto& d : e.torsion) torsion.push_back(d.get_str());
    cells.push_back(json{{"i", ij.first},
                         {"j", ij.second},
                         {"free_rank", e.free_rank},
                         {"torsion", torsion}});
  }
  return json{{"ring", homalg::ring_name(table.ring())},
              {"total_rank", table.total_rank()},
              {"cells", cells}};
}

json to_json(const invariants::InvariantReport& report) {
  json ranks;
  for (const auto& [ring, total] : report.kh_ranks)
    ranks[homalg::ring_name(ring)] = total;
  return json{{"jones", to_json(report.jones)},
              {"determinant", report.determinant.get_str()},
              {"branched_h1", to_json(report.branched_h1)},
              {"kh_total_ranks", ranks}};
}

json to_json(const torusbundle::BundleClassification& rec) {
  return json{{"m", rec.m},
              {"n", rec.n},
              {"monodromy", rec.monodromy.to_string()},
              {"trace", rec.trace.get_str()},
              {"det_a_minus_i", rec.det_a_minus_i.get_str()},
              {"h1", to_json(rec.h1)},
              {"order", rec.order ? json(*rec.order) : json("infinite")},
              {"trefoil_surgery_type", rec.trefoil_surgery_type}};
}

json to_json(const VerificationOutcome& outcome) {
  const char* status = outcome.status == VerificationOutcome::Status::pass ? "pass"
                       : outcome.status == VerificationOutcome::Status::fail ? "fail"
                                                                             : "skipped";
  return json{{"check", outcome.name},
              {"status", status},
              {"measured", outcome.measured},
              {"citation", outcome.citation}};
}

json make_document(const std::string& input_description, json results) {
  return json{{"schema_version", 1},
              {"input", input_description},
              {"results", std::move(results)}};
}

}  // namespace khdet::cli
