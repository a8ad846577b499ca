// Command-line front end: invariant reports, Khovanov tables, Jones
// polynomials, torus-bundle classification, and the verification suite.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "khdet/invariants.hpp"
#include "khdet/report_json.hpp"
#include "khdet/verify.hpp"

namespace {

using namespace khdet;
using cli::json;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceCap = 3;

struct LinkSpec {
  std::string pd;
  std::string braid;
  int strands = 2;
  std::vector<int> hopf_cable_params;

  void add_options(CLI::App* cmd) {
    auto* pd_opt = cmd->add_option("--pd", pd, "link as a PD code, e.g. "
                                               "\"PD[X(1,4,2,3),X(3,6,4,5),X(5,2,6,1)]\"");
    auto* braid_opt =
        cmd->add_option("--braid", braid,
                        "braid word as signed generator indices, e.g. \"1,1,1\"");
    cmd->add_option("--strands", strands, "strand count for --braid")->needs(braid_opt);
    auto* cable_opt = cmd->add_option("--hopf-cable", hopf_cable_params,
                                      "twist parameters m n of the cabled Hopf link")
                          ->expected(2);
    pd_opt->excludes(braid_opt)->excludes(cable_opt);
    braid_opt->excludes(cable_opt);
  }

  diagram::PlanarDiagram build() const {
    if (!pd.empty()) return diagram::parse_pd(pd);
    if (!braid.empty()) {
      std::vector<int> word;
      std::stringstream ss(braid);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        word.push_back(std::stoi(tok));
      }
      return diagram::braid_closure(word, strands);
    }
    if (hopf_cable_params.size() == 2)
      return diagram::hopf_cable(hopf_cable_params[0], hopf_cable_params[1]);
    throw validation_error("no link given: use --pd, --braid or --hopf-cable");
  }

  std::string description() const {
    if (!pd.empty()) return pd;
    if (!braid.empty()) return "braid " + braid + " on " + std::to_string(strands) + " strands";
    if (hopf_cable_params.size() == 2)
      return "hopf-cable " + std::to_string(hopf_cable_params[0]) + " " +
             std::to_string(hopf_cable_params[1]);
    return "";
  }
};

homalg::Ring parse_ring(const std::string& name) {
  if (name == "z") return homalg::Ring::Z;
  if (name == "f2") return homalg::Ring::F2;
  if (name == "q") return homalg::Ring::Q;
  throw validation_error("unknown ring '" + name + "' (expected z, f2 or q)");
}

void print_table_plain(const homalg::BigradedTable& table) {
  std::cout << "ring " << homalg::ring_name(table.ring()) << ", total rank "
            << table.total_rank() << "\n";
  std::cout << "   i    j  rank  torsion\n";
  for (const auto& [ij, e] : table.cells()) {
    std::ostringstream tor;
    for (std::size_t k = 0; k < e.torsion.size(); ++k)
      tor << (k ? "," : "") << "Z/" << e.torsion[k].get_str();
    std::printf("%4d %4d  %4ld  %s\n", ij.first, ij.second, e.free_rank,
                tor.str().c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"link invariant engine: Khovanov homology, Jones polynomials, "
               "determinants, branched double covers, torus-bundle monodromy"};
  app.require_subcommand(1);

  bool as_json = false;
  long max_generators = khovanov::ComplexOptions::default_max_generators();
  std::uint64_t seed = 0xC0FFEE;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--max-generators", max_generators,
                 "refuse complexes larger than this many generators");
  app.add_option("--seed", seed, "seed for randomized property checks");

  LinkSpec inv_spec, kh_spec, jones_spec;
  std::string ring_name = "z";
  bool reduced = false;

  auto* cmd_invariants =
      app.add_subcommand("invariants", "full invariant report for a link");
  inv_spec.add_options(cmd_invariants);

  auto* cmd_kh = app.add_subcommand("kh", "Khovanov homology table");
  kh_spec.add_options(cmd_kh);
  cmd_kh->add_option("--ring", ring_name, "coefficients: z, f2 or q");
  cmd_kh->add_flag("--reduced", reduced, "reduced homology (F2 only)");

  auto* cmd_jones = app.add_subcommand("jones", "Jones polynomial");
  jones_spec.add_options(cmd_jones);

  long cb_m = 0, cb_n = 0;
  auto* cmd_classify =
      app.add_subcommand("classify-bundle", "torus-bundle arithmetic for twist "
                                            "parameters (m, n)");
  cmd_classify->add_option("m", cb_m, "first twist parameter")->required();
  cmd_classify->add_option("n", cb_n, "second twist parameter")->required();

  auto* cmd_verify =
      app.add_subcommand("paper-verify", "run the full verification suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_invariants->parsed()) {
      auto d = inv_spec.build();
      auto report = invariants::compute_report(d, max_generators);
      if (as_json) {
        std::cout << cli::make_document(inv_spec.description(), cli::to_json(report)).dump(2)
                  << "\n";
      } else {
        std::cout << "components:  " << d.component_count() << "\n";
        std::cout << "crossings:   " << d.crossing_count() << "\n";
        std::cout << "jones:       " << report.jones.to_t_string() << "\n";
        std::cout << "determinant: " << report.determinant.get_str() << "\n";
        std::cout << "branched_h1: " << report.branched_h1.to_string() << "\n";
        for (const auto& [ring, total] : report.kh_ranks)
          std::cout << "kh rank over " << homalg::ring_name(ring) << ": " << total << "\n";
      }
    } else if (cmd_kh->parsed()) {
      auto d = kh_spec.build();
      if (reduced && d.edge_count() > 0 && !d.basepoint_edge()) d = d.with_basepoint(1);
      auto table =
          khovanov::khovanov_homology(d, parse_ring(ring_name), reduced, max_generators);
      if (as_json)
        std::cout << cli::make_document(kh_spec.description(), cli::to_json(table)).dump(2)
                  << "\n";
      else
        print_table_plain(table);
    } else if (cmd_jones->parsed()) {
      auto d = jones_spec.build();
      auto j = invariants::jones(d, max_generators);
      if (as_json)
        std::cout << cli::make_document(jones_spec.description(), cli::to_json(j)).dump(2)
                  << "\n";
      else
        std::cout << j.to_t_string() << "\n";
    } else if (cmd_classify->parsed()) {
      auto rec = torusbundle::classify_hopf_cable(cb_m, cb_n);
      if (as_json) {
        std::cout << cli::make_document("hopf-cable " + std::to_string(cb_m) + " " +
                                            std::to_string(cb_n),
                                        cli::to_json(rec))
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "monodromy:     " << rec.monodromy.to_string() << "\n";
        std::cout << "trace:         " << rec.trace.get_str() << "\n";
        std::cout << "det(A - I):    " << rec.det_a_minus_i.get_str() << "\n";
        std::cout << "H1:            " << rec.h1.to_string() << "\n";
        std::cout << "order:         "
                  << (rec.order ? std::to_string(*rec.order) : std::string("infinite"))
                  << "\n";
        std::cout << "trefoil-surgery type: " << (rec.trefoil_surgery_type ? "yes" : "no")
                  << "\n";
      }
    } else if (cmd_verify->parsed()) {
      cli::VerifyOptions options;
      options.seed = seed;
      options.max_generators = max_generators;
      auto outcomes = cli::run_paper_checks(options);
      if (as_json) {
        json arr = json::array();
        for (const auto& o : outcomes) arr.push_back(cli::to_json(o));
        std::cout << cli::make_document("paper-verify", std::move(arr)).dump(2) << "\n";
      } else {
        for (const auto& o : outcomes) {
          const char* tag = o.status == cli::VerificationOutcome::Status::pass ? "PASS"
                            : o.status == cli::VerificationOutcome::Status::fail ? "FAIL"
                                                                                 : "SKIP";
          std::cout << "[" << tag << "] " << o.name << ": " << o.measured << "  ("
                    << o.citation << ")\n";
        }
      }
      if (!cli::all_passed(outcomes)) return kExitVerificationFailure;
    }
  } catch (const size_cap_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const validation_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return 0;
}
