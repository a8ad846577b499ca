#pragma once

#include <json.hpp>

#include "khdet/graded_complex.hpp"
#include "khdet/invariants.hpp"
#include "khdet/torusbundle.hpp"
#include "khdet/verify.hpp"

namespace khdet::cli {

// All serializers use ordered_json so repeated runs are byte-identical.
using json = nlohmann::ordered_json;

json to_json(const invariants::Laurent& p);
json to_json(const homalg::AbelianGroup& g);
json to_json(const homalg::BigradedTable& table);
json to_json(const invariants::InvariantReport& report);
json to_json(const torusbundle::BundleClassification& rec);
json to_json(const VerificationOutcome& outcome);

/// The CLI's top-level document: {schema_version, input, results}.
json make_document(const std::string& input_description, json results);

}  // namespace khdet::cli
