#pragma once

#include "raagrep/certify.hpp"

#include <json.hpp>

namespace raagrep {

// nlohmann::json keeps object keys sorted, so identical values serialize to
// byte-identical text.
using json = nlohmann::json;

json to_json(const FieldElement& x);
FieldElement field_element_from_json(const json& j);

json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const json& j);

json to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const json& j);

json to_json(const Configuration& c);
Configuration configuration_from_json(const json& j);

json to_json(const Certificate& cert);
json to_json(const SmokeReport& report);

json fingerprint_json(const Configuration& c);

std::string dump_canonical(const json& j); // 2-space indented, trailing newline

} // namespace raagrep
