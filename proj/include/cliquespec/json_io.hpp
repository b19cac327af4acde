#pragma once

#include <string>

#include <json.hpp>

#include "cliquespec/cliques.hpp"
#include "cliquespec/q2.hpp"
#include "cliquespec/spectral.hpp"

namespace cliquespec {

using json = nlohmann::json;

json to_json(const Tolerances& tol);

json to_json(const CliqueCover& cover);
CliqueCover cover_from_json(const Graph& g, const json& j);

json to_json(const BoundRecord& record);
json to_json(const SpectralReport& report, const Tolerances& tol);

json to_json(const SspResult& result);

json to_json(const Q2Certificate& cert, const Tolerances& tol);
// Rebuilds the certificate from its serialized form and re-verifies every
// invariant; the returned certificate's verified flag is the re-check.
Q2Certificate certificate_from_json(const json& j, const Tolerances& tol = Tolerances::defaults());

json to_json(const ConjectureReport& report, const Tolerances& tol);

// Markdown rendering is always derived from the JSON document, never
// computed separately.
std::string json_to_markdown(const json& j, const std::string& title);

} // namespace cliquespec
