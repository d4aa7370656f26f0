#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "rigged/bijection.hpp"
#include "rigged/configuration.hpp"
#include "rigged/qseries.hpp"

namespace rigged {

/// "offset:c0,c1,..."; the zero configuration is "0:".
std::string to_text(const Configuration& a);

/// Parses "offset:c0,c1,..." or a bare "c0,c1,..." (offset 0). Throws
/// InputError on malformed text or negative counts.
Configuration parse_configuration(std::string_view text);

nlohmann::json to_json(const Configuration& a);
Configuration configuration_from_json(const nlohmann::json& j);

/// {"parts":[{"weight":w,"rigging":r},...]}
nlohmann::json to_json(const RiggedPartition& rp);
RiggedPartition rigged_partition_from_json(const nlohmann::json& j);

/// "((3,1),(0,0))", the weights and riggings as two tuples.
std::string to_text(const RiggedPartition& rp);

/// Accepts either the JSON object or the two-tuple text form.
RiggedPartition parse_rigged_partition(std::string_view text);

/// {"coeffs":{"deg":"coefficient"},"order":n|null}
nlohmann::json to_json(const QPolynomial& p);
QPolynomial qpolynomial_from_json(const nlohmann::json& j);

}  // namespace rigged
