#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "bel/attack.hpp"
#include "bel/normal_form.hpp"
#include "bel/ttp.hpp"

namespace bel {

using Json = nlohmann::json;

Json to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const Json& j);

Json to_json(const CommutingPair& pair);
CommutingPair commuting_pair_from_json(const Json& j);

Json to_json(const PublicView& pub);
PublicView public_view_from_json(const Json& j);

/// {"public": ..., "secret": ...}
Json to_json(const TtpInstance& inst);
Json secret_to_json(const TtpInstance& inst);

Json to_json(const AttackConfig& config);
/// Missing keys keep their defaults.
AttackConfig attack_config_from_json(const Json& j);

Json to_json(const AttackOutcome& outcome);
AttackOutcome attack_outcome_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace bel
