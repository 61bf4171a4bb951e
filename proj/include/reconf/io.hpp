#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "reconf/problems.hpp"

namespace reconf {

using Json = nlohmann::json;

// {"format": "reconf-instance", "kind": ..., "payload": {...}, "start": [...], "target": [...], "bound": n}
Json instance_to_json(const ReconfigInstance& instance);
ReconfigInstance instance_from_json(const Json& doc);

// Set kinds store member lists; every other kind stores one integer per position.
Json state_to_json(const ReconfigInstance& instance, const State& s);
State state_from_json(const ReconfigInstance& instance, const Json& doc);
Json sequence_to_json(const ReconfigInstance& instance, const ReconfigSequence& seq);
ReconfigSequence sequence_from_json(const ReconfigInstance& instance, const Json& doc);

// "p cnf n m" with clause lines, then "c start ..." and "c target ..." as signed literal lists.
std::string to_dimacs(const ReconfigInstance& sat_instance);
ReconfigInstance from_dimacs(std::string_view text);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& doc);

}  // namespace reconf
