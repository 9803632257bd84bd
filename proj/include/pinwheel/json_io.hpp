#pragma once

#include <string>
#include <variant>

#include "json.hpp"
#include "pinwheel/core.hpp"
#include "pinwheel/hardness.hpp"
#include "pinwheel/posmatch.hpp"

namespace pinwheel::io {

using nlohmann::json;

/// Raw Position Matching payload as found in files; PMInstance::make
/// validates and derives the sequence.
struct PMFile {
    core::Deadlines deadlines;
    std::vector<std::int64_t> targets;
};

using InstanceFile =
    std::variant<core::KVisitsInstance, core::OneOrTwoInstance, PMFile>;

json load_file(const std::string& path);
void save_file(const std::string& path, const json& j);

InstanceFile instance_from_json(const json& j);
json instance_to_json(const core::KVisitsInstance& inst);
json instance_to_json(const core::OneOrTwoInstance& inst);
json instance_to_json(const PMFile& inst);

core::Schedule schedule_from_json(const json& j);
json schedule_to_json(const core::Schedule& sched);

json verdict_to_json(const core::Verdict& v);
json matching_to_json(const posmatch::PMMatching& m);

hardness::NMTSInstance nmts_from_json(const json& j);
json nmts_to_json(const hardness::NMTSInstance& inst);

}  // namespace pinwheel::io
