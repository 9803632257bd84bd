#include "pinwheel/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace pinwheel::io {

namespace {

std::vector<std::int64_t> int_list(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array())
        throw std::invalid_argument(std::string("missing integer list '") +
                                    field + "'");
    std::vector<std::int64_t> out;
    for (const auto& v : j[field]) {
        if (!v.is_number_integer())
            throw std::invalid_argument(std::string("non-integer entry in '") +
                                        field + "'");
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

}  // namespace

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return j;
}

void save_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path);
    out << j.dump(2) << "\n";
}

InstanceFile instance_from_json(const json& j) {
    std::string variant = j.value("variant", "kvisits");
    if (variant == "kvisits") {
        core::KVisitsInstance inst;
        inst.deadlines = core::Deadlines(int_list(j, "deadlines"));
        inst.k = j.value("k", std::int64_t{2});
        if (inst.k < 1) throw std::invalid_argument("k must be positive");
        if (inst.k > 1'000'000'000)
            throw std::invalid_argument("k beyond any reachable horizon");
        return inst;
    }
    if (variant == "one_or_two") {
        core::OneOrTwoInstance inst;
        inst.single_deadlines = core::Deadlines(int_list(j, "single"));
        inst.double_deadlines = core::Deadlines(int_list(j, "double"));
        return inst;
    }
    if (variant == "pm") {
        PMFile f;
        f.deadlines = core::Deadlines(int_list(j, "deadlines"));
        f.targets = int_list(j, "targets");
        return f;
    }
    throw std::invalid_argument("unknown variant '" + variant + "'");
}

json instance_to_json(const core::KVisitsInstance& inst) {
    return json{{"variant", "kvisits"},
                {"k", inst.k},
                {"deadlines", inst.deadlines.values()}};
}

json instance_to_json(const core::OneOrTwoInstance& inst) {
    return json{{"variant", "one_or_two"},
                {"single", inst.single_deadlines.values()},
                {"double", inst.double_deadlines.values()}};
}

json instance_to_json(const PMFile& inst) {
    return json{{"variant", "pm"},
                {"deadlines", inst.deadlines.values()},
                {"targets", inst.targets}};
}

core::Schedule schedule_from_json(const json& j) {
    if (!j.contains("entries") || !j["entries"].is_array())
        throw std::invalid_argument("schedule needs an 'entries' array");
    std::vector<core::ScheduleEntry> entries;
    for (const auto& e : j["entries"]) {
        core::ScheduleEntry entry;
        entry.pos = e.at("pos").get<std::int64_t>();
        entry.task = e.at("task").get<std::int64_t>();
        auto role = core::role_from_name(e.value("role", "plain"));
        if (!role)
            throw std::invalid_argument("unknown role '" +
                                        e.value("role", "") + "'");
        entry.role = *role;
        entries.push_back(entry);
    }
    return core::Schedule(std::move(entries));
}

json schedule_to_json(const core::Schedule& sched) {
    json entries = json::array();
    for (const auto& e : sched.entries())
        entries.push_back(json{{"pos", e.pos},
                               {"task", e.task},
                               {"role", core::role_name(e.role)}});
    return json{{"entries", entries}};
}

json verdict_to_json(const core::Verdict& v) {
    json j{{"feasible", v.feasible}};
    if (v.witness)
        j["witness"] = json{{"task", v.witness->task},
                            {"position", v.witness->position},
                            {"reason", v.witness->reason}};
    return j;
}

json matching_to_json(const posmatch::PMMatching& m) {
    json triplets = json::array();
    for (const auto& t : m.triplets)
        triplets.push_back(json{{"d", t.d_value},
                                {"a", t.a_value},
                                {"t", t.t_value},
                                {"d_index", t.d_index},
                                {"a_index", t.a_index},
                                {"t_index", t.t_index}});
    return json{{"triplets", triplets}};
}

hardness::NMTSInstance nmts_from_json(const json& j) {
    std::string problem = j.value("problem", "nmts");
    if (problem != "nmts")
        throw std::invalid_argument("expected problem 'nmts', got '" +
                                    problem + "'");
    hardness::NMTSInstance inst;
    inst.a_set = int_list(j, "a");
    inst.b_set = int_list(j, "b");
    inst.t_set = int_list(j, "t");
    if (inst.a_set.size() != inst.b_set.size() ||
        inst.a_set.size() != inst.t_set.size())
        throw std::invalid_argument("NMTS lists must have equal length");
    return inst;
}

json nmts_to_json(const hardness::NMTSInstance& inst) {
    return json{{"problem", "nmts"},
                {"a", inst.a_set},
                {"b", inst.b_set},
                {"t", inst.t_set}};
}

}  // namespace pinwheel::io
