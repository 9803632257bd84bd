#include "doctest.h"

#include "pinwheel/json_io.hpp"

using namespace pinwheel;
using io::json;

TEST_CASE("instance files round-trip") {
    json kv = json::parse(R"({"variant":"kvisits","k":3,"deadlines":[2,5,6]})");
    auto parsed = io::instance_from_json(kv);
    auto* inst = std::get_if<core::KVisitsInstance>(&parsed);
    REQUIRE(inst);
    CHECK(inst->k == 3);
    CHECK(io::instance_from_json(io::instance_to_json(*inst)).index() ==
          parsed.index());

    json ot = json::parse(R"({"variant":"one_or_two","single":[1],"double":[2,2]})");
    auto parsed_ot = io::instance_from_json(ot);
    auto* ot_inst = std::get_if<core::OneOrTwoInstance>(&parsed_ot);
    REQUIRE(ot_inst);
    CHECK(ot_inst->horizon() == 5);

    json pm = json::parse(R"({"variant":"pm","deadlines":[2,2],"targets":[3,4]})");
    auto parsed_pm = io::instance_from_json(pm);
    auto* pm_file = std::get_if<io::PMFile>(&parsed_pm);
    REQUIRE(pm_file);
    CHECK(pm_file->targets == std::vector<std::int64_t>{3, 4});

    // variant defaults to kvisits with k = 2
    json bare = json::parse(R"({"deadlines":[2,2]})");
    auto parsed_bare = io::instance_from_json(bare);
    CHECK(std::get<core::KVisitsInstance>(parsed_bare).k == 2);
}

TEST_CASE("malformed instances are rejected with a message") {
    CHECK_THROWS_AS(io::instance_from_json(json::parse(R"({"variant":"x"})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        io::instance_from_json(json::parse(R"({"variant":"kvisits"})")),
        std::invalid_argument);
    CHECK_THROWS_AS(io::instance_from_json(json::parse(
                        R"({"variant":"kvisits","deadlines":[1.5]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::instance_from_json(json::parse(
                        R"({"variant":"kvisits","deadlines":[0,2]})")),
                    std::invalid_argument);
}

TEST_CASE("schedules round-trip with roles") {
    json j = json::parse(
        R"({"entries":[{"pos":2,"task":1,"role":"secondary"},
                       {"pos":1,"task":1,"role":"primary"}]})");
    auto sched = io::schedule_from_json(j);
    CHECK(sched.at(1).role == core::Role::Primary);
    auto back = io::schedule_to_json(sched);
    CHECK(back["entries"][0]["pos"] == 1);

    CHECK_THROWS_AS(io::schedule_from_json(json::parse(
                        R"({"entries":[{"pos":1,"task":1,"role":"boss"}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::schedule_from_json(json::parse(
                        R"({"entries":[{"pos":2,"task":1}]})")),
                    std::invalid_argument);
}

TEST_CASE("verdicts and nmts instances serialize") {
    auto v = core::Verdict::fail(2, 3, "deadline expired");
    auto j = io::verdict_to_json(v);
    CHECK(j["feasible"] == false);
    CHECK(j["witness"]["task"] == 2);

    json nm = json::parse(R"({"problem":"nmts","a":[1,2],"b":[1,3],"t":[2,5]})");
    auto inst = io::nmts_from_json(nm);
    CHECK(inst.b_set == std::vector<std::int64_t>{1, 3});
    CHECK(io::nmts_from_json(io::nmts_to_json(inst)).t_set == inst.t_set);
    CHECK_THROWS_AS(
        io::nmts_from_json(json::parse(R"({"problem":"nmts","a":[1],"b":[1,2],"t":[2]})")),
        std::invalid_argument);
}
