#include "doctest.h"

#include "pinwheel/core.hpp"
#include "pinwheel/oracle.hpp"
#include "test_util.hpp"

using namespace pinwheel;
using core::Deadlines;
using core::Role;
using core::Schedule;

TEST_CASE("deadlines sort at construction and reject nonpositive values") {
    Deadlines d({5, 1, 3});
    CHECK(d.values() == std::vector<std::int64_t>{1, 3, 5});
    CHECK_THROWS_AS(Deadlines({0, 2}), std::invalid_argument);
    CHECK(Deadlines({2, 2, 3}).distinct_count() == 2);
    CHECK_FALSE(Deadlines({2, 2}).is_simple());
    CHECK(Deadlines({1, 2}).is_simple());
}

TEST_CASE("schedule positions must tile 1..L") {
    CHECK_THROWS_AS(Schedule({{1, 1, Role::Plain}, {3, 1, Role::Plain}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Schedule({{1, 1, Role::Plain}, {1, 2, Role::Plain}}),
                    std::invalid_argument);
    Schedule s = Schedule::from_tasks({2, 1});
    CHECK(s.at(1).task == 2);
    CHECK(s.at(2).task == 1);
}

TEST_CASE("normalize drops deadlines beyond the reachable horizon") {
    CHECK(core::normalize(Deadlines({1, 2, 99}), 2).values() ==
          std::vector<std::int64_t>{1, 2});
    CHECK(core::normalize(Deadlines({2, 2}), 2).values() ==
          std::vector<std::int64_t>{2, 2});
    CHECK(core::normalize(Deadlines({2, 3, 50}), 3).values() ==
          std::vector<std::int64_t>{2, 3});
    // removal can cascade once the horizon shrinks
    CHECK(core::normalize(Deadlines({1, 5, 9}), 2).values() ==
          std::vector<std::int64_t>{1});
    CHECK(core::normalize(Deadlines{}, 2).values().empty());
    CHECK(core::normalize_removed(Deadlines({1, 5, 9}), 2) ==
          std::vector<std::int64_t>{9, 5});
}

TEST_CASE("normalize on {2,3,50} with k=3 keeps the verdict") {
    core::KVisitsInstance full{Deadlines({2, 3, 50}), 3};
    core::KVisitsInstance trimmed{core::normalize(full.deadlines, 3), 3};
    auto a = oracle::k_visits_decide(full);
    auto b = oracle::k_visits_decide(trimmed);
    REQUIRE(a.status != oracle::DecideStatus::Refused);
    REQUIRE(b.status != oracle::DecideStatus::Refused);
    CHECK(a.status == b.status);
    CHECK(a.status == oracle::DecideStatus::Yes);
}

TEST_CASE("verify_k_visits accepts the known three-visit schedule") {
    core::KVisitsInstance inst{Deadlines({2, 5, 6, 7, 8, 9, 10, 11}), 3};
    Schedule s = Schedule::from_tasks({1, 1, 1, 7, 2, 3, 4, 5, 6, 2, 8, 3,
                                       4, 7, 2, 5, 3, 6, 4, 5, 6, 8, 7, 8});
    CHECK(core::verify_k_visits(inst, s).feasible);
}

TEST_CASE("verify_k_visits basics") {
    CHECK(core::verify_k_visits({Deadlines({1}), 1},
                                Schedule::from_tasks({1}))
              .feasible);
    auto v = core::verify_k_visits({Deadlines({2, 2}), 2},
                                   Schedule::from_tasks({1, 1, 2, 2}));
    REQUIRE_FALSE(v.feasible);
    CHECK(v.witness->task == 2);
    CHECK(v.witness->position == 3);

    auto len = core::verify_k_visits({Deadlines({2, 2}), 2},
                                     Schedule::from_tasks({1, 2, 1}));
    CHECK_FALSE(len.feasible);
    CHECK(len.witness->reason == "length mismatch");

    auto unknown = core::verify_k_visits({Deadlines({1}), 2},
                                         Schedule::from_tasks({1, 3}));
    CHECK_FALSE(unknown.feasible);
    CHECK(unknown.witness->reason == "unknown task");
}

TEST_CASE("verify_two_visits follows the primary/secondary rules") {
    Schedule ok({{1, 1, Role::Primary},
                 {2, 2, Role::Primary},
                 {3, 1, Role::Secondary},
                 {4, 2, Role::Secondary}});
    CHECK(core::verify_two_visits(Deadlines({2, 2}), ok).feasible);

    // secondary before its primary is always allowed
    Schedule early({{1, 1, Role::Secondary},
                    {2, 1, Role::Primary},
                    {3, 2, Role::Primary},
                    {4, 3, Role::Primary},
                    {5, 2, Role::Secondary},
                    {6, 3, Role::Secondary}});
    CHECK(core::verify_two_visits(Deadlines({4, 4, 4}), early).feasible);

    Schedule plain = Schedule::from_tasks({1, 1});
    auto v = core::verify_two_visits(Deadlines({1}), plain);
    CHECK_FALSE(v.feasible);
    CHECK(v.witness->reason == "missing role");
}

TEST_CASE("two-visit infeasibility of {1,2} over every role labeling") {
    auto res = oracle::two_visits_search(Deadlines({1, 2}), false);
    CHECK(res.status == oracle::DecideStatus::No);
}

TEST_CASE("verify_one_or_two handles singles and doubles") {
    core::OneOrTwoInstance inst{Deadlines({1}), Deadlines({2})};
    Schedule ok({{1, 1, Role::Single},
                 {2, 2, Role::Primary},
                 {3, 2, Role::Secondary}});
    CHECK(core::verify_one_or_two(inst, ok).feasible);

    Schedule bad({{1, 2, Role::Primary},
                  {2, 1, Role::Single},
                  {3, 2, Role::Secondary}});
    auto v = core::verify_one_or_two(inst, bad);
    CHECK_FALSE(v.feasible);
    CHECK(v.witness->task == 1);

    // singles d={1,3}, double d={4}: single1@1 single2@3 primary@2 sec@4
    core::OneOrTwoInstance inst2{Deadlines({1, 3}), Deadlines({4})};
    Schedule s2({{1, 1, Role::Single},
                 {2, 3, Role::Primary},
                 {3, 2, Role::Single},
                 {4, 3, Role::Secondary}});
    bool direct = core::verify_one_or_two(inst2, s2).feasible;
    CHECK(direct);
    auto searched = oracle::one_or_two_search(inst2, false);
    CHECK(searched.status == oracle::DecideStatus::Yes);
}

TEST_CASE("density is an exact rational") {
    CHECK(core::density(Deadlines({2, 3, 6})) == Rational(1));
    CHECK(core::density(Deadlines({4, 4, 4})) == Rational(3, 4));
    for (std::int64_t x : {2, 5, 17}) {
        Rational expect = Rational(5, 6) + Rational(1, x);
        CHECK(core::density(Deadlines({2, 3, x})) == expect);
    }
}

TEST_CASE("density drops when any deadline grows") {
    Rng rng(2024);
    for (int it = 0; it < 50; ++it) {
        auto d = testutil::random_deadlines(rng, rng.range(1, 6), 12);
        auto base = core::density(d);
        auto values = d.values();
        std::size_t at = static_cast<std::size_t>(
            rng.range(0, static_cast<std::int64_t>(values.size()) - 1));
        values[at] += rng.range(1, 5);
        CHECK(core::density(Deadlines(values)) < base);
    }
}

namespace {

// every way of tagging one occurrence per task as primary
bool some_labeling_accepted(const Deadlines& d, const Schedule& plain) {
    std::size_t n = d.size();
    std::vector<std::vector<std::int64_t>> occ(n + 1);
    for (const auto& e : plain.entries())
        occ[static_cast<std::size_t>(e.task)].push_back(e.pos);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<core::ScheduleEntry> entries;
        for (std::size_t t = 1; t <= n; ++t) {
            bool first_primary = (mask >> (t - 1)) & 1;
            entries.push_back({occ[t][0], static_cast<std::int64_t>(t),
                               first_primary ? Role::Primary
                                             : Role::Secondary});
            entries.push_back({occ[t][1], static_cast<std::int64_t>(t),
                               first_primary ? Role::Secondary
                                             : Role::Primary});
        }
        if (core::verify_two_visits(d, Schedule(std::move(entries))).feasible)
            return true;
    }
    return false;
}

void all_plain_schedules(std::size_t n, std::vector<std::int64_t>& cur,
                         std::vector<std::int64_t>& left,
                         std::vector<std::vector<std::int64_t>>& out) {
    if (cur.size() == 2 * n) {
        out.push_back(cur);
        return;
    }
    for (std::size_t t = 0; t < n; ++t) {
        if (left[t] == 0) continue;
        --left[t];
        cur.push_back(static_cast<std::int64_t>(t) + 1);
        all_plain_schedules(n, cur, left, out);
        cur.pop_back();
        ++left[t];
    }
}

}  // namespace

TEST_CASE("plain k=2 feasibility equals feasibility of some role labeling") {
    Rng rng(77);
    for (int it = 0; it < 12; ++it) {
        std::int64_t n = rng.range(1, 4);
        auto d = testutil::random_deadlines(rng, n, 2 * n);
        std::vector<std::vector<std::int64_t>> schedules;
        std::vector<std::int64_t> cur;
        std::vector<std::int64_t> left(static_cast<std::size_t>(n), 2);
        all_plain_schedules(static_cast<std::size_t>(n), cur, left, schedules);
        for (const auto& tasks : schedules) {
            Schedule plain = Schedule::from_tasks(tasks);
            bool as_k = core::verify_k_visits({d, 2}, plain).feasible;
            CHECK(as_k == some_labeling_accepted(d, plain));
        }
    }
}

TEST_CASE("normalize preserves the oracle verdict on random instances") {
    Rng rng(99);
    for (int it = 0; it < 40; ++it) {
        std::int64_t n = rng.range(1, 5);
        std::int64_t k = rng.range(1, 3);
        auto d = testutil::random_deadlines(rng, n, 3 * n + 4);
        auto trimmed = core::normalize(d, k);
        auto a = oracle::k_visits_decide({d, k});
        auto b = oracle::k_visits_decide({trimmed, k});
        REQUIRE(a.status != oracle::DecideStatus::Refused);
        REQUIRE(b.status != oracle::DecideStatus::Refused);
        CHECK(a.status == b.status);
    }
}

TEST_CASE("no k-schedule implies no (k+1)-schedule") {
    Rng rng(123);
    int checked = 0;
    for (int it = 0; it < 60 && checked < 12; ++it) {
        std::int64_t n = rng.range(2, 4);
        auto d = testutil::random_deadlines(rng, n, n);
        std::int64_t k = rng.range(1, 2);
        auto a = oracle::k_visits_decide({d, k});
        if (a.status != oracle::DecideStatus::No) continue;
        ++checked;
        auto b = oracle::k_visits_decide({d, k + 1});
        CHECK(b.status == oracle::DecideStatus::No);
    }
    CHECK(checked > 0);
}
