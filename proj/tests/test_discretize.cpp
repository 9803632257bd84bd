#include "doctest.h"

#include "pinwheel/discretize.hpp"
#include "test_util.hpp"

using namespace pinwheel;
using core::Deadlines;
using discretize::DiscretizedSequence;

TEST_CASE("discretized sequence fixtures") {
    CHECK(discretize::discretized_sequence(
              Deadlines({3, 5, 5, 7, 7, 7, 15, 15, 16}))
              .positions ==
          std::vector<std::int64_t>{2, 3, 4, 5, 6, 7, 14, 15, 16});
    CHECK(discretize::discretized_sequence(Deadlines({2, 4, 5, 8, 8, 10}))
              .positions ==
          std::vector<std::int64_t>{2, 4, 5, 7, 8, 10});
    // padding with doubled larger values flattens the sequence into 1..14
    std::vector<std::int64_t> expect(14);
    for (int i = 0; i < 14; ++i) expect[static_cast<std::size_t>(i)] = i + 1;
    CHECK(discretize::discretized_sequence(
              Deadlines({2, 4, 5, 8, 8, 10, 11, 11, 12, 12, 13, 13, 14, 14}))
              .positions == expect);
}

TEST_CASE("position deficit detection") {
    CHECK_FALSE(discretize::first_position_deficit(Deadlines({1, 2, 3})));
    CHECK(discretize::first_position_deficit(Deadlines({1, 1})) == 2);
    CHECK(discretize::first_position_deficit(Deadlines({2, 2, 2})) == 3);
    CHECK_THROWS_AS(discretize::discretized_sequence(Deadlines({1, 1})),
                    std::invalid_argument);
}

TEST_CASE("clusters are maximal consecutive runs") {
    auto spans = discretize::clusters(
        DiscretizedSequence{{2, 3, 4, 5, 6, 7, 14, 15, 16}});
    REQUIRE(spans.size() == 2);
    CHECK(spans[0] == discretize::ClusterSpan{1, 6, 2, 7});
    CHECK(spans[1] == discretize::ClusterSpan{7, 9, 14, 16});

    auto single = discretize::clusters(DiscretizedSequence{{5}});
    REQUIRE(single.size() == 1);
    CHECK(single[0] == discretize::ClusterSpan{1, 1, 5, 5});
}

TEST_CASE("clusters of the eleven-task example") {
    Deadlines d({1, 4, 5, 6, 6, 7, 15, 16, 18, 18, 18});
    auto seq = discretize::discretized_sequence(d);
    CHECK(seq.positions ==
          std::vector<std::int64_t>{1, 3, 4, 5, 6, 7, 14, 15, 16, 17, 18});
    auto spans = discretize::clusters(seq);
    REQUIRE(spans.size() == 3);
    CHECK(spans[0] == discretize::ClusterSpan{1, 1, 1, 1});
    CHECK(spans[1] == discretize::ClusterSpan{2, 6, 3, 7});
    CHECK(spans[2] == discretize::ClusterSpan{7, 11, 14, 18});
}

TEST_CASE("complement targets") {
    CHECK(discretize::complement_targets(DiscretizedSequence{{1, 2}}, 4) ==
          std::vector<std::int64_t>{3, 4});
    CHECK(discretize::complement_targets(DiscretizedSequence{{2, 3, 4}}, 6) ==
          std::vector<std::int64_t>{1, 5, 6});
    Deadlines d({1, 4, 5, 6, 6, 7, 15, 16, 18, 18, 18});
    CHECK(discretize::complement_targets(discretize::discretized_sequence(d),
                                         22) ==
          std::vector<std::int64_t>{2, 8, 9, 10, 11, 12, 13, 19, 20, 21, 22});
    CHECK_THROWS_AS(
        discretize::complement_targets(DiscretizedSequence{{3}}, 2),
        std::invalid_argument);
}

TEST_CASE("simple sets discretize to themselves") {
    Rng rng(11);
    for (int it = 0; it < 60; ++it) {
        std::int64_t n = rng.range(1, 8);
        std::vector<std::int64_t> vals;
        std::int64_t v = 0;
        for (std::int64_t i = 0; i < n; ++i) {
            v += rng.range(1, 4);
            vals.push_back(v);
        }
        // need d_i >= i for the sequence to exist; shift up when violated
        for (std::size_t i = 0; i < vals.size(); ++i)
            vals[i] = std::max(vals[i], static_cast<std::int64_t>(i) + 1);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        Deadlines d(vals);
        CHECK(discretize::discretized_sequence(d).positions == d.values());
    }
}

TEST_CASE("each cluster is the discretized sequence of its deadlines") {
    Rng rng(12);
    for (int it = 0; it < 80; ++it) {
        std::int64_t n = rng.range(1, 12);
        auto d = testutil::random_deadlines(rng, n, 2 * n);
        if (discretize::first_position_deficit(d)) continue;
        auto seq = discretize::discretized_sequence(d);
        for (const auto& span : discretize::clusters(seq)) {
            std::vector<std::int64_t> sub(
                d.values().begin() +
                    static_cast<std::ptrdiff_t>(span.start_index - 1),
                d.values().begin() +
                    static_cast<std::ptrdiff_t>(span.end_index));
            auto sub_seq = discretize::discretized_sequence(Deadlines(sub));
            std::vector<std::int64_t> span_vals(
                seq.positions.begin() +
                    static_cast<std::ptrdiff_t>(span.start_index - 1),
                seq.positions.begin() +
                    static_cast<std::ptrdiff_t>(span.end_index));
            CHECK(sub_seq.positions == span_vals);
        }
    }
}

TEST_CASE("complement of a normalized two-visit instance has n targets") {
    Rng rng(13);
    for (int it = 0; it < 40; ++it) {
        std::int64_t n = rng.range(1, 10);
        auto d = testutil::random_deadlines(rng, n, 2 * n);
        if (discretize::first_position_deficit(d)) continue;
        auto seq = discretize::discretized_sequence(d);
        CHECK(discretize::complement_targets(seq, 2 * n).size() ==
              static_cast<std::size_t>(n));
    }
}

TEST_CASE("raising one deadline never lowers any discretized position") {
    Rng rng(14);
    for (int it = 0; it < 60; ++it) {
        std::int64_t n = rng.range(1, 8);
        auto d = testutil::random_deadlines(rng, n, 2 * n);
        if (discretize::first_position_deficit(d)) continue;
        auto before = discretize::discretized_sequence(d).positions;
        auto vals = d.values();
        std::size_t at = static_cast<std::size_t>(
            rng.range(0, static_cast<std::int64_t>(n) - 1));
        vals[at] += rng.range(1, 4);
        auto after =
            discretize::discretized_sequence(Deadlines(vals)).positions;
        for (std::size_t i = 0; i < before.size(); ++i)
            CHECK(after[i] >= before[i]);
    }
}
