#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pinwheel/core.hpp"

namespace pinwheel::oracle {

/// Extra restrictions layered on top of plain feasibility. Constraints only
/// ever shrink the schedule space, never relax it.
struct SearchConstraints {
    /// Every position of the discretized sequence must host a distinct task.
    bool distinct_tasks_on_discretized = false;
    /// First visits must occur in non-decreasing deadline order (ties free).
    bool sorted_first_visits = false;

    bool any() const {
        return distinct_tasks_on_discretized || sorted_first_visits;
    }
};

enum class DecideStatus { Yes, No, Refused };

struct DecideResult {
    DecideStatus status = DecideStatus::Refused;
    std::optional<core::Schedule> witness;  // re-verified before return
    std::uint64_t states_explored = 0;
    std::string note;
};

struct OracleCaps {
    std::uint64_t bfs_state_cap = 2'000'000;   // estimate gate for the BFS route
    std::uint64_t dfs_node_cap = 200'000'000;  // expansion budget for the DFS route
};

/// Exact decision. Uses breadth-first reachability over state vectors when
/// the estimate prod(d_i) * prod(k+1) fits the cap, otherwise depth-first
/// search with memoized dead states. Refuses (never guesses) when the
/// budget runs out or the state does not pack into 128 bits.
DecideResult k_visits_decide(const core::KVisitsInstance& inst,
                             const SearchConstraints& constraints = {},
                             const OracleCaps& caps = {});

/// The two routes individually, for cross-checking.
DecideResult k_visits_decide_bfs(const core::KVisitsInstance& inst,
                                 const SearchConstraints& constraints = {},
                                 const OracleCaps& caps = {});
DecideResult k_visits_decide_dfs(const core::KVisitsInstance& inst,
                                 const SearchConstraints& constraints = {},
                                 const OracleCaps& caps = {});

/// Role-labeled two-visit search. With `primaries_on_discretized` the
/// primary visits are confined to the positions of the discretized
/// sequence (secondaries to the complement).
DecideResult two_visits_search(const core::Deadlines& deadlines,
                               bool primaries_on_discretized);

/// Role-labeled search for the one-or-two variant. With `canonical_form`
/// the singles sit at their latest-feasible greedy positions, primaries on
/// the discretized sequence, secondaries on the rest.
DecideResult one_or_two_search(const core::OneOrTwoInstance& inst,
                               bool canonical_form);

/// The fixed three-visit instance D = {2,5,6,7,8,9,10,11} and the three
/// facts about it: its known schedule verifies, and both constrained
/// searches come back infeasible. Throws std::logic_error if any check
/// fails.
struct CounterexampleReport {
    core::KVisitsInstance instance;
    core::Schedule schedule;
    bool schedule_verifies = false;
    bool distinct_constrained_infeasible = false;
    bool sorted_constrained_infeasible = false;
    std::uint64_t states_distinct = 0;
    std::uint64_t states_sorted = 0;
    double seconds = 0.0;
};
CounterexampleReport counterexample_3visits(const OracleCaps& caps = {});

/// Random two-visit instances decided twice: through the plain k=2 state
/// search and through Position Matching brute force on the reduction.
/// Includes three pinned instances. Any disagreement is a hard failure.
struct PmEquivReport {
    std::uint64_t total = 0;
    std::uint64_t yes_count = 0;
    std::uint64_t no_count = 0;
    std::uint64_t mismatches = 0;
    std::vector<std::string> mismatch_instances;
};
PmEquivReport pm_equiv_sweep(std::uint64_t count, std::int64_t max_n,
                             std::uint64_t seed);

}  // namespace pinwheel::oracle
