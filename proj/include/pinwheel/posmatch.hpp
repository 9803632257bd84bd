#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pinwheel/core.hpp"
#include "pinwheel/discretize.hpp"

namespace pinwheel::posmatch {

/// Position Matching instance: a deadline multiset D, its discretized
/// sequence A, and a simple target set T with |D| = |A| = |T|. A solution
/// matches every d, a, t exactly once with d >= a and d + a >= t.
struct PMInstance {
    core::Deadlines deadlines;
    discretize::DiscretizedSequence seq;
    std::vector<std::int64_t> targets;  // sorted, duplicate-free

    /// Validates the shape and derives A; throws std::invalid_argument.
    static PMInstance make(core::Deadlines deadlines,
                           std::vector<std::int64_t> targets);

    std::size_t size() const { return deadlines.size(); }
};

/// One matched triplet. Indices are 0-based into the instance's sorted
/// arrays; values are carried alongside for reporting.
struct Triplet {
    std::int64_t d_value = 0;
    std::int64_t a_value = 0;
    std::int64_t t_value = 0;
    std::size_t d_index = 0;
    std::size_t a_index = 0;
    std::size_t t_index = 0;
};

struct PMMatching {
    std::vector<Triplet> triplets;
};

/// Bijection shape plus both matching inequalities; throws std::logic_error
/// on any breach. Every solver runs its result through this before return.
void validate_matching(const PMInstance& inst, const PMMatching& m);

/// Positions of the single-visit tasks: (task id 1..m, schedule position).
struct SinglePlacement {
    std::vector<std::pair<std::int64_t, std::int64_t>> assignments;
};

enum class SolveStatus { Feasible, Infeasible, ProbablyInfeasible, Undecided };

std::string solve_status_name(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::Undecided;
    std::optional<PMMatching> matching;
    std::string note;
};

struct TwoVisitsReduction {
    bool trivially_infeasible = false;  // some d_j < j: first visits cannot fit
    std::optional<PMInstance> pm;
};

/// Two-visit instance to Position Matching: A = discretized sequence,
/// T = [2n] \ A. Requires normalized input (all d_i <= 2n).
TwoVisitsReduction two_visits_to_pm(const core::Deadlines& deadlines);

struct OneOrTwoReduction {
    bool trivially_infeasible = false;
    std::string reason;
    std::optional<PMInstance> pm;
    SinglePlacement placement;
};

/// A = discretized sequence of the double deadlines; single visits go
/// greedily, largest deadline first, each to the latest free position of
/// [m+2n] \ A within its deadline; T is what remains. Requires normalized
/// input (all deadlines <= m + 2n).
OneOrTwoReduction one_or_two_to_pm(const core::OneOrTwoInstance& inst);

struct ClusterPart {
    PMInstance instance;
    std::size_t d_offset = 0;  // index of this cluster's first deadline in the parent
    std::size_t t_offset = 0;  // index of this cluster's first target in the parent
};

/// One sub-instance per cluster of A. Deadlines split by cluster index
/// range; targets split block-wise in sorted order (the first cluster takes
/// the smallest |cluster| targets, and so on). The parent is feasible iff
/// every part is.
std::vector<ClusterPart> split_by_clusters(const PMInstance& inst);

/// D simple means A = D, so the d-a pairs are forced; feasible iff the
/// sorted targets are dominated pointwise by the sorted sums 2*d_i.
/// Throws std::invalid_argument when D has duplicates.
SolveResult solve_simple_set(const PMInstance& inst);

/// Exhaustive search over D->A assignments with d >= a, processing A
/// descending over the still-assignable deadline values; at the leaf the
/// sorted sums must dominate the sorted targets pointwise. Inner nodes
/// prune when some target already exceeds every sum the remaining pairs
/// could reach. Refuses instances larger than `cap`.
SolveResult solve_brute_force(const PMInstance& inst, std::size_t cap = 10);

enum class Strategy { Auto, Simple, Brute, Randomized };

std::optional<Strategy> strategy_from_name(const std::string& name);

struct SolveConfig {
    Strategy strategy = Strategy::Auto;
    std::uint64_t seed = 0;
    int trials = 5;
    std::size_t brute_cap = 10;
    std::size_t p_cap = 3;  // max distinct deadline values per cluster for the randomized route
};

/// Cluster-by-cluster dispatch: simple-set solver when the cluster's
/// deadlines are distinct, the randomized route when its distinct-value
/// count fits the p-cap, brute force when the size fits its cap, and an
/// explicit Undecided otherwise. Undecided is a legal outcome, never a
/// wrong answer.
SolveResult solve_auto(const PMInstance& inst, const SolveConfig& config);

/// Builds the schedule: primary of (d,a,t) at position a, secondary at t,
/// singles at their placed positions. With a placement of m singles, double
/// task ids are offset by m. Throws std::logic_error on overlap.
core::Schedule pm_to_schedule(std::span<const PMMatching> matchings,
                              const std::optional<SinglePlacement>& placement,
                              std::int64_t horizon);

}  // namespace pinwheel::posmatch
