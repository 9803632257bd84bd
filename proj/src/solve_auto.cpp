#include <stdexcept>

#include "pinwheel/posmatch.hpp"
#include "pinwheel/randmatch.hpp"
#include "pinwheel/rng.hpp"

namespace pinwheel::posmatch {

namespace {

SolveResult solve_cluster(const PMInstance& inst, const SolveConfig& config,
                          std::uint64_t cluster_seed) {
    if (inst.deadlines.is_simple()) return solve_simple_set(inst);
    if (inst.deadlines.distinct_count() <= config.p_cap)
        return randmatch::solve_pm_randomized(inst, cluster_seed,
                                              config.trials, config.p_cap);
    if (inst.size() <= config.brute_cap)
        return solve_brute_force(inst, config.brute_cap);
    return {SolveStatus::Undecided, std::nullopt,
            "cluster size " + std::to_string(inst.size()) +
                " above brute cap with " +
                std::to_string(inst.deadlines.distinct_count()) +
                " distinct values above p-cap"};
}

}  // namespace

SolveResult solve_auto(const PMInstance& inst, const SolveConfig& config) {
    switch (config.strategy) {
        case Strategy::Simple:
            return solve_simple_set(inst);
        case Strategy::Brute:
            return solve_brute_force(inst, config.brute_cap);
        case Strategy::Randomized:
            return randmatch::solve_pm_randomized(inst, config.seed,
                                                  config.trials, config.p_cap);
        case Strategy::Auto:
            break;
    }

    auto parts = split_by_clusters(inst);
    PMMatching merged;
    bool any_probable_no = false;
    bool any_undecided = false;
    std::string note;
    for (std::size_t c = 0; c < parts.size(); ++c) {
        std::uint64_t cluster_seed =
            Rng::stream(config.seed, "auto-cluster", c).next();
        auto r = solve_cluster(parts[c].instance, config, cluster_seed);
        switch (r.status) {
            case SolveStatus::Infeasible:
                return {SolveStatus::Infeasible, std::nullopt,
                        "cluster " + std::to_string(c) + ": " + r.note};
            case SolveStatus::ProbablyInfeasible:
                any_probable_no = true;
                note = "cluster " + std::to_string(c) + ": " + r.note;
                break;
            case SolveStatus::Undecided:
                any_undecided = true;
                note = "cluster " + std::to_string(c) + ": " + r.note;
                break;
            case SolveStatus::Feasible:
                for (Triplet tr : r.matching->triplets) {
                    tr.d_index += parts[c].d_offset;
                    tr.a_index += parts[c].d_offset;
                    tr.t_index += parts[c].t_offset;
                    merged.triplets.push_back(tr);
                }
                break;
        }
    }
    if (any_probable_no)
        return {SolveStatus::ProbablyInfeasible, std::nullopt, note};
    if (any_undecided) return {SolveStatus::Undecided, std::nullopt, note};
    validate_matching(inst, merged);
    return {SolveStatus::Feasible, std::move(merged), ""};
}

}  // namespace pinwheel::posmatch
