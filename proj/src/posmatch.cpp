#include "pinwheel/posmatch.hpp"

#include <algorithm>
#include <stdexcept>

namespace pinwheel::posmatch {

PMInstance PMInstance::make(core::Deadlines deadlines,
                            std::vector<std::int64_t> targets) {
    std::sort(targets.begin(), targets.end());
    if (std::adjacent_find(targets.begin(), targets.end()) != targets.end())
        throw std::invalid_argument("targets must be a simple set");
    for (std::int64_t t : targets)
        if (t < 1) throw std::invalid_argument("targets must be positive");
    if (targets.size() != deadlines.size())
        throw std::invalid_argument("|D| and |T| must match");
    auto seq = discretize::discretized_sequence(deadlines);
    return PMInstance{std::move(deadlines), std::move(seq),
                      std::move(targets)};
}

void validate_matching(const PMInstance& inst, const PMMatching& m) {
    const std::size_t n = inst.size();
    if (m.triplets.size() != n)
        throw std::logic_error("matching size mismatch");
    std::vector<char> used_d(n, 0), used_a(n, 0), used_t(n, 0);
    for (const Triplet& tr : m.triplets) {
        if (tr.d_index >= n || tr.a_index >= n || tr.t_index >= n)
            throw std::logic_error("matching index out of range");
        if (used_d[tr.d_index]++ || used_a[tr.a_index]++ || used_t[tr.t_index]++)
            throw std::logic_error("matching reuses an element");
        if (tr.d_value != inst.deadlines[tr.d_index] ||
            tr.a_value != inst.seq[tr.a_index] ||
            tr.t_value != inst.targets[tr.t_index])
            throw std::logic_error("matching value/index disagreement");
        if (tr.d_value < tr.a_value)
            throw std::logic_error("matching violates d >= a");
        if (tr.d_value + tr.a_value < tr.t_value)
            throw std::logic_error("matching violates d + a >= t");
    }
}

std::string solve_status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Feasible: return "feasible";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::ProbablyInfeasible: return "probably-infeasible";
        case SolveStatus::Undecided: return "undecided";
    }
    return "undecided";
}

std::optional<Strategy> strategy_from_name(const std::string& name) {
    if (name == "auto") return Strategy::Auto;
    if (name == "simple") return Strategy::Simple;
    if (name == "brute") return Strategy::Brute;
    if (name == "randomized") return Strategy::Randomized;
    return std::nullopt;
}

TwoVisitsReduction two_visits_to_pm(const core::Deadlines& deadlines) {
    const std::int64_t n = static_cast<std::int64_t>(deadlines.size());
    if (!deadlines.empty() && deadlines.max() > 2 * n)
        throw std::invalid_argument("input not normalized: deadline > 2n");
    if (discretize::first_position_deficit(deadlines))
        return {true, std::nullopt};
    auto seq = discretize::discretized_sequence(deadlines);
    auto targets = discretize::complement_targets(seq, 2 * n);
    return {false, PMInstance{deadlines, std::move(seq), std::move(targets)}};
}

OneOrTwoReduction one_or_two_to_pm(const core::OneOrTwoInstance& inst) {
    const std::int64_t horizon = inst.horizon();
    const std::int64_t m =
        static_cast<std::int64_t>(inst.single_deadlines.size());
    if ((!inst.single_deadlines.empty() &&
         inst.single_deadlines.max() > horizon) ||
        (!inst.double_deadlines.empty() &&
         inst.double_deadlines.max() > horizon))
        throw std::invalid_argument("input not normalized: deadline > m+2n");

    OneOrTwoReduction out;
    if (discretize::first_position_deficit(inst.double_deadlines)) {
        out.trivially_infeasible = true;
        out.reason = "double deadlines leave no primary positions";
        return out;
    }
    auto seq = discretize::discretized_sequence(inst.double_deadlines);
    auto free_positions = discretize::complement_targets(seq, horizon);

    // Singles, largest deadline first, each to the latest free slot it can
    // still reach.
    std::vector<char> taken(free_positions.size(), 0);
    std::vector<std::pair<std::int64_t, std::int64_t>> assignments;
    for (std::int64_t task = m; task >= 1; --task) {
        std::int64_t d =
            inst.single_deadlines[static_cast<std::size_t>(task - 1)];
        auto it = std::upper_bound(free_positions.begin(),
                                   free_positions.end(), d);
        bool placed = false;
        while (it != free_positions.begin()) {
            --it;
            std::size_t idx =
                static_cast<std::size_t>(it - free_positions.begin());
            if (!taken[idx]) {
                taken[idx] = 1;
                assignments.emplace_back(task, *it);
                placed = true;
                break;
            }
        }
        if (!placed) {
            out.trivially_infeasible = true;
            out.reason = "single task " + std::to_string(task) +
                         " has no feasible position";
            return out;
        }
    }
    std::sort(assignments.begin(), assignments.end());
    out.placement.assignments = std::move(assignments);

    std::vector<std::int64_t> targets;
    for (std::size_t i = 0; i < free_positions.size(); ++i)
        if (!taken[i]) targets.push_back(free_positions[i]);
    out.pm = PMInstance{inst.double_deadlines, std::move(seq),
                        std::move(targets)};
    return out;
}

std::vector<ClusterPart> split_by_clusters(const PMInstance& inst) {
    std::vector<ClusterPart> parts;
    auto spans = discretize::clusters(inst.seq);
    std::size_t t_offset = 0;
    for (const auto& span : spans) {
        std::size_t lo = span.start_index - 1;
        std::size_t hi = span.end_index;  // exclusive
        std::vector<std::int64_t> d(inst.deadlines.values().begin() +
                                        static_cast<std::ptrdiff_t>(lo),
                                    inst.deadlines.values().begin() +
                                        static_cast<std::ptrdiff_t>(hi));
        std::vector<std::int64_t> a(inst.seq.positions.begin() +
                                        static_cast<std::ptrdiff_t>(lo),
                                    inst.seq.positions.begin() +
                                        static_cast<std::ptrdiff_t>(hi));
        std::vector<std::int64_t> t(inst.targets.begin() +
                                        static_cast<std::ptrdiff_t>(t_offset),
                                    inst.targets.begin() +
                                        static_cast<std::ptrdiff_t>(
                                            t_offset + span.size()));
        parts.push_back({PMInstance{core::Deadlines(std::move(d)),
                                    discretize::DiscretizedSequence{std::move(a)},
                                    std::move(t)},
                         lo, t_offset});
        t_offset += span.size();
    }
    return parts;
}

SolveResult solve_simple_set(const PMInstance& inst) {
    if (!inst.deadlines.is_simple())
        throw std::invalid_argument(
            "solve_simple_set called with duplicate deadlines");
    const std::size_t n = inst.size();
    PMMatching m;
    for (std::size_t i = 0; i < n; ++i) {
        // A = D for a simple set, so d_i pairs with a_i = d_i; the sums
        // 2*d_i are already sorted, as are the targets.
        if (inst.targets[i] > 2 * inst.deadlines[i])
            return {SolveStatus::Infeasible, std::nullopt,
                    "target " + std::to_string(inst.targets[i]) +
                        " exceeds 2*" + std::to_string(inst.deadlines[i])};
        m.triplets.push_back({inst.deadlines[i], inst.seq[i], inst.targets[i],
                              i, i, i});
    }
    validate_matching(inst, m);
    return {SolveStatus::Feasible, std::move(m), ""};
}

namespace {

// Depth-first enumeration over D->A assignments, positions taken in
// descending order. Available deadline values are grouped by value;
// equal values are interchangeable so only one copy branches.
struct BruteSearch {
    const PMInstance& inst;
    std::vector<std::int64_t> values;        // distinct deadline values, descending
    std::vector<std::vector<std::size_t>> idx_by_value;  // instance indices per value
    std::vector<std::size_t> used_per_value;
    std::vector<std::size_t> a_order;        // a-indices, value-descending
    // committed pairs, one per processed position
    std::vector<std::size_t> chosen_value_slot;
    std::vector<std::int64_t> sums_desc;     // committed sums, kept descending
    bool found = false;
    PMMatching result;

    explicit BruteSearch(const PMInstance& i) : inst(i) {}

    bool remaining_can_cover(std::size_t depth, std::int64_t a_current) {
        // Largest sum any not-yet-committed pair can reach.
        std::int64_t max_avail = -1;
        for (std::size_t v = 0; v < values.size(); ++v) {
            if (used_per_value[v] < idx_by_value[v].size()) {
                max_avail = values[v];
                break;
            }
        }
        std::int64_t bound = (max_avail < 0) ? -1 : max_avail + a_current;
        const auto& t = inst.targets;
        auto first_above = std::upper_bound(t.begin(), t.end(), bound);
        std::size_t need = static_cast<std::size_t>(t.end() - first_above);
        if (need > depth) return false;
        // The `need` largest targets must already be dominated pairwise.
        for (std::size_t j = 0; j < need; ++j)
            if (sums_desc[j] < t[t.size() - 1 - j]) return false;
        return true;
    }

    void commit_leaf() {
        // Sorted sums against sorted targets; the pointwise check is the
        // Hall condition for matching sums onto smaller-or-equal targets.
        const std::size_t n = inst.size();
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::vector<std::int64_t> sums(n);
        std::vector<std::size_t> used_cursor(values.size(), 0);
        for (std::size_t depth = 0; depth < n; ++depth) {
            std::size_t v = chosen_value_slot[depth];
            std::size_t a_i = a_order[depth];
            sums[depth] = values[v] + inst.seq[a_i];
        }
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return sums[x] < sums[y];
        });
        for (std::size_t j = 0; j < n; ++j)
            if (sums[order[j]] < inst.targets[j]) return;

        // Assign concrete deadline indices per value group, then targets in
        // ascending-sum order.
        std::vector<Triplet> trip(n);
        for (std::size_t depth = 0; depth < n; ++depth) {
            std::size_t v = chosen_value_slot[depth];
            std::size_t a_i = a_order[depth];
            std::size_t d_i = idx_by_value[v][used_cursor[v]++];
            trip[depth] = Triplet{values[v], inst.seq[a_i], 0, d_i, a_i, 0};
        }
        for (std::size_t j = 0; j < n; ++j) {
            trip[order[j]].t_value = inst.targets[j];
            trip[order[j]].t_index = j;
        }
        result.triplets = std::move(trip);
        found = true;
    }

    void dfs(std::size_t depth) {
        if (found) return;
        const std::size_t n = inst.size();
        if (depth == n) {
            commit_leaf();
            return;
        }
        std::int64_t a = inst.seq[a_order[depth]];
        if (!remaining_can_cover(depth, a)) return;
        for (std::size_t v = 0; v < values.size(); ++v) {
            if (values[v] < a) break;  // descending: nothing smaller fits
            if (used_per_value[v] == idx_by_value[v].size()) continue;
            ++used_per_value[v];
            chosen_value_slot.push_back(v);
            std::int64_t sum = values[v] + a;
            auto it = std::lower_bound(sums_desc.begin(), sums_desc.end(), sum,
                                       std::greater<>());
            sums_desc.insert(it, sum);
            dfs(depth + 1);
            sums_desc.erase(std::find(sums_desc.begin(), sums_desc.end(), sum));
            chosen_value_slot.pop_back();
            --used_per_value[v];
            if (found) return;
        }
    }
};

}  // namespace

SolveResult solve_brute_force(const PMInstance& inst, std::size_t cap) {
    if (inst.size() > cap)
        return {SolveStatus::Undecided, std::nullopt,
                "instance size " + std::to_string(inst.size()) +
                    " above brute-force cap " + std::to_string(cap)};
    BruteSearch search(inst);
    const auto& d = inst.deadlines.values();
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i == 0 || d[i] != d[i - 1]) {
            search.values.push_back(d[i]);
            search.idx_by_value.emplace_back();
        }
        search.idx_by_value.back().push_back(i);
    }
    std::reverse(search.values.begin(), search.values.end());
    std::reverse(search.idx_by_value.begin(), search.idx_by_value.end());
    search.used_per_value.assign(search.values.size(), 0);
    search.a_order.resize(inst.size());
    for (std::size_t i = 0; i < inst.size(); ++i)
        search.a_order[i] = inst.size() - 1 - i;  // A ascending, so reverse

    search.dfs(0);
    if (!search.found)
        return {SolveStatus::Infeasible, std::nullopt, ""};
    validate_matching(inst, search.result);
    return {SolveStatus::Feasible, std::move(search.result), ""};
}

core::Schedule pm_to_schedule(std::span<const PMMatching> matchings,
                              const std::optional<SinglePlacement>& placement,
                              std::int64_t horizon) {
    std::vector<core::ScheduleEntry> entries;
    std::vector<char> occupied(static_cast<std::size_t>(horizon) + 1, 0);
    auto place = [&](std::int64_t pos, std::int64_t task, core::Role role) {
        if (pos < 1 || pos > horizon)
            throw std::logic_error("schedule position outside horizon");
        if (occupied[static_cast<std::size_t>(pos)])
            throw std::logic_error("schedule positions overlap");
        occupied[static_cast<std::size_t>(pos)] = 1;
        entries.push_back({pos, task, role});
    };

    std::int64_t m = 0;
    if (placement) {
        m = static_cast<std::int64_t>(placement->assignments.size());
        for (const auto& [task, pos] : placement->assignments)
            place(pos, task, core::Role::Single);
    }
    for (const auto& matching : matchings) {
        for (const Triplet& tr : matching.triplets) {
            std::int64_t task = m + static_cast<std::int64_t>(tr.d_index) + 1;
            place(tr.a_value, task, core::Role::Primary);
            place(tr.t_value, task, core::Role::Secondary);
        }
    }
    return core::Schedule(std::move(entries));
}

}  // namespace pinwheel::posmatch
