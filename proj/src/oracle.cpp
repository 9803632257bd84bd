#include "pinwheel/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "pinwheel/discretize.hpp"
#include "pinwheel/posmatch.hpp"
#include "pinwheel/rng.hpp"

namespace pinwheel::oracle {

namespace {

using u128 = unsigned __int128;

struct U128Hash {
    std::size_t operator()(u128 x) const {
        std::uint64_t lo = static_cast<std::uint64_t>(x);
        std::uint64_t hi = static_cast<std::uint64_t>(x >> 64);
        std::uint64_t h = lo * 0x9e3779b97f4a7c15ULL;
        h ^= (hi + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
        h *= 0xbf58476d1ce4e5b9ULL;
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

int bit_width_of(std::int64_t v) {
    return std::bit_width(static_cast<std::uint64_t>(v));
}

// State of a k-visit search: per task the remaining slack until its next
// visit must have happened (0 once finished) and the visits still owed.
// With the distinct-positions constraint the set of tasks already used on
// discretized positions joins the state.
struct SearchSpace {
    const core::KVisitsInstance& inst;
    SearchConstraints constraints;
    std::vector<std::int64_t> d;
    std::int64_t k;
    std::size_t n;
    int bits_r = 0, bits_v = 0;
    std::vector<char> pos_on_seq;  // 1-based horizon flags for constraint 1

    std::vector<std::int64_t> r, v;
    std::uint64_t used_mask = 0;

    explicit SearchSpace(const core::KVisitsInstance& i,
                         const SearchConstraints& c)
        : inst(i), constraints(c), d(i.deadlines.values()), k(i.k),
          n(i.deadlines.size()) {
        for (std::int64_t dv : d) bits_r = std::max(bits_r, bit_width_of(dv));
        bits_v = bit_width_of(k);
        if (constraints.distinct_tasks_on_discretized) {
            pos_on_seq.assign(static_cast<std::size_t>(inst.horizon()) + 1, 0);
            auto seq = discretize::discretized_sequence(inst.deadlines);
            for (std::int64_t p : seq.positions)
                if (p <= inst.horizon())
                    pos_on_seq[static_cast<std::size_t>(p)] = 1;
        }
        r.assign(n, 0);
        v.assign(n, 0);
        for (std::size_t i2 = 0; i2 < n; ++i2) {
            r[i2] = d[i2];
            v[i2] = k;
        }
    }

    bool packable() const {
        std::size_t bits = n * static_cast<std::size_t>(bits_r + bits_v);
        if (constraints.distinct_tasks_on_discretized) bits += n;
        return n <= 64 && bits <= 128;
    }

    u128 pack() const {
        u128 key = 0;
        for (std::size_t i = 0; i < n; ++i) {
            key = (key << bits_r) | static_cast<u128>(r[i]);
            key = (key << bits_v) | static_cast<u128>(v[i]);
        }
        if (constraints.distinct_tasks_on_discretized)
            key = (key << n) | static_cast<u128>(used_mask);
        return key;
    }

    bool done() const {
        for (std::size_t i = 0; i < n; ++i)
            if (v[i] != 0) return false;
        return true;
    }

    std::int64_t position_done() const {  // visits already placed
        std::int64_t total = 0;
        for (std::size_t i = 0; i < n; ++i) total += k - v[i];
        return total;
    }

    // Pigeonhole over next-visit slacks: at most t active tasks may have
    // slack <= t.
    bool deadlocked() const {
        std::vector<std::int64_t> slacks;
        for (std::size_t i = 0; i < n; ++i)
            if (v[i] > 0) slacks.push_back(r[i]);
        std::sort(slacks.begin(), slacks.end());
        for (std::size_t t = 0; t < slacks.size(); ++t)
            if (slacks[t] < static_cast<std::int64_t>(t) + 1) return true;
        return false;
    }

    bool first_visit_allowed(std::size_t i) const {
        if (!constraints.sorted_first_visits || v[i] != k) return true;
        for (std::size_t j = 0; j < n; ++j)
            if (d[j] < d[i] && v[j] == k) return false;
        return true;
    }

    // Candidate tasks for the next position, urgent first, symmetric
    // duplicates removed. Empty means dead end.
    std::vector<std::size_t> candidates(std::int64_t next_pos) const {
        std::size_t must_count = 0;
        std::size_t must_task = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (v[i] > 0 && r[i] == 1) {
                ++must_count;
                must_task = i;
            }
        if (must_count >= 2) return {};

        bool on_seq = constraints.distinct_tasks_on_discretized &&
                      pos_on_seq[static_cast<std::size_t>(next_pos)];
        std::vector<std::size_t> cand;
        auto admissible = [&](std::size_t i) {
            if (v[i] == 0) return false;
            if (must_count == 1 && i != must_task) return false;
            if (must_count == 0) {
                // another task would expire unserved
                for (std::size_t j = 0; j < n; ++j)
                    if (j != i && v[j] > 0 && r[j] == 1) return false;
            }
            if (!first_visit_allowed(i)) return false;
            if (on_seq && (used_mask >> i & 1)) return false;
            return true;
        };
        for (std::size_t i = 0; i < n; ++i)
            if (admissible(i)) cand.push_back(i);
        std::sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
            if (r[a] != r[b]) return r[a] < r[b];
            if (d[a] != d[b]) return d[a] < d[b];
            return a < b;
        });
        // equal (d, r, v, mask-bit) tasks are interchangeable
        std::vector<std::size_t> dedup;
        for (std::size_t c : cand) {
            bool dup = false;
            for (std::size_t p : dedup) {
                if (d[p] == d[c] && r[p] == r[c] && v[p] == v[c] &&
                    (!constraints.distinct_tasks_on_discretized ||
                     ((used_mask >> p & 1) == (used_mask >> c & 1)))) {
                    dup = true;
                    break;
                }
            }
            if (!dup) dedup.push_back(c);
        }
        return dedup;
    }

    struct Undo {
        std::size_t task;
        std::int64_t old_r;
        std::uint64_t old_mask;
    };

    Undo apply(std::size_t task, std::int64_t next_pos) {
        Undo u{task, r[task], used_mask};
        for (std::size_t j = 0; j < n; ++j)
            if (j != task && v[j] > 0) --r[j];
        --v[task];
        r[task] = (v[task] > 0) ? d[task] : 0;
        if (constraints.distinct_tasks_on_discretized &&
            pos_on_seq[static_cast<std::size_t>(next_pos)])
            used_mask |= (1ULL << task);
        return u;
    }

    void revert(const Undo& u) {
        used_mask = u.old_mask;
        ++v[u.task];
        r[u.task] = u.old_r;
        for (std::size_t j = 0; j < n; ++j)
            if (j != u.task && v[j] > 0) ++r[j];
    }
};

// Re-verify a witness against the plain definition and the constraints.
void assert_witness(const core::KVisitsInstance& inst,
                    const SearchConstraints& constraints,
                    const core::Schedule& sched) {
    if (!core::verify_k_visits(inst, sched).feasible)
        throw std::logic_error("oracle witness fails verification");
    if (constraints.distinct_tasks_on_discretized) {
        auto seq = discretize::discretized_sequence(inst.deadlines);
        std::unordered_set<std::int64_t> seen;
        for (std::int64_t p : seq.positions)
            if (p <= inst.horizon() && !seen.insert(sched.at(p).task).second)
                throw std::logic_error("oracle witness repeats a task on A");
    }
    if (constraints.sorted_first_visits) {
        std::unordered_set<std::int64_t> started;
        std::int64_t last_d = 0;
        for (const auto& e : sched.entries()) {
            if (started.insert(e.task).second) {
                std::int64_t dv =
                    inst.deadlines[static_cast<std::size_t>(e.task - 1)];
                if (dv < last_d)
                    throw std::logic_error(
                        "oracle witness breaks first-visit order");
                last_d = dv;
            }
        }
    }
}

struct DfsBudgetExceeded {};

class DfsSearch {
  public:
    DfsSearch(SearchSpace& sp, std::uint64_t budget)
        : sp_(sp), budget_(budget) {}

    bool run(std::vector<std::int64_t>& schedule_out) {
        path_.clear();
        bool ok = dfs();
        if (ok) schedule_out = path_;
        return ok;
    }

    std::uint64_t nodes() const { return nodes_; }

  private:
    bool dfs() {
        if (sp_.done()) return true;
        if (++nodes_ > budget_) throw DfsBudgetExceeded{};
        if (sp_.deadlocked()) return false;
        u128 key = sp_.pack();
        if (dead_.count(key)) return false;
        std::int64_t next_pos = sp_.position_done() + 1;
        for (std::size_t cand : sp_.candidates(next_pos)) {
            auto undo = sp_.apply(cand, next_pos);
            path_.push_back(static_cast<std::int64_t>(cand) + 1);
            bool ok = dfs();
            if (ok) return true;
            path_.pop_back();
            sp_.revert(undo);
        }
        dead_.insert(key);
        return false;
    }

    SearchSpace& sp_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::int64_t> path_;
    std::unordered_set<u128, U128Hash> dead_;
};

}  // namespace

DecideResult k_visits_decide_dfs(const core::KVisitsInstance& inst,
                                 const SearchConstraints& constraints,
                                 const OracleCaps& caps) {
    if (inst.deadlines.empty())
        return {DecideStatus::Yes, core::Schedule(), 0, "empty instance"};
    SearchSpace sp(inst, constraints);
    if (!sp.packable())
        return {DecideStatus::Refused, std::nullopt, 0,
                "state does not pack into 128 bits"};
    DfsSearch search(sp, caps.dfs_node_cap);
    std::vector<std::int64_t> tasks;
    try {
        bool ok = search.run(tasks);
        if (!ok)
            return {DecideStatus::No, std::nullopt, search.nodes(), ""};
        auto sched = core::Schedule::from_tasks(tasks);
        assert_witness(inst, constraints, sched);
        return {DecideStatus::Yes, std::move(sched), search.nodes(), ""};
    } catch (const DfsBudgetExceeded&) {
        return {DecideStatus::Refused, std::nullopt, search.nodes(),
                "node budget exceeded"};
    }
}

DecideResult k_visits_decide_bfs(const core::KVisitsInstance& inst,
                                 const SearchConstraints& constraints,
                                 const OracleCaps& caps) {
    if (inst.deadlines.empty())
        return {DecideStatus::Yes, core::Schedule(), 0, "empty instance"};
    SearchSpace sp(inst, constraints);
    if (!sp.packable())
        return {DecideStatus::Refused, std::nullopt, 0,
                "state does not pack into 128 bits"};

    long double estimate = 1.0L;
    for (std::int64_t dv : inst.deadlines.values())
        estimate *= static_cast<long double>(dv);
    for (std::size_t i = 0; i < sp.n; ++i)
        estimate *= static_cast<long double>(inst.k + 1);
    if (constraints.distinct_tasks_on_discretized)
        estimate *= std::pow(2.0L, static_cast<long double>(sp.n));
    if (estimate > static_cast<long double>(caps.bfs_state_cap))
        return {DecideStatus::Refused, std::nullopt, 0,
                "state-space estimate above cap"};

    struct From {
        u128 parent;
        std::uint8_t task;
    };
    std::unordered_map<u128, From, U128Hash> visited;
    std::deque<std::pair<u128, std::int64_t>> queue;  // key, visits placed

    auto decode_into = [&](u128 key) {
        if (constraints.distinct_tasks_on_discretized) {
            sp.used_mask =
                static_cast<std::uint64_t>(key & ((u128(1) << sp.n) - 1));
            key >>= sp.n;
        } else {
            sp.used_mask = 0;
        }
        for (std::size_t i = sp.n; i-- > 0;) {
            sp.v[i] = static_cast<std::int64_t>(
                key & ((u128(1) << sp.bits_v) - 1));
            key >>= sp.bits_v;
            sp.r[i] = static_cast<std::int64_t>(
                key & ((u128(1) << sp.bits_r) - 1));
            key >>= sp.bits_r;
        }
    };

    u128 start = sp.pack();
    visited.emplace(start, From{start, 255});
    queue.emplace_back(start, 0);
    std::uint64_t explored = 0;

    while (!queue.empty()) {
        auto [key, placed] = queue.front();
        queue.pop_front();
        ++explored;
        if (visited.size() > caps.bfs_state_cap)
            return {DecideStatus::Refused, std::nullopt, explored,
                    "visited states above cap"};
        decode_into(key);
        if (sp.done()) {
            // Walk the parent chain back to the start.
            std::vector<std::int64_t> tasks;
            u128 cur = key;
            while (true) {
                const From& f = visited.at(cur);
                if (f.task == 255) break;
                tasks.push_back(static_cast<std::int64_t>(f.task) + 1);
                cur = f.parent;
            }
            std::reverse(tasks.begin(), tasks.end());
            auto sched = core::Schedule::from_tasks(tasks);
            assert_witness(inst, constraints, sched);
            return {DecideStatus::Yes, std::move(sched), explored, ""};
        }
        if (sp.deadlocked()) continue;
        for (std::size_t cand : sp.candidates(placed + 1)) {
            auto undo = sp.apply(cand, placed + 1);
            u128 next = sp.pack();
            if (!visited.count(next)) {
                visited.emplace(next,
                                From{key, static_cast<std::uint8_t>(cand)});
                queue.emplace_back(next, placed + 1);
            }
            sp.revert(undo);
        }
    }
    return {DecideStatus::No, std::nullopt, explored, ""};
}

DecideResult k_visits_decide(const core::KVisitsInstance& inst,
                             const SearchConstraints& constraints,
                             const OracleCaps& caps) {
    auto bfs = k_visits_decide_bfs(inst, constraints, caps);
    if (bfs.status != DecideStatus::Refused) return bfs;
    return k_visits_decide_dfs(inst, constraints, caps);
}

namespace {

// Role-labeled search shared by the two-visit and one-or-two variants.
// Tasks: singles 1..m then doubles m+1..m+n (m = 0 for plain two-visit).
struct RoleSearch {
    std::vector<std::int64_t> single_d;
    std::vector<std::int64_t> double_d;
    std::int64_t horizon = 0;

    // constrained form
    bool constrained = false;
    std::vector<char> on_seq;                    // positions of A
    std::vector<std::int64_t> forced_single;     // position -> single task or 0

    std::vector<std::int64_t> single_pos;
    std::vector<std::int64_t> prim_pos, sec_pos;
    std::vector<core::ScheduleEntry> entries;
    std::uint64_t nodes = 0;

    bool feasible_suffix(std::int64_t p) const {
        for (std::size_t i = 0; i < single_d.size(); ++i)
            if (single_pos[i] == 0 && single_d[i] < p) return false;
        for (std::size_t i = 0; i < double_d.size(); ++i) {
            if (prim_pos[i] == 0 && double_d[i] < p) return false;
            if (sec_pos[i] == 0 && prim_pos[i] != 0 &&
                prim_pos[i] + double_d[i] < p)
                return false;
        }
        return true;
    }

    bool dfs(std::int64_t p) {
        ++nodes;
        if (p > horizon) return true;
        if (!feasible_suffix(p)) return false;

        if (constrained && forced_single[static_cast<std::size_t>(p)] != 0) {
            std::size_t i = static_cast<std::size_t>(
                forced_single[static_cast<std::size_t>(p)] - 1);
            if (single_pos[i] != 0 || single_d[i] < p) return false;
            single_pos[i] = p;
            entries.push_back({p, static_cast<std::int64_t>(i) + 1,
                               core::Role::Single});
            if (dfs(p + 1)) return true;
            entries.pop_back();
            single_pos[i] = 0;
            return false;
        }

        bool seq_pos = constrained && on_seq[static_cast<std::size_t>(p)];

        // singles (only in the unconstrained search; constrained singles are
        // pinned above)
        if (!constrained) {
            std::int64_t tried_d = -1;
            for (std::size_t i = 0; i < single_d.size(); ++i) {
                if (single_pos[i] != 0 || single_d[i] < p) continue;
                if (single_d[i] == tried_d) continue;  // symmetric
                tried_d = single_d[i];
                single_pos[i] = p;
                entries.push_back({p, static_cast<std::int64_t>(i) + 1,
                                   core::Role::Single});
                if (dfs(p + 1)) return true;
                entries.pop_back();
                single_pos[i] = 0;
            }
        }

        std::int64_t m = static_cast<std::int64_t>(single_d.size());
        if (!constrained || seq_pos) {
            std::int64_t tried_d = -1;
            for (std::size_t i = 0; i < double_d.size(); ++i) {
                if (prim_pos[i] != 0 || double_d[i] < p) continue;
                if (sec_pos[i] == 0 && double_d[i] == tried_d) continue;
                if (sec_pos[i] == 0) tried_d = double_d[i];
                prim_pos[i] = p;
                entries.push_back({p, m + static_cast<std::int64_t>(i) + 1,
                                   core::Role::Primary});
                if (dfs(p + 1)) return true;
                entries.pop_back();
                prim_pos[i] = 0;
            }
        }
        if (!constrained || !seq_pos) {
            std::int64_t tried_unplaced = -1;
            for (std::size_t i = 0; i < double_d.size(); ++i) {
                if (sec_pos[i] != 0) continue;
                if (prim_pos[i] != 0) {
                    // after its primary: within d; before it is always fine
                    if (p > prim_pos[i] && p > prim_pos[i] + double_d[i])
                        continue;
                } else {
                    // secondary before a primary still to come
                    if (double_d[i] == tried_unplaced) continue;
                    tried_unplaced = double_d[i];
                }
                sec_pos[i] = p;
                entries.push_back({p, m + static_cast<std::int64_t>(i) + 1,
                                   core::Role::Secondary});
                if (dfs(p + 1)) return true;
                entries.pop_back();
                sec_pos[i] = 0;
            }
        }
        return false;
    }
};

}  // namespace

DecideResult two_visits_search(const core::Deadlines& deadlines,
                               bool primaries_on_discretized) {
    if (deadlines.size() > 6)
        return {DecideStatus::Refused, std::nullopt, 0,
                "role search capped at n = 6"};
    if (deadlines.empty())
        return {DecideStatus::Yes, core::Schedule(), 0, ""};

    RoleSearch rs;
    rs.double_d = deadlines.values();
    rs.horizon = 2 * static_cast<std::int64_t>(deadlines.size());
    rs.prim_pos.assign(deadlines.size(), 0);
    rs.sec_pos.assign(deadlines.size(), 0);
    if (primaries_on_discretized) {
        if (discretize::first_position_deficit(deadlines))
            return {DecideStatus::No, std::nullopt, 0,
                    "no feasible primary positions"};
        rs.constrained = true;
        rs.on_seq.assign(static_cast<std::size_t>(rs.horizon) + 1, 0);
        rs.forced_single.assign(static_cast<std::size_t>(rs.horizon) + 1, 0);
        for (std::int64_t p :
             discretize::discretized_sequence(deadlines).positions)
            rs.on_seq[static_cast<std::size_t>(p)] = 1;
    }
    if (!rs.dfs(1))
        return {DecideStatus::No, std::nullopt, rs.nodes, ""};
    core::Schedule sched{std::vector<core::ScheduleEntry>(rs.entries)};
    if (!core::verify_two_visits(deadlines, sched).feasible)
        throw std::logic_error("role-search witness fails verification");
    return {DecideStatus::Yes, std::move(sched), rs.nodes, ""};
}

DecideResult one_or_two_search(const core::OneOrTwoInstance& inst,
                               bool canonical_form) {
    if (inst.single_deadlines.size() + inst.double_deadlines.size() > 6)
        return {DecideStatus::Refused, std::nullopt, 0,
                "role search capped at m + n = 6"};
    RoleSearch rs;
    rs.single_d = inst.single_deadlines.values();
    rs.double_d = inst.double_deadlines.values();
    rs.horizon = inst.horizon();
    rs.single_pos.assign(rs.single_d.size(), 0);
    rs.prim_pos.assign(rs.double_d.size(), 0);
    rs.sec_pos.assign(rs.double_d.size(), 0);
    if (canonical_form) {
        auto red = posmatch::one_or_two_to_pm(inst);
        if (red.trivially_infeasible)
            return {DecideStatus::No, std::nullopt, 0, red.reason};
        rs.constrained = true;
        rs.on_seq.assign(static_cast<std::size_t>(rs.horizon) + 1, 0);
        rs.forced_single.assign(static_cast<std::size_t>(rs.horizon) + 1, 0);
        for (std::int64_t p : red.pm->seq.positions)
            rs.on_seq[static_cast<std::size_t>(p)] = 1;
        for (const auto& [task, pos] : red.placement.assignments)
            rs.forced_single[static_cast<std::size_t>(pos)] = task;
    }
    if (rs.horizon == 0)
        return {DecideStatus::Yes, core::Schedule(), 0, ""};
    if (!rs.dfs(1))
        return {DecideStatus::No, std::nullopt, rs.nodes, ""};
    core::Schedule sched{std::vector<core::ScheduleEntry>(rs.entries)};
    if (!core::verify_one_or_two(inst, sched).feasible)
        throw std::logic_error("role-search witness fails verification");
    return {DecideStatus::Yes, std::move(sched), rs.nodes, ""};
}

CounterexampleReport counterexample_3visits(const OracleCaps& caps) {
    auto t0 = std::chrono::steady_clock::now();
    CounterexampleReport rep;
    rep.instance = {core::Deadlines({2, 5, 6, 7, 8, 9, 10, 11}), 3};
    // deadlines 2 5 6 7 8 9 10 11 -> task ids 1..8
    rep.schedule = core::Schedule::from_tasks(
        {1, 1, 1, 7, 2, 3, 4, 5, 6, 2, 8, 3,
         4, 7, 2, 5, 3, 6, 4, 5, 6, 8, 7, 8});
    rep.schedule_verifies =
        core::verify_k_visits(rep.instance, rep.schedule).feasible;

    SearchConstraints distinct;
    distinct.distinct_tasks_on_discretized = true;
    auto r1 = k_visits_decide(rep.instance, distinct, caps);
    rep.distinct_constrained_infeasible = (r1.status == DecideStatus::No);
    rep.states_distinct = r1.states_explored;

    SearchConstraints sorted;
    sorted.sorted_first_visits = true;
    auto r2 = k_visits_decide(rep.instance, sorted, caps);
    rep.sorted_constrained_infeasible = (r2.status == DecideStatus::No);
    rep.states_sorted = r2.states_explored;

    rep.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (!rep.schedule_verifies || !rep.distinct_constrained_infeasible ||
        !rep.sorted_constrained_infeasible)
        throw std::logic_error("three-visit counterexample check failed");
    return rep;
}

namespace {

std::string instance_string(const core::Deadlines& d) {
    std::string s = "{";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + "}";
}

// One comparison of the two decision routes for a two-visit instance.
bool equiv_check(const core::Deadlines& d, PmEquivReport& rep) {
    auto plain = k_visits_decide({d, 2});
    auto red = posmatch::two_visits_to_pm(d);
    posmatch::SolveResult pm_result;
    if (red.trivially_infeasible) {
        pm_result.status = posmatch::SolveStatus::Infeasible;
    } else {
        pm_result = posmatch::solve_brute_force(
            *red.pm, std::max<std::size_t>(red.pm->size(), 10));
    }
    bool plain_yes = plain.status == DecideStatus::Yes;
    bool pm_yes = pm_result.status == posmatch::SolveStatus::Feasible;
    bool comparable = plain.status != DecideStatus::Refused &&
                      pm_result.status != posmatch::SolveStatus::Undecided;
    ++rep.total;
    if (!comparable || plain_yes != pm_yes) {
        ++rep.mismatches;
        rep.mismatch_instances.push_back(instance_string(d));
        return false;
    }
    if (plain_yes)
        ++rep.yes_count;
    else
        ++rep.no_count;
    return plain_yes;
}

}  // namespace

PmEquivReport pm_equiv_sweep(std::uint64_t count, std::int64_t max_n,
                             std::uint64_t seed) {
    if (max_n > 6) throw std::invalid_argument("pm_equiv_sweep: max_n <= 6");
    PmEquivReport rep;
    equiv_check(core::Deadlines({1, 2}), rep);
    equiv_check(core::Deadlines({2, 2}), rep);
    equiv_check(core::Deadlines({1, 4, 5, 6, 6, 7, 15, 16, 18, 18, 18}), rep);

    for (std::uint64_t it = 0; it < count; ++it) {
        Rng rng = Rng::stream(seed, "pm-equiv", it);
        std::int64_t n = rng.range(1, max_n);
        std::vector<std::int64_t> d(static_cast<std::size_t>(n));
        for (auto& v : d) v = rng.range(1, 2 * n);
        equiv_check(core::Deadlines(std::move(d)), rep);
    }
    return rep;
}

}  // namespace pinwheel::oracle
