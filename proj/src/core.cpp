#include "pinwheel/core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace pinwheel::core {

Deadlines::Deadlines(std::vector<std::int64_t> values)
    : values_(std::move(values)) {
    for (std::int64_t v : values_) {
        if (v < 1) throw std::invalid_argument("deadline must be positive");
    }
    std::sort(values_.begin(), values_.end());
}

bool Deadlines::is_simple() const {
    return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
}

std::size_t Deadlines::distinct_count() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (i == 0 || values_[i] != values_[i - 1]) ++c;
    return c;
}

std::string role_name(Role r) {
    switch (r) {
        case Role::Single: return "single";
        case Role::Primary: return "primary";
        case Role::Secondary: return "secondary";
        case Role::Plain: return "plain";
    }
    return "plain";
}

std::optional<Role> role_from_name(const std::string& name) {
    if (name == "single") return Role::Single;
    if (name == "primary") return Role::Primary;
    if (name == "secondary") return Role::Secondary;
    if (name == "plain") return Role::Plain;
    return std::nullopt;
}

Schedule::Schedule(std::vector<ScheduleEntry> entries)
    : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const ScheduleEntry& a, const ScheduleEntry& b) {
                  return a.pos < b.pos;
              });
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].pos != static_cast<std::int64_t>(i) + 1)
            throw std::invalid_argument(
                "schedule positions must form 1..L without gaps or repeats");
    }
}

std::vector<std::int64_t> Schedule::tasks() const {
    std::vector<std::int64_t> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.task);
    return out;
}

Schedule Schedule::from_tasks(const std::vector<std::int64_t>& tasks,
                              Role role) {
    std::vector<ScheduleEntry> es;
    es.reserve(tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i)
        es.push_back({static_cast<std::int64_t>(i) + 1, tasks[i], role});
    return Schedule(std::move(es));
}

Deadlines normalize(const Deadlines& deadlines, std::int64_t k) {
    std::vector<std::int64_t> v = deadlines.values();
    while (!v.empty() && v.back() > k * static_cast<std::int64_t>(v.size()))
        v.pop_back();
    return Deadlines(std::move(v));
}

std::vector<std::int64_t> normalize_removed(const Deadlines& deadlines,
                                            std::int64_t k) {
    std::vector<std::int64_t> v = deadlines.values();
    std::vector<std::int64_t> removed;
    while (!v.empty() && v.back() > k * static_cast<std::int64_t>(v.size())) {
        removed.push_back(v.back());
        v.pop_back();
    }
    return removed;
}

namespace {

// Per-task occurrence positions, or a structural verdict.
struct Occurrences {
    std::vector<std::vector<std::int64_t>> by_task;  // 1-based task index
    std::optional<Verdict> rejected;
};

Occurrences collect(const Schedule& sched, std::size_t n_tasks) {
    Occurrences occ;
    occ.by_task.assign(n_tasks + 1, {});
    for (const auto& e : sched.entries()) {
        if (e.task < 1 || e.task > static_cast<std::int64_t>(n_tasks)) {
            occ.rejected = Verdict::fail(e.task, e.pos, "unknown task");
            return occ;
        }
        occ.by_task[static_cast<std::size_t>(e.task)].push_back(e.pos);
    }
    return occ;
}

void keep_earliest(std::optional<Violation>& best, std::int64_t task,
                   std::int64_t pos, const char* why) {
    if (!best || pos < best->position) best = Violation{task, pos, why};
}

}  // namespace

Verdict verify_k_visits(const KVisitsInstance& inst, const Schedule& sched) {
    const auto& d = inst.deadlines;
    const std::int64_t n = static_cast<std::int64_t>(d.size());
    if (sched.length() != inst.horizon())
        return Verdict::fail(0, sched.length(), "length mismatch");

    Occurrences occ = collect(sched, d.size());
    if (occ.rejected) return *occ.rejected;

    for (std::int64_t i = 1; i <= n; ++i) {
        if (static_cast<std::int64_t>(occ.by_task[i].size()) != inst.k)
            return Verdict::fail(i, 0, "visit count");
    }

    std::optional<Violation> best;
    for (std::int64_t i = 1; i <= n; ++i) {
        std::int64_t prev = 0;  // schedule start
        for (std::int64_t p : occ.by_task[static_cast<std::size_t>(i)]) {
            if (p - prev > d[static_cast<std::size_t>(i - 1)])
                keep_earliest(best, i, p, "deadline expired");
            prev = p;
        }
    }
    if (best) return {false, best};
    return Verdict::ok();
}

Verdict verify_two_visits(const Deadlines& deadlines, const Schedule& sched) {
    const std::int64_t n = static_cast<std::int64_t>(deadlines.size());
    if (sched.length() != 2 * n)
        return Verdict::fail(0, sched.length(), "length mismatch");

    std::vector<std::int64_t> primary(deadlines.size() + 1, 0);
    std::vector<std::int64_t> secondary(deadlines.size() + 1, 0);
    for (const auto& e : sched.entries()) {
        if (e.task < 1 || e.task > n)
            return Verdict::fail(e.task, e.pos, "unknown task");
        auto t = static_cast<std::size_t>(e.task);
        if (e.role == Role::Primary && primary[t] == 0) {
            primary[t] = e.pos;
        } else if (e.role == Role::Secondary && secondary[t] == 0) {
            secondary[t] = e.pos;
        } else {
            return Verdict::fail(e.task, e.pos, "missing role");
        }
    }
    for (std::int64_t i = 1; i <= n; ++i) {
        auto t = static_cast<std::size_t>(i);
        if (primary[t] == 0 || secondary[t] == 0)
            return Verdict::fail(i, 0, "missing role");
    }

    std::optional<Violation> best;
    for (std::int64_t i = 1; i <= n; ++i) {
        auto t = static_cast<std::size_t>(i);
        std::int64_t di = deadlines[t - 1];
        if (primary[t] > di)
            keep_earliest(best, i, primary[t], "primary after deadline");
        if (secondary[t] > primary[t] && secondary[t] > primary[t] + di)
            keep_earliest(best, i, secondary[t], "secondary after deadline");
    }
    if (best) return {false, best};
    return Verdict::ok();
}

Verdict verify_one_or_two(const OneOrTwoInstance& inst, const Schedule& sched) {
    const std::int64_t m =
        static_cast<std::int64_t>(inst.single_deadlines.size());
    const std::int64_t n =
        static_cast<std::int64_t>(inst.double_deadlines.size());
    if (sched.length() != inst.horizon())
        return Verdict::fail(0, sched.length(), "length mismatch");

    std::vector<std::int64_t> single_pos(static_cast<std::size_t>(m) + 1, 0);
    std::vector<std::int64_t> primary(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::int64_t> secondary(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& e : sched.entries()) {
        if (e.task < 1 || e.task > m + n)
            return Verdict::fail(e.task, e.pos, "unknown task");
        if (e.task <= m) {
            auto t = static_cast<std::size_t>(e.task);
            if (e.role != Role::Single || single_pos[t] != 0)
                return Verdict::fail(e.task, e.pos, "visit count");
            single_pos[t] = e.pos;
        } else {
            auto t = static_cast<std::size_t>(e.task - m);
            if (e.role == Role::Primary && primary[t] == 0) {
                primary[t] = e.pos;
            } else if (e.role == Role::Secondary && secondary[t] == 0) {
                secondary[t] = e.pos;
            } else {
                return Verdict::fail(e.task, e.pos, "visit count");
            }
        }
    }
    for (std::int64_t i = 1; i <= m; ++i)
        if (single_pos[static_cast<std::size_t>(i)] == 0)
            return Verdict::fail(i, 0, "visit count");
    for (std::int64_t i = 1; i <= n; ++i) {
        auto t = static_cast<std::size_t>(i);
        if (primary[t] == 0 || secondary[t] == 0)
            return Verdict::fail(m + i, 0, "visit count");
    }

    std::optional<Violation> best;
    for (std::int64_t i = 1; i <= m; ++i) {
        auto t = static_cast<std::size_t>(i);
        if (single_pos[t] > inst.single_deadlines[t - 1])
            keep_earliest(best, i, single_pos[t], "single after deadline");
    }
    for (std::int64_t i = 1; i <= n; ++i) {
        auto t = static_cast<std::size_t>(i);
        std::int64_t di = inst.double_deadlines[t - 1];
        if (primary[t] > di)
            keep_earliest(best, m + i, primary[t], "primary after deadline");
        if (secondary[t] > primary[t] && secondary[t] > primary[t] + di)
            keep_earliest(best, m + i, secondary[t],
                          "secondary after deadline");
    }
    if (best) return {false, best};
    return Verdict::ok();
}

Rational density(const Deadlines& deadlines) {
    Rational sum = 0;
    for (std::int64_t v : deadlines.values()) sum += Rational(1, v);
    return sum;
}

}  // namespace pinwheel::core
