#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pinwheel/rational.hpp"

namespace pinwheel::core {

/// Sorted multiset of positive deadlines. Sorting happens once, at
/// construction; every index used elsewhere refers to this sorted order.
class Deadlines {
  public:
    Deadlines() = default;
    explicit Deadlines(std::vector<std::int64_t> values);

    const std::vector<std::int64_t>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    std::int64_t operator[](std::size_t i) const { return values_[i]; }
    std::int64_t max() const { return values_.empty() ? 0 : values_.back(); }

    /// True when no value repeats.
    bool is_simple() const;
    std::size_t distinct_count() const;

    bool operator==(const Deadlines&) const = default;

  private:
    std::vector<std::int64_t> values_;
};

struct KVisitsInstance {
    Deadlines deadlines;
    std::int64_t k = 1;  // visits per task; horizon is k * n

    std::int64_t horizon() const {
        return k * static_cast<std::int64_t>(deadlines.size());
    }
};

/// m tasks visited once (single_deadlines), n tasks visited twice
/// (double_deadlines); horizon m + 2n. The two lists are sorted
/// independently; task ids are 1..m for singles, m+1..m+n for doubles.
struct OneOrTwoInstance {
    Deadlines single_deadlines;
    Deadlines double_deadlines;

    std::int64_t horizon() const {
        return static_cast<std::int64_t>(single_deadlines.size()) +
               2 * static_cast<std::int64_t>(double_deadlines.size());
    }
};

enum class Role { Single, Primary, Secondary, Plain };

std::string role_name(Role r);
std::optional<Role> role_from_name(const std::string& name);

struct ScheduleEntry {
    std::int64_t pos = 0;  // 1-based
    std::int64_t task = 0;
    Role role = Role::Plain;
};

/// Finite schedule: positions form exactly 1..L. Construction sorts the
/// entries by position and rejects gaps or repeats.
class Schedule {
  public:
    Schedule() = default;
    explicit Schedule(std::vector<ScheduleEntry> entries);

    const std::vector<ScheduleEntry>& entries() const { return entries_; }
    std::int64_t length() const {
        return static_cast<std::int64_t>(entries_.size());
    }
    const ScheduleEntry& at(std::int64_t pos) const {
        return entries_[static_cast<std::size_t>(pos - 1)];
    }

    /// Task ids in position order.
    std::vector<std::int64_t> tasks() const;

    /// Plain schedule from a task sequence (position i+1 runs tasks[i]).
    static Schedule from_tasks(const std::vector<std::int64_t>& tasks,
                               Role role = Role::Plain);

  private:
    std::vector<ScheduleEntry> entries_;
};

struct Violation {
    std::int64_t task = 0;
    std::int64_t position = 0;  // earliest offending position; 0 if structural
    std::string reason;
};

struct Verdict {
    bool feasible = false;
    std::optional<Violation> witness;

    static Verdict ok() { return {true, std::nullopt}; }
    static Verdict fail(std::int64_t task, std::int64_t pos, std::string why) {
        return {false, Violation{task, pos, std::move(why)}};
    }
};

/// Drops deadlines that can never expire within the horizon: while the
/// largest value exceeds k * (current size), remove it. Feasibility is
/// preserved; the removed tasks can always run at the tail of a schedule.
Deadlines normalize(const Deadlines& deadlines, std::int64_t k);

/// Deadlines removed by normalize, in removal order (largest first).
std::vector<std::int64_t> normalize_removed(const Deadlines& deadlines,
                                            std::int64_t k);

/// Each task appears exactly k times, first visit within d_i positions,
/// later visits at most d_i after the previous one. Roles are ignored.
Verdict verify_k_visits(const KVisitsInstance& inst, const Schedule& sched);

/// Each task has one primary visit (position <= d_i) and one secondary
/// visit (before the primary, or at most d_i after it).
Verdict verify_two_visits(const Deadlines& deadlines, const Schedule& sched);

/// Singles appear once within d_i; doubles follow the two-visit rules.
Verdict verify_one_or_two(const OneOrTwoInstance& inst, const Schedule& sched);

/// Sum of reciprocal deadlines, exact.
Rational density(const Deadlines& deadlines);

}  // namespace pinwheel::core
