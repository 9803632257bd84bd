#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pinwheel/core.hpp"
#include "pinwheel/rng.hpp"

namespace pinwheel::densitylab {

/// Identity-order single-visit schedule: task i at position i works exactly
/// when d_i >= i for all i; otherwise the smallest offender is returned.
struct OneVisitResult {
    std::optional<core::Schedule> schedule;
    std::optional<std::size_t> witness_index;  // 1-based j with d_j < j
};
OneVisitResult one_visit_schedule(const core::Deadlines& deadlines);

struct ClaimRecord {
    std::size_t index = 0;  // 1-based
    std::int64_t d = 0;
    std::int64_t a = 0;
    std::int64_t t = 0;
    std::int64_t bound = 0;  // d + a
    bool satisfied = false;  // t <= d + a
};

struct ClaimReport {
    std::vector<ClaimRecord> records;
    std::optional<std::size_t> first_violation;  // 1-based
    std::optional<std::size_t> deficit_index;    // d_j < j: no sequence exists

    bool all_satisfied() const { return !first_violation && !deficit_index; }
};

/// Evaluates t_i <= d_i + a_i at every index for a normalized two-visit
/// instance (T = [2n] \ A).
ClaimReport claim_property(const core::Deadlines& deadlines);

/// When the claim holds everywhere, primary of task i at a_i and secondary
/// at t_i is feasible; the schedule is built and re-verified. Otherwise the
/// violation report comes back and nothing is claimed either way.
struct DensityScheduleResult {
    std::optional<core::Schedule> schedule;
    ClaimReport report;
};
DensityScheduleResult density_schedule_2v(const core::Deadlines& deadlines);

/// Two-level family: j copies of dj followed by dj copies of dj + 2j - 1.
/// Requires dj >= 2j - 1. Violates the claim exactly at index j and has
/// density j/dj + dj/(dj + 2j - 1).
core::Deadlines worst_case_family(std::int64_t j, std::int64_t dj);

/// f(x, y) = y/x + x/(x + 2y - 1) on y >= 1, x >= 2y - 1.
double gap_function(double x, double y);

struct GapScanResult {
    double min_value = 0.0;
    double argmin_x = 0.0;
    double argmin_y = 0.0;
    double gap = 0.0;             // min_value - (sqrt(2) - 1/2)
    bool all_above_threshold = false;
    double line_value_at_xmax = 0.0;  // f along y = (sqrt(2)-1)/2 x + 1/2
    std::uint64_t points = 0;
};

/// Grid scan of f over its domain up to x_max. The minimum stays strictly
/// above sqrt(2) - 1/2, and along the stated line the values sink toward
/// it as x grows.
GapScanResult gap_infimum_scan(double x_max, double grid_step);

/// Deadlines {2, 3, x} with k = 6x + 1: a no-instance family whose density
/// is 5/6 + 1/x.
core::KVisitsInstance pinwheel_no_family(std::int64_t x);

/// Deadlines {1, 1+k, ..., 1+(n-1)k} with the block schedule (task 1 k
/// times, then task 2, ...). Always feasible; the density grows without
/// bound in n.
struct DivergentFamily {
    core::KVisitsInstance instance;
    core::Schedule schedule;
};
DivergentFamily divergent_family(std::int64_t k, std::int64_t n);

/// Remaining time-to-expiry per task after a schedule prefix, plus the
/// visits still owed.
struct StateVector {
    std::vector<std::int64_t> remaining;
    std::vector<std::int64_t> visits_left;
};

struct CyclicWindow {
    std::size_t p = 0;  // V(p) == V(q), 1 <= p < q
    std::size_t q = 0;
    std::vector<std::int64_t> window;  // tasks of S[p .. q-1]
};

/// Walks the state vectors of a feasible schedule. When every task's final
/// visit happens after position min(prod d_i, L), two equal states exist
/// within that prefix and the window between them repeats into a valid
/// pinwheel schedule (checked before returning). Returns nothing when the
/// precondition fails.
std::optional<CyclicWindow> cyclic_extract(const core::KVisitsInstance& inst,
                                           const core::Schedule& sched);

/// Every d_i consecutive positions of the infinitely repeated window must
/// contain task i; checked over three concatenations.
core::Verdict verify_pinwheel_window(const core::Deadlines& deadlines,
                                     const std::vector<std::int64_t>& window);

enum class Threshold { Sqrt2Half, One };

/// Rejection sampling: deadline draws lean toward the horizon (a
/// geometric-like tail downward) and the exact density filter keeps only
/// instances at or below the threshold. `attempts`, when given, counts
/// every draw including rejected ones.
core::Deadlines sample_low_density(Rng& rng, std::int64_t max_n,
                                   Threshold threshold,
                                   std::uint64_t* attempts = nullptr);

struct SweepRecord {
    std::string hash;
    std::int64_t n = 0;
    std::string density;  // exact rational p/q
    bool claim_ok = false;
    bool schedule_ok = false;
};

struct SweepReport {
    std::vector<SweepRecord> records;
    std::uint64_t draws = 0;  // total sampler attempts
    bool all_ok = true;
    double seconds = 0.0;
};

/// count accepted instances, each checked: the claim (or the 1-visit
/// condition) must hold and the constructed schedule must verify.
SweepReport density_sweep(std::uint64_t count, std::int64_t max_n,
                          std::uint64_t seed, Threshold threshold,
                          int workers = 1);

std::string instance_hash(const core::Deadlines& deadlines);

}  // namespace pinwheel::densitylab
