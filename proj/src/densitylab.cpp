#include "pinwheel/densitylab.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "pinwheel/discretize.hpp"

namespace pinwheel::densitylab {

OneVisitResult one_visit_schedule(const core::Deadlines& deadlines) {
    if (auto j = discretize::first_position_deficit(deadlines))
        return {std::nullopt, j};
    std::vector<std::int64_t> tasks(deadlines.size());
    for (std::size_t i = 0; i < deadlines.size(); ++i)
        tasks[i] = static_cast<std::int64_t>(i) + 1;
    return {core::Schedule::from_tasks(tasks, core::Role::Single),
            std::nullopt};
}

ClaimReport claim_property(const core::Deadlines& deadlines) {
    const std::int64_t n = static_cast<std::int64_t>(deadlines.size());
    if (!deadlines.empty() && deadlines.max() > 2 * n)
        throw std::invalid_argument("claim_property needs normalized input");
    ClaimReport report;
    if (auto j = discretize::first_position_deficit(deadlines)) {
        report.deficit_index = j;
        return report;
    }
    auto seq = discretize::discretized_sequence(deadlines);
    auto targets = discretize::complement_targets(seq, 2 * n);
    for (std::size_t i = 0; i < deadlines.size(); ++i) {
        ClaimRecord rec;
        rec.index = i + 1;
        rec.d = deadlines[i];
        rec.a = seq[i];
        rec.t = targets[i];
        rec.bound = rec.d + rec.a;
        rec.satisfied = rec.t <= rec.bound;
        if (!rec.satisfied && !report.first_violation)
            report.first_violation = i + 1;
        report.records.push_back(rec);
    }
    return report;
}

DensityScheduleResult density_schedule_2v(const core::Deadlines& deadlines) {
    DensityScheduleResult out;
    out.report = claim_property(deadlines);
    if (!out.report.all_satisfied()) return out;

    std::vector<core::ScheduleEntry> entries;
    for (const ClaimRecord& rec : out.report.records) {
        std::int64_t task = static_cast<std::int64_t>(rec.index);
        entries.push_back({rec.a, task, core::Role::Primary});
        entries.push_back({rec.t, task, core::Role::Secondary});
    }
    core::Schedule sched(std::move(entries));
    if (!core::verify_two_visits(deadlines, sched).feasible)
        throw std::logic_error("claim-backed schedule failed verification");
    out.schedule = std::move(sched);
    return out;
}

core::Deadlines worst_case_family(std::int64_t j, std::int64_t dj) {
    if (j < 1 || dj < 2 * j - 1)
        throw std::invalid_argument("worst_case_family requires dj >= 2j-1");
    std::vector<std::int64_t> d;
    for (std::int64_t i = 0; i < j; ++i) d.push_back(dj);
    for (std::int64_t i = 0; i < dj; ++i) d.push_back(dj + 2 * j - 1);
    return core::Deadlines(std::move(d));
}

double gap_function(double x, double y) {
    if (y < 1.0 || x < 2.0 * y - 1.0)
        throw std::domain_error("gap_function domain: y >= 1, x >= 2y - 1");
    return y / x + x / (x + 2.0 * y - 1.0);
}

GapScanResult gap_infimum_scan(double x_max, double grid_step) {
    if (x_max < 3.0) throw std::invalid_argument("x_max >= 3 required");
    if (grid_step <= 0.0) throw std::invalid_argument("grid_step > 0 required");
    const double threshold = std::sqrt(2.0) - 0.5;

    GapScanResult out;
    out.min_value = std::numeric_limits<double>::infinity();
    out.all_above_threshold = true;
    for (double x = 1.0; x <= x_max; x += grid_step) {
        double y_hi = (x + 1.0) / 2.0;
        for (double y = 1.0; y <= y_hi; y += grid_step) {
            double f = y / x + x / (x + 2.0 * y - 1.0);
            ++out.points;
            if (f <= threshold) out.all_above_threshold = false;
            if (f < out.min_value) {
                out.min_value = f;
                out.argmin_x = x;
                out.argmin_y = y;
            }
        }
    }
    out.gap = out.min_value - threshold;
    double y_line = (std::sqrt(2.0) - 1.0) / 2.0 * x_max + 0.5;
    out.line_value_at_xmax = gap_function(x_max, y_line);
    return out;
}

core::KVisitsInstance pinwheel_no_family(std::int64_t x) {
    if (x < 2) throw std::invalid_argument("pinwheel_no_family requires x >= 2");
    return {core::Deadlines({2, 3, x}), 6 * x + 1};
}

DivergentFamily divergent_family(std::int64_t k, std::int64_t n) {
    if (k < 1 || n < 1)
        throw std::invalid_argument("divergent_family requires k, n >= 1");
    std::vector<std::int64_t> d;
    std::vector<std::int64_t> tasks;
    for (std::int64_t i = 0; i < n; ++i) {
        d.push_back(1 + i * k);
        for (std::int64_t rep = 0; rep < k; ++rep) tasks.push_back(i + 1);
    }
    DivergentFamily fam{{core::Deadlines(std::move(d)), k},
                        core::Schedule::from_tasks(tasks)};
    if (!core::verify_k_visits(fam.instance, fam.schedule).feasible)
        throw std::logic_error("divergent family schedule failed verification");
    return fam;
}

std::optional<CyclicWindow> cyclic_extract(const core::KVisitsInstance& inst,
                                           const core::Schedule& sched) {
    if (!core::verify_k_visits(inst, sched).feasible)
        throw std::invalid_argument("cyclic_extract needs a feasible schedule");
    const auto& d = inst.deadlines.values();
    const std::size_t n = d.size();
    const std::int64_t L = inst.horizon();

    // m = prod d_i capped at the schedule length; the pigeonhole only needs
    // positions inside the schedule.
    std::int64_t m = 1;
    for (std::int64_t dv : d) {
        if (m > L) break;
        m *= dv;
    }
    m = std::min(m, L);

    // Applicability gate: every task's final visit occurs after position m.
    std::vector<std::int64_t> last_visit(n, 0);
    for (const auto& e : sched.entries())
        last_visit[static_cast<std::size_t>(e.task - 1)] = e.pos;
    for (std::size_t i = 0; i < n; ++i)
        if (last_visit[i] < m + 1) return std::nullopt;

    // Walk V(1..m+1); two equal remaining-time vectors must appear.
    std::vector<std::int64_t> remaining(d);
    std::map<std::vector<std::int64_t>, std::size_t> seen;
    std::optional<CyclicWindow> found;
    for (std::int64_t p = 1; p <= m + 1 && p <= L; ++p) {
        std::int64_t task = sched.at(p).task;
        for (std::size_t i = 0; i < n; ++i) --remaining[i];
        remaining[static_cast<std::size_t>(task - 1)] =
            d[static_cast<std::size_t>(task - 1)];
        for (std::int64_t rem : remaining)
            if (rem <= 0)
                throw std::logic_error(
                    "state vector went nonpositive despite precondition");
        auto [it, inserted] =
            seen.emplace(remaining, static_cast<std::size_t>(p));
        if (!inserted) {
            CyclicWindow win;
            win.p = it->second;
            win.q = static_cast<std::size_t>(p);
            for (std::size_t pos = win.p; pos < win.q; ++pos)
                win.window.push_back(
                    sched.at(static_cast<std::int64_t>(pos)).task);
            found = std::move(win);
            break;
        }
    }
    if (!found)
        throw std::logic_error("no repeated state vector within the bound");
    if (!verify_pinwheel_window(inst.deadlines, found->window).feasible)
        throw std::logic_error("extracted window fails the pinwheel check");
    return found;
}

core::Verdict verify_pinwheel_window(const core::Deadlines& deadlines,
                                     const std::vector<std::int64_t>& window) {
    if (window.empty())
        return core::Verdict::fail(0, 0, "empty window");
    const std::int64_t n = static_cast<std::int64_t>(deadlines.size());
    std::vector<std::int64_t> tripled;
    for (int rep = 0; rep < 3; ++rep)
        tripled.insert(tripled.end(), window.begin(), window.end());

    for (std::int64_t task = 1; task <= n; ++task) {
        std::int64_t d = deadlines[static_cast<std::size_t>(task - 1)];
        bool present = false;
        for (std::int64_t t : window) present |= (t == task);
        if (!present)
            return core::Verdict::fail(task, 0, "task absent from window");
        std::int64_t len = static_cast<std::int64_t>(tripled.size());
        if (d >= len) continue;
        std::int64_t prev = 0;
        for (std::int64_t pos = 1; pos <= len; ++pos) {
            if (tripled[static_cast<std::size_t>(pos - 1)] == task) {
                if (pos - prev > d)
                    return core::Verdict::fail(task, pos, "deadline expired");
                prev = pos;
            }
        }
        if (len - prev >= d)
            return core::Verdict::fail(task, len, "deadline expired");
    }
    return core::Verdict::ok();
}

std::string instance_hash(const core::Deadlines& deadlines) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::int64_t v : deadlines.values()) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= static_cast<unsigned char>(v >> (8 * byte));
            h *= 0x100000001b3ULL;
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(h));
    return std::string(buf);
}

core::Deadlines sample_low_density(Rng& rng, std::int64_t max_n,
                                   Threshold threshold,
                                   std::uint64_t* attempts) {
    for (;;) {
        if (attempts) ++*attempts;
        std::int64_t n = rng.range(1, max_n);
        std::int64_t horizon = (threshold == Threshold::One) ? n : 2 * n;
        // Exponent picks how hard the draw leans toward the horizon; mixing
        // exponents keeps the accepted instances structurally varied.
        double lean = static_cast<double>(rng.range(2, 4));
        std::vector<std::int64_t> d(static_cast<std::size_t>(n));
        for (auto& v : d) {
            double u = rng.unit();
            v = std::clamp<std::int64_t>(
                static_cast<std::int64_t>(
                    std::ceil(static_cast<double>(horizon) *
                              std::pow(u, 1.0 / lean))),
                1, horizon);
        }
        core::Deadlines cand(std::move(d));
        Rational dens = core::density(cand);
        bool ok = (threshold == Threshold::One) ? dens <= 1
                                                : leq_sqrt2_minus_half(dens);
        if (ok) return cand;
    }
}

namespace {

SweepRecord sweep_one(const core::Deadlines& inst, Threshold threshold) {
    SweepRecord rec;
    rec.hash = instance_hash(inst);
    rec.n = static_cast<std::int64_t>(inst.size());
    rec.density = to_string(core::density(inst));
    if (threshold == Threshold::One) {
        auto res = one_visit_schedule(inst);
        rec.claim_ok = !res.witness_index.has_value();
        rec.schedule_ok =
            res.schedule &&
            core::verify_k_visits({inst, 1}, *res.schedule).feasible;
    } else {
        auto res = density_schedule_2v(inst);
        rec.claim_ok = res.report.all_satisfied();
        rec.schedule_ok =
            res.schedule &&
            core::verify_two_visits(inst, *res.schedule).feasible;
    }
    return rec;
}

}  // namespace

SweepReport density_sweep(std::uint64_t count, std::int64_t max_n,
                          std::uint64_t seed, Threshold threshold,
                          int workers) {
    auto t0 = std::chrono::steady_clock::now();
    SweepReport report;
    report.records.resize(count);
    std::vector<std::uint64_t> draws_per(static_cast<std::size_t>(
        std::max(workers, 1)));

    auto work = [&](int w) {
        for (std::uint64_t i = static_cast<std::uint64_t>(w); i < count;
             i += static_cast<std::uint64_t>(std::max(workers, 1))) {
            Rng rng = Rng::stream(seed, "density-sweep", i);
            core::Deadlines inst = sample_low_density(
                rng, max_n, threshold, &draws_per[static_cast<std::size_t>(w)]);
            report.records[i] = sweep_one(inst, threshold);
        }
    };
    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    for (const auto& rec : report.records)
        report.all_ok = report.all_ok && rec.claim_ok && rec.schedule_ok;
    for (std::uint64_t d : draws_per) report.draws += d;
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

}  // namespace pinwheel::densitylab
