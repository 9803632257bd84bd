// Acceptance suite: ten checks, one pass/fail line each. Exits nonzero if
// any check fails. Every tolerance and budget is pinned here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pinwheel/densitylab.hpp"
#include "pinwheel/hardness.hpp"
#include "pinwheel/oracle.hpp"
#include "pinwheel/posmatch.hpp"
#include "pinwheel/randmatch.hpp"
#include "pinwheel/rng.hpp"

using namespace pinwheel;
using core::Deadlines;

namespace {

struct Criterion {
    int id;
    std::string name;
    std::function<bool(std::string&)> run;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// 1 -------------------------------------------------------------------------
bool discretized_fixtures(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    auto a = discretize::discretized_sequence(
        Deadlines({3, 5, 5, 7, 7, 7, 15, 15, 16}));
    auto b = discretize::discretized_sequence(
        Deadlines({2, 4, 5, 8, 8, 10, 11, 11, 12, 12, 13, 13, 14, 14}));
    double dt = seconds_since(t0);
    std::vector<std::int64_t> expect_b(14);
    for (int i = 0; i < 14; ++i) expect_b[static_cast<std::size_t>(i)] = i + 1;
    bool ok = a.positions ==
                  std::vector<std::int64_t>{2, 3, 4, 5, 6, 7, 14, 15, 16} &&
              b.positions == expect_b && dt < 0.001;
    detail = "computed both fixtures in " + std::to_string(dt * 1000) + " ms";
    return ok;
}

// 2 -------------------------------------------------------------------------
bool counterexample_suite(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    oracle::CounterexampleReport rep;
    try {
        rep = oracle::counterexample_3visits();
    } catch (const std::exception& e) {
        detail = e.what();
        return false;
    }
    double dt = seconds_since(t0);
    detail = "schedule verifies; constrained searches infeasible (" +
             std::to_string(rep.states_distinct) + " / " +
             std::to_string(rep.states_sorted) + " states, " +
             std::to_string(dt) + " s)";
    return rep.schedule_verifies && rep.distinct_constrained_infeasible &&
           rep.sorted_constrained_infeasible && dt < 60.0;
}

// 3 -------------------------------------------------------------------------
bool low_density_sweep(std::string& detail) {
    auto rep = densitylab::density_sweep(10000, 40, 20260809,
                                         densitylab::Threshold::Sqrt2Half);
    std::uint64_t violations = 0;
    for (const auto& r : rep.records)
        if (!r.claim_ok || !r.schedule_ok) ++violations;
    detail = std::to_string(rep.records.size()) + " instances, " +
             std::to_string(rep.draws) + " draws, " +
             std::to_string(violations) + " violations, " +
             std::to_string(rep.seconds) + " s";
    return rep.records.size() == 10000 && violations == 0 &&
           rep.seconds < 30.0;
}

// 4 -------------------------------------------------------------------------
bool worst_case_family(std::string& detail) {
    int members = 0;
    for (std::int64_t j = 1; j <= 5; ++j) {
        for (std::int64_t dj = 2 * j - 1; dj <= 15; ++dj) {
            auto fam = densitylab::worst_case_family(j, dj);
            Rational expect =
                Rational(j, dj) + Rational(dj, dj + 2 * j - 1);
            if (core::density(fam) != expect) {
                detail = "density mismatch at j=" + std::to_string(j) +
                         " dj=" + std::to_string(dj);
                return false;
            }
            auto rep = densitylab::claim_property(fam);
            for (const auto& rec : rep.records) {
                bool should_fail = rec.index == static_cast<std::size_t>(j);
                if (rec.satisfied == should_fail) {
                    detail = "claim pattern wrong at j=" + std::to_string(j) +
                             " dj=" + std::to_string(dj) +
                             " index=" + std::to_string(rec.index);
                    return false;
                }
            }
            ++members;
        }
    }
    detail = std::to_string(members) +
             " members: exact densities, violation exactly at index j";
    return true;
}

// 5 -------------------------------------------------------------------------
bool gap_scan(std::string& detail) {
    auto scan = densitylab::gap_infimum_scan(10000.0, 0.5);
    const double threshold = std::sqrt(2.0) - 0.5;
    double line_err = std::abs(scan.line_value_at_xmax - threshold);
    detail = "min " + std::to_string(scan.min_value) + " at (" +
             std::to_string(scan.argmin_x) + ", " +
             std::to_string(scan.argmin_y) + "), line error " +
             std::to_string(line_err) + ", " + std::to_string(scan.points) +
             " points";
    return scan.all_above_threshold && scan.min_value > threshold &&
           line_err < 1e-3;
}

// 6 -------------------------------------------------------------------------
bool threshold_families(std::string& detail) {
    auto f2 = densitylab::pinwheel_no_family(2);
    auto f3 = densitylab::pinwheel_no_family(3);
    if (f2.deadlines.values() != std::vector<std::int64_t>{2, 2, 3} ||
        f2.k != 13 || f3.k != 19) {
        detail = "family construction mismatch";
        return false;
    }
    if (oracle::k_visits_decide(f2).status != oracle::DecideStatus::No ||
        oracle::k_visits_decide(f3).status != oracle::DecideStatus::No) {
        detail = "state-space oracle did not refute the family";
        return false;
    }
    for (std::int64_t k = 1; k <= 3; ++k) {
        for (std::int64_t n = 1; n <= 50; ++n) {
            auto fam = densitylab::divergent_family(k, n);
            if (!core::verify_k_visits(fam.instance, fam.schedule).feasible) {
                detail = "divergent schedule failed at k=" +
                         std::to_string(k) + " n=" + std::to_string(n);
                return false;
            }
        }
    }
    // density climbs past 3 at these sizes (and not one step earlier for k=2)
    bool grows =
        core::density(densitylab::divergent_family(1, 11).instance.deadlines) >
            3 &&
        core::density(densitylab::divergent_family(2, 57).instance.deadlines) >
            3 &&
        core::density(
            densitylab::divergent_family(3, 354).instance.deadlines) > 3 &&
        core::density(densitylab::divergent_family(2, 56).instance.deadlines) <=
            3;
    detail = "families refuted; 150 divergent schedules verified; density "
             "exceeds 3 at n = 11/57/354 for k = 1/2/3";
    return grows;
}

// 7 -------------------------------------------------------------------------
bool hardness_chain(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t yes_count = 0, no_count = 0, trivial = 0;
    for (int it = 0; it < 200; ++it) {
        Rng rng = Rng::stream(31337, "chain", static_cast<std::uint64_t>(it));
        // a third raw draws, a third built around a hidden matching, a third
        // built then nudged off; all simple sets with values at most 9
        hardness::NMTSInstance inst;
        int mode = it % 3;
        for (;;) {
            std::int64_t n = rng.range(1, 4);
            auto draw = [&](std::vector<std::int64_t>& out,
                            std::int64_t max_value) {
                out.clear();
                while (static_cast<std::int64_t>(out.size()) < n) {
                    std::int64_t v = rng.range(1, max_value);
                    if (std::find(out.begin(), out.end(), v) == out.end())
                        out.push_back(v);
                }
                std::sort(out.begin(), out.end());
            };
            if (mode == 0) {
                draw(inst.a_set, 9);
                draw(inst.b_set, 9);
                draw(inst.t_set, 9);
            } else {
                draw(inst.a_set, 5);
                draw(inst.b_set, 4);
                std::vector<std::size_t> perm(static_cast<std::size_t>(n));
                for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
                for (std::size_t i = perm.size(); i-- > 1;)
                    std::swap(perm[i],
                              perm[static_cast<std::size_t>(rng.uniform(i + 1))]);
                inst.t_set.clear();
                for (std::size_t i = 0; i < perm.size(); ++i)
                    inst.t_set.push_back(inst.a_set[i] +
                                         inst.b_set[perm[i]]);
                std::sort(inst.t_set.begin(), inst.t_set.end());
                if (std::adjacent_find(inst.t_set.begin(),
                                       inst.t_set.end()) != inst.t_set.end())
                    continue;
                if (mode == 2) {
                    // sum-preserving nudge: keeps the balance identity, so
                    // the instance reaches the matching stage
                    if (n < 2) continue;
                    auto up = static_cast<std::size_t>(
                        rng.uniform(static_cast<std::uint64_t>(n)));
                    auto down = static_cast<std::size_t>(
                        rng.uniform(static_cast<std::uint64_t>(n)));
                    if (up == down) continue;
                    inst.t_set[up] += 1;
                    inst.t_set[down] -= 1;
                    std::sort(inst.t_set.begin(), inst.t_set.end());
                    if (inst.t_set.front() < 1 ||
                        inst.t_set.back() > 9 ||
                        std::adjacent_find(inst.t_set.begin(),
                                           inst.t_set.end()) !=
                            inst.t_set.end())
                        continue;
                }
            }
            if (inst.t_set.back() > inst.a_set.back() &&
                inst.t_set.back() > inst.b_set.back())
                break;
        }
        bool source = hardness::solve_nmts_bf(inst).yes();
        auto chain = hardness::run_chain(inst);
        if (chain.trivial_no) {
            if (source) {
                detail = "trivial-no on a yes instance at iteration " +
                         std::to_string(it);
                return false;
            }
            ++trivial;
            continue;
        }
        auto r1 = hardness::solve_srnmts_bf(*chain.srnmts, 16);
        auto r2 = hardness::solve_in3dm_bf(*chain.in3dm, 16);
        auto r3 = hardness::solve_in3dm_bf(*chain.in3dm_shifted, 16);
        if (r1.status == hardness::BfResult::Status::Refused ||
            r2.status == hardness::BfResult::Status::Refused ||
            r3.status == hardness::BfResult::Status::Refused) {
            detail = "oracle refused at iteration " + std::to_string(it);
            return false;
        }
        bool s1 = r1.yes();
        bool s2 = r2.yes();
        bool s3 = r3.yes();
        auto pm = posmatch::solve_brute_force(*chain.pm, 4096);
        bool s4 = pm.status == posmatch::SolveStatus::Feasible;
        if (pm.status == posmatch::SolveStatus::Undecided || s1 != source ||
            s2 != source || s3 != source || s4 != source) {
            detail = "verdict drift at iteration " + std::to_string(it);
            return false;
        }
        // discretized sequence must be exactly [2P - n], multiplicity <= 2
        for (std::size_t i = 0; i < chain.pm->size(); ++i) {
            if (chain.pm->seq[i] != static_cast<std::int64_t>(i) + 1) {
                detail = "padded sequence not contiguous at iteration " +
                         std::to_string(it);
                return false;
            }
        }
        const auto& dv = chain.pm->deadlines.values();
        for (std::size_t i = 0; i + 2 < dv.size(); ++i) {
            if (dv[i] == dv[i + 2]) {
                detail = "multiplicity above 2 at iteration " +
                         std::to_string(it);
                return false;
            }
        }
        (source ? yes_count : no_count)++;
    }
    double dt = seconds_since(t0);
    detail = "200 instances (" + std::to_string(yes_count) + " yes, " +
             std::to_string(no_count) + " no, " + std::to_string(trivial) +
             " trivial-no), every stage agrees, " + std::to_string(dt) + " s";
    return dt < 60.0;
}

// 8 -------------------------------------------------------------------------
bool randomized_pipeline(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t yes_count = 0, no_count = 0;
    for (std::uint64_t it = 0; yes_count + no_count < 300; ++it) {
        Rng rng = Rng::stream(777, "randpm", it);
        std::int64_t n = rng.range(1, 7);
        std::vector<std::int64_t> pool;
        for (int v = 0; v < 3; ++v) pool.push_back(rng.range(1, 2 * n));
        std::vector<std::int64_t> d(static_cast<std::size_t>(n));
        for (auto& v : d) v = pool[static_cast<std::size_t>(rng.range(0, 2))];
        Deadlines deadlines(std::move(d));
        if (discretize::first_position_deficit(deadlines)) continue;

        posmatch::PMInstance inst = [&] {
            if (rng.range(0, 1) == 0) {
                auto red = posmatch::two_visits_to_pm(deadlines);
                return *red.pm;
            }
            // free-standing targets still make a position-matching instance
            auto seq = discretize::discretized_sequence(deadlines);
            std::vector<std::int64_t> t;
            while (static_cast<std::int64_t>(t.size()) < n) {
                std::int64_t v = rng.range(1, 3 * n);
                if (std::find(t.begin(), t.end(), v) == t.end())
                    t.push_back(v);
            }
            std::sort(t.begin(), t.end());
            return posmatch::PMInstance{deadlines, seq, t};
        }();

        auto brute = posmatch::solve_brute_force(inst, 7);
        auto randomized = randmatch::solve_pm_randomized(
            inst,
            Rng::stream(778, "seed", static_cast<std::uint64_t>(it)).next(),
            5, 3);
        if (brute.status == posmatch::SolveStatus::Feasible) {
            ++yes_count;
            if (randomized.status != posmatch::SolveStatus::Feasible) {
                detail = "randomized missed a yes at iteration " +
                         std::to_string(it);
                return false;
            }
            try {
                posmatch::validate_matching(inst, *randomized.matching);
            } catch (const std::exception& e) {
                detail = std::string("invalid certificate: ") + e.what();
                return false;
            }
        } else {
            ++no_count;
            if (randomized.status != posmatch::SolveStatus::ProbablyInfeasible) {
                detail = "randomized disagreed on a no at iteration " +
                         std::to_string(it);
                return false;
            }
        }
    }

    // gadget equivalence on random multigraphs
    for (int it = 0; it < 100; ++it) {
        Rng rng = Rng::stream(779, "gadget", static_cast<std::uint64_t>(it));
        randmatch::WeightedBipartiteMultigraph g;
        g.left_count = static_cast<std::size_t>(rng.range(1, 4));
        g.right_count = g.left_count;
        std::int64_t edges = rng.range(
            static_cast<std::int64_t>(g.left_count),
            static_cast<std::int64_t>(3 * g.left_count));
        for (std::int64_t e = 0; e < edges; ++e)
            g.edges.push_back({rng.uniform(g.left_count),
                               rng.uniform(g.right_count),
                               BigInt(rng.range(0, 9)), std::nullopt});
        auto before = randmatch::ewpm_brute_force(g);
        auto after = randmatch::ewpm_brute_force(
            randmatch::multigraph_to_simple({g, BigInt(0)}).graph, 24);
        if (before != after) {
            detail = "gadget weight multiset drift at iteration " +
                     std::to_string(it);
            return false;
        }
    }
    double dt = seconds_since(t0);
    detail = "300 instances (" + std::to_string(yes_count) +
             " yes with certificates, " + std::to_string(no_count) +
             " probably-no), 100 gadget graphs equal, " + std::to_string(dt) +
             " s";
    return dt < 60.0;
}

// 9 -------------------------------------------------------------------------
void enumerate_multisets(std::int64_t n, std::int64_t max_value,
                         std::vector<std::int64_t>& cur,
                         const std::function<void(
                             const std::vector<std::int64_t>&)>& fn) {
    if (static_cast<std::int64_t>(cur.size()) == n) {
        fn(cur);
        return;
    }
    std::int64_t lo = cur.empty() ? 1 : cur.back();
    for (std::int64_t v = lo; v <= max_value; ++v) {
        cur.push_back(v);
        enumerate_multisets(n, max_value, cur, fn);
        cur.pop_back();
    }
}

bool structural_sweeps(std::string& detail) {
    // exhaustive over every deadline multiset with n <= 3
    int exhaustive = 0;
    bool exhaustive_ok = true;
    for (std::int64_t n = 1; n <= 3 && exhaustive_ok; ++n) {
        std::vector<std::int64_t> cur;
        enumerate_multisets(n, 2 * n, cur, [&](const auto& d) {
            auto values = d;
            Deadlines inst(std::move(values));
            auto free_form = oracle::two_visits_search(inst, false);
            auto confined = oracle::two_visits_search(inst, true);
            if (free_form.status != confined.status) exhaustive_ok = false;
            ++exhaustive;
        });
    }
    if (!exhaustive_ok) {
        detail = "primary-position drift in the exhaustive sweep";
        return false;
    }

    // primary positions can be confined to the discretized sequence
    Rng rng(90);
    for (int it = 0; it < 120; ++it) {
        std::int64_t n = rng.range(1, 5);
        std::vector<std::int64_t> d(static_cast<std::size_t>(n));
        for (auto& v : d) v = rng.range(1, 2 * n);
        Deadlines inst(std::move(d));
        auto free_form = oracle::two_visits_search(inst, false);
        auto confined = oracle::two_visits_search(inst, true);
        if (free_form.status != confined.status) {
            detail = "primary-position drift on instance " +
                     densitylab::instance_hash(inst);
            return false;
        }
    }
    // singles at their latest feasible positions
    for (int it = 0; it < 120; ++it) {
        std::int64_t m = rng.range(0, 4);
        std::int64_t n = rng.range(1, 5 - std::max<std::int64_t>(m - 1, 0));
        if (m + n > 5) continue;
        std::int64_t horizon = m + 2 * n;
        std::vector<std::int64_t> singles(static_cast<std::size_t>(m));
        for (auto& v : singles) v = rng.range(1, horizon);
        std::vector<std::int64_t> doubles(static_cast<std::size_t>(n));
        for (auto& v : doubles) v = rng.range(1, horizon);
        core::OneOrTwoInstance inst{Deadlines(singles), Deadlines(doubles)};
        auto free_form = oracle::one_or_two_search(inst, false);
        auto canonical = oracle::one_or_two_search(inst, true);
        if (free_form.status != canonical.status) {
            detail = "disconnection drift at iteration " + std::to_string(it);
            return false;
        }
    }
    // cluster split: conjunction of parts equals the whole
    int compared = 0;
    for (int it = 0; it < 150; ++it) {
        std::int64_t n = rng.range(1, 8);
        std::vector<std::int64_t> d(static_cast<std::size_t>(n));
        for (auto& v : d) v = rng.range(1, 2 * n);
        Deadlines inst(std::move(d));
        auto red = posmatch::two_visits_to_pm(inst);
        if (red.trivially_infeasible) continue;
        auto whole = posmatch::solve_brute_force(*red.pm, 8);
        if (whole.status == posmatch::SolveStatus::Undecided) continue;
        bool parts_yes = true;
        for (const auto& part : posmatch::split_by_clusters(*red.pm)) {
            auto r = posmatch::solve_brute_force(part.instance, 8);
            parts_yes =
                parts_yes && r.status == posmatch::SolveStatus::Feasible;
        }
        if ((whole.status == posmatch::SolveStatus::Feasible) != parts_yes) {
            detail = "cluster conjunction drift at iteration " +
                     std::to_string(it);
            return false;
        }
        ++compared;
    }
    detail = std::to_string(exhaustive) +
             " exhaustive + 240 random role-search equivalences and " +
             std::to_string(compared) + " cluster conjunctions hold";
    return compared > 50;
}

// 10 ------------------------------------------------------------------------
bool cyclic_extraction(std::string& detail) {
    // handcrafted pairs that meet the precondition by construction
    struct Pair {
        Deadlines d;
        std::int64_t k;
        std::vector<std::int64_t> tasks;
    };
    std::vector<Pair> pinned;
    pinned.push_back({Deadlines({2, 2}), 3, {1, 2, 1, 2, 1, 2}});
    pinned.push_back({Deadlines({1}), 2, {1, 1}});
    {
        std::vector<std::int64_t> rr;
        for (int rep = 0; rep < 10; ++rep)
            for (std::int64_t t = 1; t <= 3; ++t) rr.push_back(t);
        pinned.push_back({Deadlines({3, 3, 3}), 10, rr});
    }
    {
        std::vector<std::int64_t> alt;
        for (int rep = 0; rep < 5; ++rep) {
            alt.push_back(1);
            alt.push_back(2);
        }
        pinned.push_back({Deadlines({2, 4}), 5, alt});
    }
    int extracted = 0;
    for (const auto& pair : pinned) {
        auto win = densitylab::cyclic_extract(
            {pair.d, pair.k}, core::Schedule::from_tasks(pair.tasks));
        if (!win) {
            detail = "pinned pair unexpectedly missed the precondition";
            return false;
        }
        if (!densitylab::verify_pinwheel_window(pair.d, win->window)
                 .feasible) {
            detail = "pinned window failed the pinwheel check";
            return false;
        }
        ++extracted;
    }

    // sampled feasible instances with prod d <= 30
    Rng rng(101);
    for (int it = 0; it < 400; ++it) {
        std::int64_t n = rng.range(1, 3);
        std::vector<std::int64_t> d(static_cast<std::size_t>(n));
        for (auto& v : d) v = rng.range(1, 5);
        Deadlines inst(std::move(d));
        std::int64_t prod = 1;
        for (auto v : inst.values()) prod *= v;
        if (prod > 30) continue;
        std::int64_t k = (prod + 2) / n + 1 + rng.range(0, 2);
        auto decided = oracle::k_visits_decide({inst, k});
        if (decided.status != oracle::DecideStatus::Yes) continue;
        std::optional<densitylab::CyclicWindow> win;
        try {
            win = densitylab::cyclic_extract({inst, k}, *decided.witness);
        } catch (const std::exception& e) {
            detail = std::string("extraction broke: ") + e.what();
            return false;
        }
        if (!win) continue;  // witness missed the precondition
        if (!densitylab::verify_pinwheel_window(inst, win->window).feasible) {
            detail = "extracted window failed the pinwheel check";
            return false;
        }
        ++extracted;
    }
    detail = std::to_string(extracted) + " windows extracted, all verified";
    return extracted >= 4;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "discretized-sequence fixtures (< 1 ms)", discretized_fixtures},
        {2, "three-visit counterexample suite (< 60 s)", counterexample_suite},
        {3, "low-density sweep, 10^4 instances (< 30 s)", low_density_sweep},
        {4, "two-level family: exact densities, violation at j",
         worst_case_family},
        {5, "gap-function scan to x = 10^4", gap_scan},
        {6, "threshold families: refutations and divergence",
         threshold_families},
        {7, "hardness chain equivalence, 200 instances (< 60 s)",
         hardness_chain},
        {8, "randomized pipeline, 300 instances + 100 gadgets (< 60 s)",
         randomized_pipeline},
        {9, "structural property sweeps", structural_sweeps},
        {10, "cyclic window extraction", cyclic_extraction},
    };

    int failures = 0;
    for (auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL",
                    c.id, c.name.c_str(), detail.empty() ? "" : " -- ",
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
