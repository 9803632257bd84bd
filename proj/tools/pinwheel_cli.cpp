// pinwheel: finite pinwheel-scheduling workbench.
//
// Exit codes: 0 yes/success, 1 no/infeasible, 2 undecided or refused,
// 3 usage or input error, 4 internal invariant breach.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pinwheel/densitylab.hpp"
#include "pinwheel/hardness.hpp"
#include "pinwheel/json_io.hpp"
#include "pinwheel/oracle.hpp"
#include "pinwheel/posmatch.hpp"
#include "pinwheel/randmatch.hpp"
#include "pinwheel/rng.hpp"

namespace pw = pinwheel;
using pw::io::json;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitUsage = 3;
constexpr int kExitInternal = 4;

std::size_t env_size(const char* name, std::size_t fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    return static_cast<std::size_t>(std::strtoull(v, nullptr, 10));
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open " + out_path);
        out << text;
        if (text.empty() || text.back() != '\n') out << "\n";
    }
}

void emit_json(const std::string& out_path, const json& j) {
    emit(out_path, j.dump(2));
}

int status_exit(pw::posmatch::SolveStatus s) {
    switch (s) {
        case pw::posmatch::SolveStatus::Feasible: return kExitYes;
        case pw::posmatch::SolveStatus::Infeasible: return kExitNo;
        case pw::posmatch::SolveStatus::ProbablyInfeasible: return kExitNo;
        case pw::posmatch::SolveStatus::Undecided: return kExitUndecided;
    }
    return kExitInternal;
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
    std::string in_path;
    std::string out_path;
    std::string emit_schedule;
    std::string variant = "auto";
    std::string algo = "auto";
    std::uint64_t seed = 0;
    bool seed_set = false;
    int trials = 5;
    std::size_t brute_cap = env_size("PINWHEEL_BRUTE_CAP", 10);
    std::size_t p_cap = env_size("PINWHEEL_P_CAP", 3);
};

// Removed deadlines never expire inside the trimmed horizon, so their
// visits stack at the tail in reverse removal order; each block lands on
// exactly the positions that vanished when its task was dropped.
struct SolveOutcome {
    pw::posmatch::SolveResult result;
    std::optional<pw::core::Schedule> schedule;
};

SolveOutcome solve_two_visits(const pw::core::Deadlines& original,
                              const pw::posmatch::SolveConfig& config) {
    SolveOutcome out;
    auto removed = pw::core::normalize_removed(original, 2);
    auto trimmed = pw::core::normalize(original, 2);
    auto red = pw::posmatch::two_visits_to_pm(trimmed);
    if (red.trivially_infeasible) {
        out.result = {pw::posmatch::SolveStatus::Infeasible, std::nullopt,
                      "first visits cannot fit before their deadlines"};
        return out;
    }
    out.result = pw::posmatch::solve_auto(*red.pm, config);
    if (out.result.status != pw::posmatch::SolveStatus::Feasible) return out;

    auto sched = pw::posmatch::pm_to_schedule({&*out.result.matching, 1},
                                              std::nullopt,
                                              2 * static_cast<std::int64_t>(
                                                      trimmed.size()));
    std::vector<pw::core::ScheduleEntry> entries = sched.entries();
    std::int64_t pos = sched.length();
    std::int64_t task = static_cast<std::int64_t>(trimmed.size());
    for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
        ++task;
        entries.push_back({++pos, task, pw::core::Role::Primary});
        entries.push_back({++pos, task, pw::core::Role::Secondary});
    }
    pw::core::Schedule full(std::move(entries));
    if (!pw::core::verify_two_visits(original, full).feasible)
        throw std::logic_error("solver schedule failed re-verification");
    out.schedule = std::move(full);
    return out;
}

SolveOutcome solve_one_or_two(const pw::core::OneOrTwoInstance& original,
                              const pw::posmatch::SolveConfig& config) {
    // trim to the reachable horizon, remembering what fell off and whether
    // it was a single or a double
    std::vector<std::int64_t> singles = original.single_deadlines.values();
    std::vector<std::int64_t> doubles = original.double_deadlines.values();
    struct Removed {
        bool single;
        std::int64_t value;
    };
    std::vector<Removed> removed;
    for (;;) {
        std::int64_t horizon = static_cast<std::int64_t>(singles.size()) +
                               2 * static_cast<std::int64_t>(doubles.size());
        std::int64_t worst_single =
            singles.empty() ? 0 : singles.back();
        std::int64_t worst_double =
            doubles.empty() ? 0 : doubles.back();
        if (worst_single <= horizon && worst_double <= horizon) break;
        if (worst_single >= worst_double) {
            removed.push_back({true, singles.back()});
            singles.pop_back();
        } else {
            removed.push_back({false, doubles.back()});
            doubles.pop_back();
        }
    }
    pw::core::OneOrTwoInstance trimmed{pw::core::Deadlines(singles),
                                       pw::core::Deadlines(doubles)};

    SolveOutcome out;
    auto red = pw::posmatch::one_or_two_to_pm(trimmed);
    if (red.trivially_infeasible) {
        out.result = {pw::posmatch::SolveStatus::Infeasible, std::nullopt,
                      red.reason};
        return out;
    }
    out.result = pw::posmatch::solve_auto(*red.pm, config);
    if (out.result.status != pw::posmatch::SolveStatus::Feasible) return out;

    auto sched = pw::posmatch::pm_to_schedule({&*out.result.matching, 1},
                                              red.placement,
                                              trimmed.horizon());

    // remap trimmed task ids to the original numbering, then append the
    // removed tasks
    std::int64_t m_trim = static_cast<std::int64_t>(singles.size());
    std::int64_t m_orig =
        static_cast<std::int64_t>(original.single_deadlines.size());
    std::vector<pw::core::ScheduleEntry> entries;
    for (auto e : sched.entries()) {
        if (e.task > m_trim) e.task = m_orig + (e.task - m_trim);
        entries.push_back(e);
    }
    std::int64_t pos = sched.length();
    std::int64_t next_single = m_trim;
    std::int64_t next_double =
        m_orig + static_cast<std::int64_t>(doubles.size());
    for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
        if (it->single) {
            entries.push_back({++pos, ++next_single, pw::core::Role::Single});
        } else {
            ++next_double;
            entries.push_back({++pos, next_double, pw::core::Role::Primary});
            entries.push_back({++pos, next_double, pw::core::Role::Secondary});
        }
    }
    pw::core::Schedule full(std::move(entries));
    if (!pw::core::verify_one_or_two(original, full).feasible)
        throw std::logic_error("solver schedule failed re-verification");
    out.schedule = std::move(full);
    return out;
}

int run_solve(const SolveArgs& args) {
    auto file = pw::io::instance_from_json(pw::io::load_file(args.in_path));
    auto strategy = pw::posmatch::strategy_from_name(args.algo);
    if (!strategy) throw std::invalid_argument("unknown algo " + args.algo);
    bool needs_seed = *strategy == pw::posmatch::Strategy::Auto ||
                      *strategy == pw::posmatch::Strategy::Randomized;
    if (needs_seed && !args.seed_set)
        throw std::invalid_argument(
            "--seed is required for randomized strategies (auto may "
            "dispatch to the randomized route)");

    pw::posmatch::SolveConfig config;
    config.strategy = *strategy;
    config.seed = args.seed;
    config.trials = args.trials;
    config.brute_cap = args.brute_cap;
    config.p_cap = args.p_cap;

    json report{{"command", "solve"}, {"algo", args.algo}};
    if (args.seed_set) report["seed"] = args.seed;
    if (needs_seed) {
        report["trials"] = args.trials;
        report["field_modulus"] = (1ULL << 61) - 1;
    }

    SolveOutcome outcome;
    std::string variant = args.variant;
    if (auto* kv = std::get_if<pw::core::KVisitsInstance>(&file)) {
        if (variant == "auto") variant = "2v";
        if (variant != "2v")
            throw std::invalid_argument("instance file is a k-visits input; "
                                        "use --variant 2v");
        if (kv->k != 2)
            throw std::invalid_argument(
                "solve handles the two-visit problem; use 'oracle decide' "
                "for other k");
        outcome = solve_two_visits(kv->deadlines, config);
    } else if (auto* ot = std::get_if<pw::core::OneOrTwoInstance>(&file)) {
        if (variant == "auto") variant = "1or2";
        if (variant != "1or2")
            throw std::invalid_argument(
                "instance file is a one-or-two input; use --variant 1or2");
        outcome = solve_one_or_two(*ot, config);
    } else {
        auto& pmf = std::get<pw::io::PMFile>(file);
        if (variant == "auto") variant = "pm";
        if (variant != "pm")
            throw std::invalid_argument(
                "instance file is a position-matching input; use --variant pm");
        auto inst = pw::posmatch::PMInstance::make(pmf.deadlines, pmf.targets);
        outcome.result = pw::posmatch::solve_auto(inst, config);
    }

    report["variant"] = variant;
    report["status"] = pw::posmatch::solve_status_name(outcome.result.status);
    if (!outcome.result.note.empty()) report["note"] = outcome.result.note;
    if (outcome.result.matching)
        report["matching"] = pw::io::matching_to_json(*outcome.result.matching);
    if (outcome.schedule) {
        report["schedule"] = pw::io::schedule_to_json(*outcome.schedule);
        report["verified"] = true;
        if (!args.emit_schedule.empty())
            emit_json(args.emit_schedule,
                      pw::io::schedule_to_json(*outcome.schedule));
    }
    emit_json(args.out_path, report);
    return status_exit(outcome.result.status);
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const std::string& in_path, const std::string& sched_path,
               const std::string& out_path) {
    auto file = pw::io::instance_from_json(pw::io::load_file(in_path));
    auto sched = pw::io::schedule_from_json(pw::io::load_file(sched_path));
    pw::core::Verdict verdict;
    if (auto* kv = std::get_if<pw::core::KVisitsInstance>(&file)) {
        bool roled = true;
        for (const auto& e : sched.entries())
            roled = roled && e.role != pw::core::Role::Plain;
        verdict = (kv->k == 2 && roled)
                      ? pw::core::verify_two_visits(kv->deadlines, sched)
                      : pw::core::verify_k_visits(*kv, sched);
    } else if (auto* ot = std::get_if<pw::core::OneOrTwoInstance>(&file)) {
        verdict = pw::core::verify_one_or_two(*ot, sched);
    } else {
        throw std::invalid_argument(
            "verify expects a kvisits or one_or_two instance");
    }
    emit_json(out_path, pw::io::verdict_to_json(verdict));
    return verdict.feasible ? kExitYes : kExitNo;
}

// ---------------------------------------------------------------------------
// discretize

int run_discretize(const std::string& in_path, std::int64_t horizon,
                   const std::string& out_path) {
    auto file = pw::io::instance_from_json(pw::io::load_file(in_path));
    auto* kv = std::get_if<pw::core::KVisitsInstance>(&file);
    if (!kv)
        throw std::invalid_argument("discretize expects a kvisits instance");
    if (auto deficit = pw::discretize::first_position_deficit(kv->deadlines)) {
        emit_json(out_path, json{{"position_deficit", *deficit}});
        return kExitNo;
    }
    auto seq = pw::discretize::discretized_sequence(kv->deadlines);
    if (horizon == 0) horizon = kv->horizon();
    json spans = json::array();
    for (const auto& span : pw::discretize::clusters(seq))
        spans.push_back(json{{"start_index", span.start_index},
                             {"end_index", span.end_index},
                             {"start_value", span.start_value},
                             {"end_value", span.end_value}});
    json out{{"a", seq.positions},
             {"clusters", spans},
             {"horizon", horizon},
             {"targets", pw::discretize::complement_targets(seq, horizon)}};
    emit_json(out_path, out);
    return kExitYes;
}

// ---------------------------------------------------------------------------
// reduce

int run_reduce(const std::string& chain, const std::string& in_path,
               const std::string& out_path, bool verify_with_oracle,
               const std::string& report_path) {
    if (chain != "nmts:pm")
        throw std::invalid_argument("supported chain: nmts:pm");
    auto inst = pw::io::nmts_from_json(pw::io::load_file(in_path));
    auto result = pw::hardness::run_chain(inst);

    json steps = json::array();
    auto oracle_row = [&](const std::string& stage,
                          pw::hardness::BfResult r) -> json {
        switch (r.status) {
            case pw::hardness::BfResult::Status::Yes:
                return json{{"stage", stage}, {"verdict", "yes"}};
            case pw::hardness::BfResult::Status::No:
                return json{{"stage", stage}, {"verdict", "no"}};
            default:
                return json{{"stage", stage},
                            {"verdict", "refused"},
                            {"note", r.note}};
        }
    };

    bool mismatch = false;
    if (verify_with_oracle) {
        auto src = pw::hardness::solve_nmts_bf(inst);
        steps.push_back(oracle_row("nmts", src));
        auto expect = src.status;
        auto check = [&](const std::string& stage,
                         pw::hardness::BfResult r) {
            steps.push_back(oracle_row(stage, r));
            if (r.status != pw::hardness::BfResult::Status::Refused &&
                expect != pw::hardness::BfResult::Status::Refused &&
                r.status != expect)
                mismatch = true;
        };
        if (result.trivial_no) {
            if (expect == pw::hardness::BfResult::Status::Yes)
                mismatch = true;
        } else {
            check("srnmts",
                  pw::hardness::solve_srnmts_bf(*result.srnmts, 16));
            check("in3dm", pw::hardness::solve_in3dm_bf(*result.in3dm, 16));
            check("in3dm-shifted",
                  pw::hardness::solve_in3dm_bf(*result.in3dm_shifted, 16));
            auto pm = pw::posmatch::solve_brute_force(*result.pm, 4096);
            json row{{"stage", "pm"},
                     {"verdict", pw::posmatch::solve_status_name(pm.status)}};
            steps.push_back(row);
            bool pm_yes =
                pm.status == pw::posmatch::SolveStatus::Feasible;
            if (pm.status != pw::posmatch::SolveStatus::Undecided &&
                pm_yes != (expect == pw::hardness::BfResult::Status::Yes))
                mismatch = true;
        }
    }

    json report{{"command", "reduce"}, {"chain", chain}};
    if (result.trivial_no) {
        report["trivial_no"] = true;
        report["stage"] = result.stage;
        report["reason"] = result.reason;
    } else {
        report["srnmts"] = json{{"a", result.srnmts->a_set},
                                {"t", result.srnmts->t_set}};
        report["in3dm_shifted"] =
            json{{"a", result.in3dm_shifted->a_set},
                 {"t", result.in3dm_shifted->t_set}};
        pw::io::PMFile pm_file{result.pm->deadlines, result.pm->targets};
        report["pm"] = pw::io::instance_to_json(pm_file);
        if (!out_path.empty())
            emit_json(out_path, pw::io::instance_to_json(pm_file));
    }
    if (verify_with_oracle) {
        report["oracle_table"] = steps;
        report["oracle_agreement"] = !mismatch;
    }
    emit_json(report_path, report);
    if (mismatch) return kExitInternal;
    return result.trivial_no ? kExitNo : kExitYes;
}

// ---------------------------------------------------------------------------
// oracle

int run_oracle_decide(const std::string& in_path,
                      const std::string& constraint,
                      const std::string& out_path,
                      const pw::oracle::OracleCaps& caps) {
    auto file = pw::io::instance_from_json(pw::io::load_file(in_path));
    auto* kv = std::get_if<pw::core::KVisitsInstance>(&file);
    if (!kv)
        throw std::invalid_argument("oracle decide expects a kvisits instance");
    pw::oracle::SearchConstraints constraints;
    if (constraint == "distinct-discretized")
        constraints.distinct_tasks_on_discretized = true;
    else if (constraint == "sorted-first-visits")
        constraints.sorted_first_visits = true;
    else if (!constraint.empty())
        throw std::invalid_argument("unknown constraint " + constraint);

    auto res = pw::oracle::k_visits_decide(*kv, constraints, caps);
    json out{{"command", "oracle decide"},
             {"states_explored", res.states_explored}};
    switch (res.status) {
        case pw::oracle::DecideStatus::Yes:
            out["status"] = "yes";
            out["witness"] = pw::io::schedule_to_json(*res.witness);
            break;
        case pw::oracle::DecideStatus::No: out["status"] = "no"; break;
        case pw::oracle::DecideStatus::Refused:
            out["status"] = "refused";
            out["note"] = res.note;
            break;
    }
    emit_json(out_path, out);
    if (res.status == pw::oracle::DecideStatus::Yes) return kExitYes;
    if (res.status == pw::oracle::DecideStatus::No) return kExitNo;
    return kExitUndecided;
}

int run_oracle_counterexample(const std::string& out_path) {
    auto rep = pw::oracle::counterexample_3visits();
    json out{{"command", "oracle counterexample-3v"},
             {"deadlines", rep.instance.deadlines.values()},
             {"k", rep.instance.k},
             {"schedule_verifies", rep.schedule_verifies},
             {"distinct_constrained_infeasible",
              rep.distinct_constrained_infeasible},
             {"sorted_constrained_infeasible",
              rep.sorted_constrained_infeasible},
             {"states_distinct", rep.states_distinct},
             {"states_sorted", rep.states_sorted},
             {"seconds", rep.seconds},
             {"schedule", pw::io::schedule_to_json(rep.schedule)}};
    emit_json(out_path, out);
    return kExitYes;
}

int run_oracle_sweep(std::uint64_t count, std::int64_t max_n,
                     std::uint64_t seed, const std::string& out_path) {
    auto rep = pw::oracle::pm_equiv_sweep(count, max_n, seed);
    json out{{"command", "oracle sweep"},
             {"total", rep.total},
             {"yes", rep.yes_count},
             {"no", rep.no_count},
             {"mismatches", rep.mismatches}};
    if (!rep.mismatch_instances.empty())
        out["mismatch_instances"] = rep.mismatch_instances;
    emit_json(out_path, out);
    return rep.mismatches == 0 ? kExitYes : kExitInternal;
}

// ---------------------------------------------------------------------------
// density

int run_density_check(const std::string& in_path,
                      const std::string& out_path) {
    auto file = pw::io::instance_from_json(pw::io::load_file(in_path));
    auto* kv = std::get_if<pw::core::KVisitsInstance>(&file);
    if (!kv)
        throw std::invalid_argument("density expects a kvisits instance");
    auto dens = pw::core::density(kv->deadlines);
    json out{{"command", "density"},
             {"density", pw::to_string(dens)},
             {"density_float", static_cast<double>(dens)},
             {"leq_sqrt2_minus_half", pw::leq_sqrt2_minus_half(dens)},
             {"leq_one", dens <= 1}};
    auto res = pw::densitylab::density_schedule_2v(kv->deadlines);
    json claim;
    if (res.report.deficit_index) {
        claim["position_deficit"] = *res.report.deficit_index;
    } else {
        json recs = json::array();
        for (const auto& r : res.report.records)
            recs.push_back(json{{"index", r.index},
                                {"d", r.d},
                                {"a", r.a},
                                {"t", r.t},
                                {"bound", r.bound},
                                {"satisfied", r.satisfied}});
        claim["records"] = recs;
        if (res.report.first_violation)
            claim["first_violation"] = *res.report.first_violation;
    }
    out["claim"] = claim;
    if (res.schedule) out["schedule"] = pw::io::schedule_to_json(*res.schedule);
    emit_json(out_path, out);
    return kExitYes;
}

int run_density_sweep(std::uint64_t count, std::int64_t max_n,
                      std::uint64_t seed, const std::string& threshold,
                      int workers, const std::string& out_path) {
    pw::densitylab::Threshold th;
    if (threshold == "sqrt2half")
        th = pw::densitylab::Threshold::Sqrt2Half;
    else if (threshold == "one")
        th = pw::densitylab::Threshold::One;
    else
        throw std::invalid_argument("threshold must be sqrt2half or one");
    auto rep = pw::densitylab::density_sweep(count, max_n, seed, th, workers);
    std::ostringstream csv;
    csv << "instance_hash,n,density,claim_ok,scheduled_ok\n";
    for (const auto& r : rep.records)
        csv << r.hash << "," << r.n << "," << r.density << ","
            << (r.claim_ok ? 1 : 0) << "," << (r.schedule_ok ? 1 : 0) << "\n";
    emit(out_path, csv.str());
    std::cerr << "sweep: " << rep.records.size() << " instances, "
              << rep.draws << " draws, " << rep.seconds << " s, "
              << (rep.all_ok ? "all ok" : "VIOLATIONS FOUND") << "\n";
    return rep.all_ok ? kExitYes : kExitInternal;
}

// ---------------------------------------------------------------------------
// family / generate

json family_json(const std::string& kind, std::int64_t j, std::int64_t dj,
                 std::int64_t x, std::int64_t k, std::int64_t n) {
    if (kind == "worstcase") {
        auto fam = pw::densitylab::worst_case_family(j, dj);
        json out = pw::io::instance_to_json(pw::core::KVisitsInstance{fam, 2});
        out["density"] = pw::to_string(pw::core::density(fam));
        out["claim_violation_index"] = j;
        return out;
    }
    if (kind == "pinwheelno") {
        auto fam = pw::densitylab::pinwheel_no_family(x);
        json out = pw::io::instance_to_json(fam);
        out["density"] = pw::to_string(pw::core::density(fam.deadlines));
        out["expected_verdict"] = "no";
        return out;
    }
    if (kind == "divergent") {
        auto fam = pw::densitylab::divergent_family(k, n);
        json out = pw::io::instance_to_json(fam.instance);
        out["density"] =
            pw::to_string(pw::core::density(fam.instance.deadlines));
        out["schedule"] = pw::io::schedule_to_json(fam.schedule);
        return out;
    }
    throw std::invalid_argument("unknown family kind " + kind);
}

int run_generate(const std::string& kind, std::uint64_t seed, std::int64_t n,
                 std::int64_t k, std::int64_t max_n, std::int64_t max_value,
                 const std::string& threshold, std::int64_t j,
                 std::int64_t dj, std::int64_t x, const std::string& out_path) {
    if (kind == "random") {
        pw::Rng rng = pw::Rng::stream(seed, "generate-random");
        std::vector<std::int64_t> d(static_cast<std::size_t>(n));
        for (auto& v : d) v = rng.range(1, k * n);
        emit_json(out_path, pw::io::instance_to_json(pw::core::KVisitsInstance{
                                pw::core::Deadlines(std::move(d)), k}));
        return kExitYes;
    }
    if (kind == "low-density") {
        pw::Rng rng = pw::Rng::stream(seed, "generate-lowdensity");
        auto th = threshold == "one" ? pw::densitylab::Threshold::One
                                     : pw::densitylab::Threshold::Sqrt2Half;
        auto inst = pw::densitylab::sample_low_density(rng, max_n, th);
        json out = pw::io::instance_to_json(
            pw::core::KVisitsInstance{inst, threshold == "one" ? 1 : 2});
        out["density"] = pw::to_string(pw::core::density(inst));
        emit_json(out_path, out);
        return kExitYes;
    }
    if (kind == "worstcase" || kind == "pinwheelno" || kind == "divergent") {
        emit_json(out_path, family_json(kind, j, dj, x, k, n));
        return kExitYes;
    }
    if (kind == "hardchain") {
        // simple sets of size n need n distinct values; the chain sweeps
        // work at n <= 4 with values <= 9
        std::int64_t n_cap = std::min<std::int64_t>(max_n, 4);
        if (max_value < n_cap)
            throw std::invalid_argument(
                "hardchain needs --max-value >= min(--max-n, 4)");
        pw::Rng rng = pw::Rng::stream(seed, "generate-hardchain");
        for (;;) {
            std::int64_t size = rng.range(1, n_cap);
            auto draw = [&](std::vector<std::int64_t>& out_set) {
                out_set.clear();
                while (static_cast<std::int64_t>(out_set.size()) < size) {
                    std::int64_t v = rng.range(1, max_value);
                    if (std::find(out_set.begin(), out_set.end(), v) ==
                        out_set.end())
                        out_set.push_back(v);
                }
                std::sort(out_set.begin(), out_set.end());
            };
            pw::hardness::NMTSInstance inst;
            draw(inst.a_set);
            draw(inst.b_set);
            draw(inst.t_set);
            if (inst.t_set.back() <= inst.a_set.back() ||
                inst.t_set.back() <= inst.b_set.back())
                continue;
            emit_json(out_path, pw::io::nmts_to_json(inst));
            return kExitYes;
        }
    }
    throw std::invalid_argument("unknown generate kind " + kind);
}

// ---------------------------------------------------------------------------
// bench

int run_bench(std::uint64_t seed, const std::string& out_path) {
    json rows = json::array();
    auto timed = [&](const std::string& name, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        rows.push_back(json{{"task", name}, {"ms", ms}});
    };

    timed("discretize n=100000", [&] {
        pw::Rng rng = pw::Rng::stream(seed, "bench-disc");
        std::vector<std::int64_t> d(100000);
        for (std::size_t i = 0; i < d.size(); ++i)
            d[i] = static_cast<std::int64_t>(i) + 1 + rng.range(0, 5);
        auto seq = pw::discretize::discretized_sequence(
            pw::core::Deadlines(std::move(d)));
        (void)seq;
    });
    timed("solve auto eleven-task instance", [&] {
        auto red = pw::posmatch::two_visits_to_pm(
            pw::core::Deadlines({1, 4, 5, 6, 6, 7, 15, 16, 18, 18, 18}));
        pw::posmatch::SolveConfig cfg;
        cfg.seed = seed;
        (void)pw::posmatch::solve_auto(*red.pm, cfg);
    });
    timed("oracle decide {2,2,3} k=13", [&] {
        (void)pw::oracle::k_visits_decide(
            {pw::core::Deadlines({2, 2, 3}), 13});
    });
    timed("randomized solve p<=3 n=7", [&] {
        auto red = pw::posmatch::two_visits_to_pm(
            pw::core::Deadlines({3, 3, 7, 7, 7, 12, 12}));
        (void)pw::randmatch::solve_pm_randomized(*red.pm, seed);
    });
    timed("density sweep 500 instances", [&] {
        (void)pw::densitylab::density_sweep(
            500, 40, seed, pw::densitylab::Threshold::Sqrt2Half);
    });
    emit_json(out_path, json{{"command", "bench"}, {"results", rows}});
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "pinwheel: algorithms, reductions and density experiments for finite "
        "pinwheel scheduling variants.\n\n"
        "Instance files are JSON:\n"
        "  {\"variant\":\"kvisits\", \"k\":2, \"deadlines\":[2,2]}\n"
        "  {\"variant\":\"one_or_two\", \"single\":[1], \"double\":[2,2]}\n"
        "  {\"variant\":\"pm\", \"deadlines\":[2,2], \"targets\":[3,4]}\n"
        "Schedules: {\"entries\":[{\"pos\":1,\"task\":1,\"role\":"
        "\"primary\"}, ...]} with roles single|primary|secondary|plain.\n"
        "Reduction inputs: {\"problem\":\"nmts\", \"a\":[..], \"b\":[..], "
        "\"t\":[..]}\n\n"
        "Exit codes: 0 yes/success, 1 no/infeasible, 2 undecided/refused, "
        "3 usage error, 4 internal invariant breach."};
    app.require_subcommand(1);

    pw::oracle::OracleCaps caps;
    caps.bfs_state_cap = env_size("PINWHEEL_STATE_CAP", caps.bfs_state_cap);
    caps.dfs_node_cap = env_size("PINWHEEL_DFS_CAP", caps.dfs_node_cap);

    // solve
    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Decide a two-visit style instance");
    solve->add_option("--in", solve_args.in_path, "instance file")->required();
    solve->add_option("--variant", solve_args.variant, "2v | 1or2 | pm");
    solve->add_option("--algo", solve_args.algo,
                      "auto | simple | brute | randomized");
    solve->add_option("--seed", solve_args.seed, "randomness seed")
        ->each([&](const std::string&) { solve_args.seed_set = true; });
    solve->add_option("--trials", solve_args.trials, "randomized trials");
    solve->add_option("--brute-cap", solve_args.brute_cap,
                      "max instance size for brute force");
    solve->add_option("--p-cap", solve_args.p_cap,
                      "max distinct values per cluster for the randomized route");
    solve->add_option("--emit-schedule", solve_args.emit_schedule,
                      "write the found schedule to this file");
    solve->add_option("--out", solve_args.out_path, "report path (default stdout)");

    // verify
    std::string verify_in, verify_sched, verify_out;
    auto* verify = app.add_subcommand("verify", "Verify a schedule file");
    verify->add_option("--in", verify_in, "instance file")->required();
    verify->add_option("--schedule", verify_sched, "schedule file")->required();
    verify->add_option("--out", verify_out, "report path");

    // discretize
    std::string disc_in, disc_out;
    std::int64_t disc_horizon = 0;
    auto* disc = app.add_subcommand(
        "discretize", "Emit the discretized sequence, clusters and targets");
    disc->add_option("--in", disc_in, "instance file")->required();
    disc->add_option("--horizon", disc_horizon,
                     "complement horizon (default k*n)");
    disc->add_option("--out", disc_out, "report path");

    // reduce
    std::string reduce_chain = "nmts:pm", reduce_in, reduce_out, reduce_report;
    bool reduce_verify = false;
    auto* reduce =
        app.add_subcommand("reduce", "Run the hardness reduction chain");
    reduce->add_option("--chain", reduce_chain, "only nmts:pm is supported");
    reduce->add_option("--in", reduce_in, "NMTS instance file")->required();
    reduce->add_option("--out", reduce_out, "write the final PM instance here");
    reduce->add_flag("--verify-with-oracle", reduce_verify,
                     "run the per-step brute-force oracles");
    reduce->add_option("--report", reduce_report, "report path");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact decision procedures");
    oracle_cmd->require_subcommand(1);
    std::string od_in, od_constraint, od_out;
    auto* od = oracle_cmd->add_subcommand("decide", "Decide a k-visits instance");
    od->add_option("--in", od_in, "instance file")->required();
    od->add_option("--constraint", od_constraint,
                   "distinct-discretized | sorted-first-visits");
    od->add_option("--out", od_out, "report path");
    od->add_option("--state-cap", caps.bfs_state_cap, "BFS state cap");
    od->add_option("--dfs-cap", caps.dfs_node_cap, "DFS node budget");
    std::string oc_out;
    auto* oc = oracle_cmd->add_subcommand(
        "counterexample-3v", "Check the three facts about the 3-visit instance");
    oc->add_option("--out", oc_out, "report path");
    std::uint64_t os_count = 500, os_seed = 0;
    std::int64_t os_max_n = 5;
    std::string os_out;
    bool os_seed_set = false;
    auto* os = oracle_cmd->add_subcommand(
        "sweep", "Cross-check the state search against position matching");
    os->add_option("--count", os_count, "instances");
    os->add_option("--max-n", os_max_n, "max tasks (<= 6)");
    os->add_option("--seed", os_seed, "seed")
        ->each([&](const std::string&) { os_seed_set = true; });
    os->add_option("--out", os_out, "report path");

    // density
    std::string dc_in, dc_out;
    bool density_sweep_flag = false;
    std::uint64_t ds_count = 10000, ds_seed = 0;
    std::int64_t ds_max_n = 40;
    std::string ds_threshold = "sqrt2half";
    int ds_workers = 1;
    bool ds_seed_set = false;
    auto* density = app.add_subcommand(
        "density", "Density, the positional claim, and threshold sweeps");
    density->add_option("--check", dc_in, "instance file to analyze");
    density->add_flag("--sweep", density_sweep_flag, "run a sampled sweep");
    density->add_option("--count", ds_count, "sweep instances");
    density->add_option("--max-n", ds_max_n, "sweep max tasks");
    density->add_option("--seed", ds_seed, "sweep seed")
        ->each([&](const std::string&) { ds_seed_set = true; });
    density->add_option("--threshold", ds_threshold, "sqrt2half | one");
    density->add_option("--workers", ds_workers, "sweep worker threads");
    density->add_option("--out", dc_out, "report/CSV path");

    // family
    std::string fam_kind, fam_out;
    std::int64_t fam_j = 1, fam_dj = 1, fam_x = 2, fam_k = 1, fam_n = 1;
    auto* family = app.add_subcommand("family", "Named instance families");
    family->add_option("--kind", fam_kind, "worstcase | pinwheelno | divergent")
        ->required();
    family->add_option("--j", fam_j, "worstcase: small-level count");
    family->add_option("--dj", fam_dj, "worstcase: small-level deadline");
    family->add_option("--x", fam_x, "pinwheelno: third deadline");
    family->add_option("--k", fam_k, "divergent: visits per task");
    family->add_option("--n", fam_n, "divergent: task count");
    family->add_option("--out", fam_out, "report path");

    // generate
    std::string gen_kind, gen_out, gen_threshold = "sqrt2half";
    std::uint64_t gen_seed = 0;
    bool gen_seed_set = false;
    std::int64_t gen_n = 6, gen_k = 2, gen_max_n = 40, gen_max_value = 9;
    std::int64_t gen_j = 1, gen_dj = 1, gen_x = 2;
    auto* generate = app.add_subcommand("generate", "Seeded instance generator");
    generate
        ->add_option("--kind", gen_kind,
                     "random | low-density | worstcase | pinwheelno | "
                     "divergent | hardchain")
        ->required();
    generate->add_option("--seed", gen_seed, "seed")
        ->each([&](const std::string&) { gen_seed_set = true; });
    generate->add_option("--n", gen_n, "task count");
    generate->add_option("--k", gen_k, "visits per task");
    generate->add_option("--max-n", gen_max_n, "sampler max tasks");
    generate->add_option("--max-value", gen_max_value, "hardchain value bound");
    generate->add_option("--threshold", gen_threshold, "low-density threshold");
    generate->add_option("--j", gen_j, "worstcase parameter");
    generate->add_option("--dj", gen_dj, "worstcase parameter");
    generate->add_option("--x", gen_x, "pinwheelno parameter");
    generate->add_option("--out", gen_out, "instance path");

    // bench
    std::uint64_t bench_seed = 1;
    std::string bench_out;
    auto* bench = app.add_subcommand("bench", "Time representative operations");
    bench->add_option("--seed", bench_seed, "seed");
    bench->add_option("--out", bench_out, "report path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) return run_solve(solve_args);
        if (*verify) return run_verify(verify_in, verify_sched, verify_out);
        if (*disc) return run_discretize(disc_in, disc_horizon, disc_out);
        if (*reduce)
            return run_reduce(reduce_chain, reduce_in, reduce_out,
                              reduce_verify, reduce_report);
        if (*od) return run_oracle_decide(od_in, od_constraint, od_out, caps);
        if (*oc) return run_oracle_counterexample(oc_out);
        if (*os) {
            if (!os_seed_set)
                throw std::invalid_argument("oracle sweep needs --seed");
            return run_oracle_sweep(os_count, os_max_n, os_seed, os_out);
        }
        if (*density) {
            if (density_sweep_flag) {
                if (!ds_seed_set)
                    throw std::invalid_argument("density --sweep needs --seed");
                return run_density_sweep(ds_count, ds_max_n, ds_seed,
                                         ds_threshold, ds_workers, dc_out);
            }
            if (dc_in.empty())
                throw std::invalid_argument(
                    "density needs --check FILE or --sweep");
            return run_density_check(dc_in, dc_out);
        }
        if (*family)
            return [&] {
                emit_json(fam_out,
                          family_json(fam_kind, fam_j, fam_dj, fam_x, fam_k,
                                      fam_n));
                return kExitYes;
            }();
        if (*generate) {
            bool needs_seed = gen_kind == "random" ||
                              gen_kind == "low-density" ||
                              gen_kind == "hardchain";
            if (needs_seed && !gen_seed_set)
                throw std::invalid_argument("generate " + gen_kind +
                                            " needs --seed");
            return run_generate(gen_kind, gen_seed, gen_n, gen_k, gen_max_n,
                                gen_max_value, gen_threshold, gen_j, gen_dj,
                                gen_x, gen_out);
        }
        if (*bench) return run_bench(bench_seed, bench_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
