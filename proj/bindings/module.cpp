#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pinwheel/densitylab.hpp"
#include "pinwheel/hardness.hpp"
#include "pinwheel/json_io.hpp"
#include "pinwheel/oracle.hpp"
#include "pinwheel/posmatch.hpp"
#include "pinwheel/randmatch.hpp"

namespace py = pybind11;
namespace pw = pinwheel;
using pw::io::json;

namespace {

using IntList = std::vector<std::int64_t>;

py::object to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<std::int64_t>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<std::uint64_t>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

pw::core::Schedule schedule_from_entries(
    const std::vector<std::tuple<std::int64_t, std::int64_t, std::string>>&
        entries) {
    std::vector<pw::core::ScheduleEntry> es;
    for (const auto& [pos, task, role_name] : entries) {
        auto role = pw::core::role_from_name(role_name);
        if (!role)
            throw std::invalid_argument("unknown role '" + role_name + "'");
        es.push_back({pos, task, *role});
    }
    return pw::core::Schedule(std::move(es));
}

json verdict_json(const pw::core::Verdict& v) {
    return pw::io::verdict_to_json(v);
}

json solve_result_json(const pw::posmatch::SolveResult& r) {
    json out{{"status", pw::posmatch::solve_status_name(r.status)}};
    if (!r.note.empty()) out["note"] = r.note;
    if (r.matching) out["matching"] = pw::io::matching_to_json(*r.matching);
    return out;
}

pw::posmatch::SolveConfig make_config(const std::string& algo,
                                      std::uint64_t seed, int trials,
                                      std::size_t brute_cap,
                                      std::size_t p_cap) {
    auto strategy = pw::posmatch::strategy_from_name(algo);
    if (!strategy) throw std::invalid_argument("unknown algo " + algo);
    pw::posmatch::SolveConfig cfg;
    cfg.strategy = *strategy;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.brute_cap = brute_cap;
    cfg.p_cap = p_cap;
    return cfg;
}

json decide_result_json(const pw::oracle::DecideResult& r) {
    json out{{"states_explored", r.states_explored}};
    switch (r.status) {
        case pw::oracle::DecideStatus::Yes:
            out["status"] = "yes";
            out["witness"] = pw::io::schedule_to_json(*r.witness);
            break;
        case pw::oracle::DecideStatus::No: out["status"] = "no"; break;
        case pw::oracle::DecideStatus::Refused:
            out["status"] = "refused";
            out["note"] = r.note;
            break;
    }
    return out;
}

pw::randmatch::EWPMInstance ewpm_from_py(
    std::size_t left, std::size_t right,
    const std::vector<std::tuple<std::size_t, std::size_t, std::string>>& edges,
    const std::string& target) {
    pw::randmatch::EWPMInstance inst;
    inst.graph.left_count = left;
    inst.graph.right_count = right;
    for (const auto& [l, r, w] : edges)
        inst.graph.edges.push_back({l, r, pw::BigInt(w), std::nullopt});
    inst.target = pw::BigInt(target);
    return inst;
}

}  // namespace

PYBIND11_MODULE(_pinwheel, m) {
    m.doc() =
        "Finite pinwheel scheduling variants: verifiers, reductions, exact "
        "and randomized solvers, and density experiments.";

    // core -----------------------------------------------------------------
    m.def("normalize",
          [](const IntList& d, std::int64_t k) {
              return pw::core::normalize(pw::core::Deadlines(d), k).values();
          },
          py::arg("deadlines"), py::arg("k"),
          "Drop deadlines that can never expire within the horizon.");
    m.def("density",
          [](const IntList& d) {
              return pw::to_string(pw::core::density(pw::core::Deadlines(d)));
          },
          py::arg("deadlines"), "Exact density as a 'p/q' string.");
    m.def("density_float", [](const IntList& d) {
        return static_cast<double>(pw::core::density(pw::core::Deadlines(d)));
    });
    m.def("density_leq_sqrt2_minus_half", [](const IntList& d) {
        return pw::leq_sqrt2_minus_half(
            pw::core::density(pw::core::Deadlines(d)));
    });
    m.def("verify_k_visits",
          [](const IntList& d, std::int64_t k, const IntList& tasks) {
              return to_py(verdict_json(pw::core::verify_k_visits(
                  {pw::core::Deadlines(d), k},
                  pw::core::Schedule::from_tasks(tasks))));
          },
          py::arg("deadlines"), py::arg("k"), py::arg("tasks"));
    m.def("verify_two_visits",
          [](const IntList& d,
             const std::vector<std::tuple<std::int64_t, std::int64_t,
                                          std::string>>& entries) {
              return to_py(verdict_json(pw::core::verify_two_visits(
                  pw::core::Deadlines(d), schedule_from_entries(entries))));
          },
          py::arg("deadlines"), py::arg("entries"),
          "entries: list of (pos, task, role) tuples");
    m.def("verify_one_or_two",
          [](const IntList& single, const IntList& dbl,
             const std::vector<std::tuple<std::int64_t, std::int64_t,
                                          std::string>>& entries) {
              return to_py(verdict_json(pw::core::verify_one_or_two(
                  {pw::core::Deadlines(single), pw::core::Deadlines(dbl)},
                  schedule_from_entries(entries))));
          },
          py::arg("single"), py::arg("double"), py::arg("entries"));

    // discretize -----------------------------------------------------------
    m.def("discretized_sequence", [](const IntList& d) {
        return pw::discretize::discretized_sequence(pw::core::Deadlines(d))
            .positions;
    });
    m.def("first_position_deficit", [](const IntList& d) -> py::object {
        auto res =
            pw::discretize::first_position_deficit(pw::core::Deadlines(d));
        if (!res) return py::none();
        return py::int_(*res);
    });
    m.def("clusters", [](const IntList& d) {
        auto seq = pw::discretize::discretized_sequence(pw::core::Deadlines(d));
        json spans = json::array();
        for (const auto& s : pw::discretize::clusters(seq))
            spans.push_back(json{{"start_index", s.start_index},
                                 {"end_index", s.end_index},
                                 {"start_value", s.start_value},
                                 {"end_value", s.end_value}});
        return to_py(spans);
    });
    m.def("complement_targets", [](const IntList& d, std::int64_t horizon) {
        auto seq = pw::discretize::discretized_sequence(pw::core::Deadlines(d));
        return pw::discretize::complement_targets(seq, horizon);
    });

    // posmatch ---------------------------------------------------------------
    m.def("two_visits_to_pm", [](const IntList& d) {
        auto red = pw::posmatch::two_visits_to_pm(pw::core::Deadlines(d));
        json out{{"trivially_infeasible", red.trivially_infeasible}};
        if (red.pm) {
            out["a"] = red.pm->seq.positions;
            out["targets"] = red.pm->targets;
        }
        return to_py(out);
    });
    m.def("solve_pm",
          [](const IntList& d, const IntList& targets, const std::string& algo,
             std::uint64_t seed, int trials, std::size_t brute_cap,
             std::size_t p_cap) {
              auto inst =
                  pw::posmatch::PMInstance::make(pw::core::Deadlines(d), targets);
              auto cfg = make_config(algo, seed, trials, brute_cap, p_cap);
              return to_py(solve_result_json(pw::posmatch::solve_auto(inst, cfg)));
          },
          py::arg("deadlines"), py::arg("targets"), py::arg("algo") = "auto",
          py::arg("seed") = 0, py::arg("trials") = 5, py::arg("brute_cap") = 10,
          py::arg("p_cap") = 3);
    m.def("solve_two_visits",
          [](const IntList& d, const std::string& algo, std::uint64_t seed,
             int trials, std::size_t brute_cap, std::size_t p_cap) {
              pw::core::Deadlines original(d);
              auto cfg = make_config(algo, seed, trials, brute_cap, p_cap);
              auto trimmed = pw::core::normalize(original, 2);
              auto red = pw::posmatch::two_visits_to_pm(trimmed);
              json out;
              if (red.trivially_infeasible) {
                  out["status"] = "infeasible";
                  return to_py(out);
              }
              auto r = pw::posmatch::solve_auto(*red.pm, cfg);
              out = solve_result_json(r);
              if (r.status == pw::posmatch::SolveStatus::Feasible) {
                  auto sched = pw::posmatch::pm_to_schedule(
                      {&*r.matching, 1}, std::nullopt,
                      2 * static_cast<std::int64_t>(trimmed.size()));
                  out["schedule"] = pw::io::schedule_to_json(sched);
                  out["normalized_deadlines"] = trimmed.values();
              }
              return to_py(out);
          },
          py::arg("deadlines"), py::arg("algo") = "auto", py::arg("seed") = 0,
          py::arg("trials") = 5, py::arg("brute_cap") = 10,
          py::arg("p_cap") = 3,
          "Solve the normalized two-visit instance; the schedule covers the "
          "normalized deadlines.");

    // hardness ---------------------------------------------------------------
    m.def("nmts_to_srnmts", [](const IntList& a, const IntList& b,
                               const IntList& t) {
        auto red = pw::hardness::nmts_to_srnmts({a, b, t});
        json out{{"trivial_no", red.trivial_no}};
        if (red.trivial_no) {
            out["reason"] = red.reason;
        } else {
            out["a"] = red.value->a_set;
            out["t"] = red.value->t_set;
        }
        return to_py(out);
    });
    m.def("srnmts_to_in3dm", [](const IntList& a, const IntList& t) {
        auto red = pw::hardness::srnmts_to_in3dm({a, t});
        json out{{"trivial_no", red.trivial_no}};
        if (red.trivial_no) {
            out["reason"] = red.reason;
        } else {
            out["a"] = red.value->a_set;
            out["t"] = red.value->t_set;
        }
        return to_py(out);
    });
    m.def("in3dm_normalize", [](const IntList& a, const IntList& t) {
        auto shifted = pw::hardness::in3dm_normalize({a, t});
        return to_py(json{{"a", shifted.a_set}, {"t", shifted.t_set}});
    });
    m.def("in3dm_to_pm", [](const IntList& a, const IntList& t) {
        auto pm = pw::hardness::in3dm_to_pm({a, t});
        return to_py(json{{"deadlines", pm.deadlines.values()},
                          {"targets", pm.targets}});
    });
    auto bf_json = [](pw::hardness::BfResult r) {
        switch (r.status) {
            case pw::hardness::BfResult::Status::Yes: return std::string("yes");
            case pw::hardness::BfResult::Status::No: return std::string("no");
            default: return std::string("refused");
        }
    };
    m.def("nmts_bf", [bf_json](const IntList& a, const IntList& b,
                               const IntList& t, std::size_t cap) {
        return bf_json(pw::hardness::solve_nmts_bf({a, b, t}, cap));
    }, py::arg("a"), py::arg("b"), py::arg("t"), py::arg("cap") = 7);
    m.def("srnmts_bf", [bf_json](const IntList& a, const IntList& t,
                                 std::size_t cap) {
        return bf_json(pw::hardness::solve_srnmts_bf({a, t}, cap));
    }, py::arg("a"), py::arg("t"), py::arg("cap") = 7);
    m.def("in3dm_bf", [bf_json](const IntList& a, const IntList& t,
                                std::size_t cap) {
        return bf_json(pw::hardness::solve_in3dm_bf({a, t}, cap));
    }, py::arg("a"), py::arg("t"), py::arg("cap") = 7);

    // randmatch --------------------------------------------------------------
    m.def("pm_to_ewpm", [](const IntList& d, const IntList& targets) {
        auto inst = pw::posmatch::PMInstance::make(pw::core::Deadlines(d),
                                                   targets);
        auto red = pw::randmatch::pm_to_ewpm(inst);
        json edges = json::array();
        for (const auto& e : red.ewpm.graph.edges) {
            json edge{{"left", e.left},
                      {"right", e.right},
                      {"weight", e.weight.str()}};
            if (e.tag) edge["tag"] = *e.tag;
            edges.push_back(edge);
        }
        return to_py(json{{"left_count", red.ewpm.graph.left_count},
                          {"right_count", red.ewpm.graph.right_count},
                          {"edges", edges},
                          {"target", red.ewpm.target.str()}});
    });
    m.def("ewpm_decide",
          [](std::size_t left, std::size_t right,
             const std::vector<std::tuple<std::size_t, std::size_t,
                                          std::string>>& edges,
             const std::string& target, std::uint64_t seed, int trials) {
              auto inst = ewpm_from_py(left, right, edges, target);
              auto v = pw::randmatch::ewpm_decide_randomized(inst, seed, trials);
              return to_py(json{{"answer", v.yes() ? "yes" : "probably-no"},
                                {"trials", v.trials},
                                {"field_modulus", v.field_modulus},
                                {"seed", v.seed}});
          },
          py::arg("left_count"), py::arg("right_count"), py::arg("edges"),
          py::arg("target"), py::arg("seed"), py::arg("trials") = 5,
          "edges: list of (left, right, weight-string) tuples");
    m.def("ewpm_weights",
          [](std::size_t left, std::size_t right,
             const std::vector<std::tuple<std::size_t, std::size_t,
                                          std::string>>& edges,
             std::size_t cap) {
              auto inst = ewpm_from_py(left, right, edges, "0");
              std::vector<std::string> out;
              for (const auto& w :
                   pw::randmatch::ewpm_brute_force(inst.graph, cap))
                  out.push_back(w.str());
              return out;
          },
          py::arg("left_count"), py::arg("right_count"), py::arg("edges"),
          py::arg("cap") = 9,
          "Weight multiset of all perfect matchings.");
    m.def("solve_pm_randomized",
          [](const IntList& d, const IntList& targets, std::uint64_t seed,
             int trials, std::size_t p_cap) {
              auto inst = pw::posmatch::PMInstance::make(pw::core::Deadlines(d),
                                                         targets);
              return to_py(solve_result_json(
                  pw::randmatch::solve_pm_randomized(inst, seed, trials, p_cap)));
          },
          py::arg("deadlines"), py::arg("targets"), py::arg("seed"),
          py::arg("trials") = 5, py::arg("p_cap") = 3);

    // densitylab -------------------------------------------------------------
    m.def("one_visit_schedule", [](const IntList& d) {
        auto res = pw::densitylab::one_visit_schedule(pw::core::Deadlines(d));
        json out;
        if (res.schedule) out["schedule"] = pw::io::schedule_to_json(*res.schedule);
        if (res.witness_index) out["witness_index"] = *res.witness_index;
        return to_py(out);
    });
    m.def("claim_property", [](const IntList& d) {
        auto rep = pw::densitylab::claim_property(pw::core::Deadlines(d));
        json recs = json::array();
        for (const auto& r : rep.records)
            recs.push_back(json{{"index", r.index},
                                {"d", r.d},
                                {"a", r.a},
                                {"t", r.t},
                                {"bound", r.bound},
                                {"satisfied", r.satisfied}});
        json out{{"records", recs}, {"all_satisfied", rep.all_satisfied()}};
        if (rep.first_violation) out["first_violation"] = *rep.first_violation;
        if (rep.deficit_index) out["position_deficit"] = *rep.deficit_index;
        return to_py(out);
    });
    m.def("density_schedule_2v", [](const IntList& d) {
        auto res = pw::densitylab::density_schedule_2v(pw::core::Deadlines(d));
        json out{{"all_satisfied", res.report.all_satisfied()}};
        if (res.schedule) out["schedule"] = pw::io::schedule_to_json(*res.schedule);
        if (res.report.first_violation)
            out["first_violation"] = *res.report.first_violation;
        return to_py(out);
    });
    m.def("worst_case_family", [](std::int64_t j, std::int64_t dj) {
        return pw::densitylab::worst_case_family(j, dj).values();
    });
    m.def("gap_function", &pw::densitylab::gap_function, py::arg("x"),
          py::arg("y"));
    m.def("gap_infimum_scan", [](double x_max, double step) {
        auto r = pw::densitylab::gap_infimum_scan(x_max, step);
        return to_py(json{{"min_value", r.min_value},
                          {"argmin_x", r.argmin_x},
                          {"argmin_y", r.argmin_y},
                          {"gap", r.gap},
                          {"all_above_threshold", r.all_above_threshold},
                          {"line_value_at_xmax", r.line_value_at_xmax},
                          {"points", r.points}});
    }, py::arg("x_max"), py::arg("grid_step"));
    m.def("pinwheel_no_family", [](std::int64_t x) {
        auto fam = pw::densitylab::pinwheel_no_family(x);
        return to_py(json{{"deadlines", fam.deadlines.values()}, {"k", fam.k}});
    });
    m.def("divergent_family", [](std::int64_t k, std::int64_t n) {
        auto fam = pw::densitylab::divergent_family(k, n);
        return to_py(json{
            {"deadlines", fam.instance.deadlines.values()},
            {"k", fam.instance.k},
            {"schedule", pw::io::schedule_to_json(fam.schedule)},
            {"density",
             pw::to_string(pw::core::density(fam.instance.deadlines))}});
    });
    m.def("cyclic_extract",
          [](const IntList& d, std::int64_t k, const IntList& tasks)
              -> py::object {
              auto win = pw::densitylab::cyclic_extract(
                  {pw::core::Deadlines(d), k},
                  pw::core::Schedule::from_tasks(tasks));
              if (!win) return py::none();
              return to_py(json{
                  {"p", win->p}, {"q", win->q}, {"window", win->window}});
          },
          py::arg("deadlines"), py::arg("k"), py::arg("tasks"));
    m.def("verify_pinwheel_window", [](const IntList& d, const IntList& window) {
        return to_py(verdict_json(pw::densitylab::verify_pinwheel_window(
            pw::core::Deadlines(d), window)));
    });
    m.def("density_sweep",
          [](std::uint64_t count, std::int64_t max_n, std::uint64_t seed,
             const std::string& threshold, int workers) {
              auto th = threshold == "one" ? pw::densitylab::Threshold::One
                                           : pw::densitylab::Threshold::Sqrt2Half;
              auto rep =
                  pw::densitylab::density_sweep(count, max_n, seed, th, workers);
              return to_py(json{{"count", rep.records.size()},
                                {"draws", rep.draws},
                                {"all_ok", rep.all_ok},
                                {"seconds", rep.seconds}});
          },
          py::arg("count"), py::arg("max_n"), py::arg("seed"),
          py::arg("threshold") = "sqrt2half", py::arg("workers") = 1);

    // oracle -----------------------------------------------------------------
    m.def("k_visits_decide",
          [](const IntList& d, std::int64_t k, const std::string& constraint) {
              pw::oracle::SearchConstraints c;
              if (constraint == "distinct-discretized")
                  c.distinct_tasks_on_discretized = true;
              else if (constraint == "sorted-first-visits")
                  c.sorted_first_visits = true;
              else if (!constraint.empty())
                  throw std::invalid_argument("unknown constraint " + constraint);
              return to_py(decide_result_json(
                  pw::oracle::k_visits_decide({pw::core::Deadlines(d), k}, c)));
          },
          py::arg("deadlines"), py::arg("k"), py::arg("constraint") = "");
    m.def("counterexample_3v", [] {
        auto rep = pw::oracle::counterexample_3visits();
        return to_py(json{
            {"deadlines", rep.instance.deadlines.values()},
            {"k", rep.instance.k},
            {"schedule_verifies", rep.schedule_verifies},
            {"distinct_constrained_infeasible",
             rep.distinct_constrained_infeasible},
            {"sorted_constrained_infeasible",
             rep.sorted_constrained_infeasible}});
    });
    m.def("pm_equiv_sweep",
          [](std::uint64_t count, std::int64_t max_n, std::uint64_t seed) {
              auto rep = pw::oracle::pm_equiv_sweep(count, max_n, seed);
              return to_py(json{{"total", rep.total},
                                {"yes", rep.yes_count},
                                {"no", rep.no_count},
                                {"mismatches", rep.mismatches}});
          },
          py::arg("count"), py::arg("max_n"), py::arg("seed"));
}
