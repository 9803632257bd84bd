#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pinwheel/posmatch.hpp"
#include "pinwheel/rational.hpp"

namespace pinwheel::randmatch {

struct Edge {
    std::size_t left = 0;   // 0-based
    std::size_t right = 0;  // 0-based
    BigInt weight;
    std::optional<std::size_t> tag;  // distinct-deadline index, when derived
};

struct WeightedBipartiteMultigraph {
    std::size_t left_count = 0;
    std::size_t right_count = 0;
    std::vector<Edge> edges;  // parallel edges allowed
};

struct EWPMInstance {
    WeightedBipartiteMultigraph graph;
    BigInt target;  // W: does a perfect matching of exactly this weight exist
};

struct PmEwpmMapping {
    std::vector<std::int64_t> distinct_values;  // ascending deadline values
    std::vector<std::size_t> multiplicities;    // n_i per value
};

struct PmToEwpm {
    EWPMInstance ewpm;
    PmEwpmMapping mapping;
};

/// Left vertices are the entries of A, right vertices the entries of T.
/// For the i-th distinct deadline value (weight (n+1)^(i-1)) an edge
/// (j, k) exists whenever d_i >= a_j and d_i + a_j >= t_k. The target is
/// W = sum n_i (n+1)^(i-1); base-(n+1) uniqueness makes the weight spell
/// out the multiset of deadline values used.
PmToEwpm pm_to_ewpm(const posmatch::PMInstance& inst);

/// Replaces each edge by a path of length 3 (weight w, 0, 0; the middle
/// edge weight must be 0). Perfect-matching weight multisets are preserved
/// and bipartiteness survives since the replacement paths have odd length.
EWPMInstance multigraph_to_simple(const EWPMInstance& inst);

struct RandomizedVerdict {
    enum class Answer { Yes, ProbablyNo } answer = Answer::ProbablyNo;
    int trials = 0;
    std::uint64_t field_modulus = 0;
    std::uint64_t seed = 0;

    bool yes() const { return answer == Answer::Yes; }
};

/// One-sided-error decision over F_p, p = 2^61 - 1. Each trial assembles
/// the matrix whose (j,k) entry sums r_e y^{w(e)} over the parallel edges,
/// evaluates its determinant at deg+1 points and interpolates the
/// coefficient of y^W. Nonzero in any trial is a certain yes; all-zero is
/// probably-no with per-trial error at most n / (p-1).
RandomizedVerdict ewpm_decide_randomized(const EWPMInstance& inst,
                                         std::uint64_t seed, int trials = 5);

/// Weight multiset of all perfect matchings, by exhaustive enumeration
/// over parallel-edge choices. Refuses (throws std::length_error) above
/// the vertex cap.
std::vector<BigInt> ewpm_brute_force(const WeightedBipartiteMultigraph& graph,
                                     std::size_t cap = 9);

/// Per cluster: reduce to EWPM, decide, and on yes extract a witness by
/// deleting edges whose removal keeps the answer yes until a single
/// matching remains. The assembled matching is validated exactly, so a
/// yes is always backed by a certificate; a no is only "probably".
posmatch::SolveResult solve_pm_randomized(const posmatch::PMInstance& inst,
                                          std::uint64_t seed, int trials = 5,
                                          std::size_t p_cap = 3);

}  // namespace pinwheel::randmatch
