#include "pinwheel/randmatch.hpp"

#include <algorithm>
#include <stdexcept>

#include "pinwheel/rng.hpp"

namespace pinwheel::randmatch {

namespace {

constexpr std::uint64_t kModulus = (1ULL << 61) - 1;  // Mersenne prime

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % kModulus);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    if (s >= kModulus) s -= kModulus;
    return s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) {
    return a >= b ? a - b : a + kModulus - b;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp) {
        if (exp & 1) r = mulmod(r, base);
        base = mulmod(base, base);
        exp >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kModulus - 2); }

// Determinant mod p by Gaussian elimination, sign included.
std::uint64_t det_mod(std::vector<std::vector<std::uint64_t>> m) {
    const std::size_t n = m.size();
    std::uint64_t det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = submod(0, det);
        }
        det = mulmod(det, m[col][col]);
        std::uint64_t inv = invmod(m[col][col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            std::uint64_t factor = mulmod(m[row][col], inv);
            for (std::size_t c2 = col; c2 < n; ++c2)
                m[row][c2] = submod(m[row][c2], mulmod(factor, m[col][c2]));
        }
    }
    return det;
}

constexpr std::size_t kMaxPolyDegree = 2'000'000;

}  // namespace

PmToEwpm pm_to_ewpm(const posmatch::PMInstance& inst) {
    const std::size_t n = inst.size();
    PmToEwpm out;
    const auto& d = inst.deadlines.values();
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0 || d[i] != d[i - 1]) {
            out.mapping.distinct_values.push_back(d[i]);
            out.mapping.multiplicities.push_back(0);
        }
        ++out.mapping.multiplicities.back();
    }

    out.ewpm.graph.left_count = n;
    out.ewpm.graph.right_count = n;
    BigInt base = static_cast<std::int64_t>(n) + 1;
    BigInt weight = 1;
    BigInt target = 0;
    for (std::size_t i = 0; i < out.mapping.distinct_values.size(); ++i) {
        std::int64_t di = out.mapping.distinct_values[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (di < inst.seq[j]) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (di + inst.seq[j] < inst.targets[k]) continue;
                out.ewpm.graph.edges.push_back(Edge{j, k, weight, i});
            }
        }
        target += weight * static_cast<std::int64_t>(
                               out.mapping.multiplicities[i]);
        weight *= base;
    }
    out.ewpm.target = std::move(target);
    return out;
}

EWPMInstance multigraph_to_simple(const EWPMInstance& inst) {
    const auto& g = inst.graph;
    EWPMInstance out;
    out.target = inst.target;
    out.graph.left_count = g.left_count + g.edges.size();
    out.graph.right_count = g.right_count + g.edges.size();
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const Edge& edge = g.edges[e];
        std::size_t x1 = g.right_count + e;  // right side
        std::size_t x2 = g.left_count + e;   // left side
        out.graph.edges.push_back(Edge{edge.left, x1, edge.weight, edge.tag});
        out.graph.edges.push_back(Edge{x2, x1, BigInt(0), std::nullopt});
        out.graph.edges.push_back(Edge{x2, edge.right, BigInt(0), std::nullopt});
    }
    return out;
}

RandomizedVerdict ewpm_decide_randomized(const EWPMInstance& inst,
                                         std::uint64_t seed, int trials) {
    RandomizedVerdict verdict;
    verdict.trials = trials;
    verdict.field_modulus = kModulus;
    verdict.seed = seed;

    const auto& g = inst.graph;
    if (g.left_count != g.right_count) return verdict;  // no perfect matching
    const std::size_t n = g.left_count;
    if (inst.target < 0) return verdict;
    if (n == 0) {
        if (inst.target == 0) verdict.answer = RandomizedVerdict::Answer::Yes;
        return verdict;
    }

    // Integer exponents; the per-cluster distinct-value cap keeps these
    // polynomial. Refuse absurd degrees rather than looping forever.
    std::vector<std::size_t> exponent(g.edges.size());
    std::vector<std::size_t> row_max_deg(n, 0);
    std::vector<char> row_has_edge(n, 0), col_has_edge(n, 0);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const Edge& edge = g.edges[e];
        if (edge.left >= n || edge.right >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (edge.weight < 0 || edge.weight > kMaxPolyDegree)
            throw std::invalid_argument("edge weight outside decision budget");
        exponent[e] = edge.weight.convert_to<std::size_t>();
        row_max_deg[edge.left] =
            std::max(row_max_deg[edge.left], exponent[e]);
        row_has_edge[edge.left] = 1;
        col_has_edge[edge.right] = 1;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!row_has_edge[i] || !col_has_edge[i]) return verdict;

    std::size_t degree_bound = 0;
    for (std::size_t i = 0; i < n; ++i) degree_bound += row_max_deg[i];
    if (degree_bound > kMaxPolyDegree)
        throw std::invalid_argument("total degree outside decision budget");
    if (inst.target > degree_bound) return verdict;
    const std::size_t w = inst.target.convert_to<std::size_t>();

    const std::size_t points = degree_bound + 1;
    std::vector<std::uint64_t> xs(points);
    for (std::size_t i = 0; i < points; ++i) xs[i] = i + 1;

    // Lagrange pieces of the y^W coefficient are independent of the trial
    // randomness: coefficient = sum_i f(x_i) * [y^W](master/(y-x_i)) / M'(x_i).
    std::vector<std::uint64_t> master(points + 1, 0);  // prod (y - x_i)
    master[0] = 1;
    for (std::size_t i = 0; i < points; ++i) {
        for (std::size_t c = i + 1; c >= 1; --c)
            master[c] = submod(master[c - 1], mulmod(xs[i], master[c]));
        master[0] = submod(0, mulmod(xs[i], master[0]));
    }

    std::vector<std::uint64_t> coef(points);
    std::vector<std::uint64_t> q(points);  // synthetic division scratch
    for (std::size_t i = 0; i < points; ++i) {
        std::uint64_t carry = master[points];
        for (std::size_t c = points; c-- > 0;) {
            q[c] = carry;
            carry = addmod(master[c], mulmod(xs[i], carry));
        }
        std::uint64_t denom = 0;
        for (std::size_t c = points; c-- > 0;)
            denom = addmod(mulmod(denom, xs[i]), q[c]);
        coef[i] = mulmod(q[w], invmod(denom));
    }

    // Distinct exponents, so per evaluation point each power is taken once.
    std::vector<std::size_t> uniq_exp = exponent;
    std::sort(uniq_exp.begin(), uniq_exp.end());
    uniq_exp.erase(std::unique(uniq_exp.begin(), uniq_exp.end()),
                   uniq_exp.end());
    std::vector<std::size_t> exp_id(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        exp_id[e] = static_cast<std::size_t>(
            std::lower_bound(uniq_exp.begin(), uniq_exp.end(), exponent[e]) -
            uniq_exp.begin());

    for (int trial = 0; trial < trials; ++trial) {
        Rng rng = Rng::stream(seed, "ewpm-trial",
                              static_cast<std::uint64_t>(trial));
        std::vector<std::uint64_t> r_edge(g.edges.size());
        for (std::size_t e = 0; e < g.edges.size(); ++e)
            r_edge[e] = 1 + rng.uniform(kModulus - 1);

        std::uint64_t acc = 0;
        std::vector<std::uint64_t> pw(uniq_exp.size());
        for (std::size_t pt = 0; pt < points; ++pt) {
            for (std::size_t u = 0; u < uniq_exp.size(); ++u)
                pw[u] = powmod(xs[pt], uniq_exp[u]);
            std::vector<std::vector<std::uint64_t>> m(
                n, std::vector<std::uint64_t>(n, 0));
            for (std::size_t e = 0; e < g.edges.size(); ++e) {
                std::uint64_t term = mulmod(r_edge[e], pw[exp_id[e]]);
                m[g.edges[e].left][g.edges[e].right] =
                    addmod(m[g.edges[e].left][g.edges[e].right], term);
            }
            std::uint64_t f = det_mod(std::move(m));
            acc = addmod(acc, mulmod(f, coef[pt]));
        }
        if (acc != 0) {
            verdict.answer = RandomizedVerdict::Answer::Yes;
            verdict.trials = trial + 1;
            return verdict;
        }
    }
    return verdict;
}

std::vector<BigInt> ewpm_brute_force(const WeightedBipartiteMultigraph& graph,
                                     std::size_t cap) {
    if (graph.left_count > cap)
        throw std::length_error("ewpm_brute_force: left_count above cap");
    std::vector<BigInt> weights;
    if (graph.left_count != graph.right_count) return weights;

    std::vector<std::vector<std::size_t>> by_left(graph.left_count);
    for (std::size_t e = 0; e < graph.edges.size(); ++e)
        by_left[graph.edges[e].left].push_back(e);

    std::vector<char> right_used(graph.right_count, 0);
    BigInt acc = 0;
    auto rec = [&](auto&& self, std::size_t left) -> void {
        if (left == graph.left_count) {
            weights.push_back(acc);
            return;
        }
        for (std::size_t e : by_left[left]) {
            const Edge& edge = graph.edges[e];
            if (right_used[edge.right]) continue;
            right_used[edge.right] = 1;
            acc += edge.weight;
            self(self, left + 1);
            acc -= edge.weight;
            right_used[edge.right] = 0;
        }
    };
    rec(rec, 0);
    std::sort(weights.begin(), weights.end());
    return weights;
}

namespace {

// Edge-deletion witness extraction. Keeps only edges whose removal kills
// every matching of the target weight; the survivors form the certificate.
struct Extraction {
    std::vector<std::size_t> alive;  // edge indices into the cluster graph
    bool ok = false;
};

EWPMInstance subgraph(const EWPMInstance& full,
                      const std::vector<std::size_t>& alive) {
    EWPMInstance out;
    out.target = full.target;
    out.graph.left_count = full.graph.left_count;
    out.graph.right_count = full.graph.right_count;
    for (std::size_t e : alive) out.graph.edges.push_back(full.graph.edges[e]);
    return out;
}

Extraction extract_matching(const EWPMInstance& inst, std::uint64_t seed) {
    const std::size_t n = inst.graph.left_count;
    Extraction ex;
    ex.alive.resize(inst.graph.edges.size());
    for (std::size_t e = 0; e < ex.alive.size(); ++e) ex.alive[e] = e;

    std::vector<std::size_t> left_deg(n, 0), right_deg(n, 0);
    for (const Edge& e : inst.graph.edges) {
        ++left_deg[e.left];
        ++right_deg[e.right];
    }

    std::uint64_t step = 0;
    for (std::size_t pos = 0; pos < ex.alive.size();) {
        if (ex.alive.size() == n) break;  // already a bare matching
        std::size_t e = ex.alive[pos];
        const Edge& edge = inst.graph.edges[e];
        if (left_deg[edge.left] <= 1 || right_deg[edge.right] <= 1) {
            ++pos;  // forced: the only way to cover one of its endpoints
            continue;
        }
        std::vector<std::size_t> without = ex.alive;
        without.erase(without.begin() + static_cast<std::ptrdiff_t>(pos));
        auto verdict = ewpm_decide_randomized(
            subgraph(inst, without),
            Rng::stream(seed, "extract", step++).next(), 1);
        if (verdict.yes()) {
            --left_deg[edge.left];
            --right_deg[edge.right];
            ex.alive = std::move(without);
        } else {
            ++pos;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (left_deg[i] != 1 || right_deg[i] != 1) return ex;
    ex.ok = true;
    return ex;
}

}  // namespace

posmatch::SolveResult solve_pm_randomized(const posmatch::PMInstance& inst,
                                          std::uint64_t seed, int trials,
                                          std::size_t p_cap) {
    auto parts = posmatch::split_by_clusters(inst);
    posmatch::PMMatching merged;
    for (std::size_t c = 0; c < parts.size(); ++c) {
        const auto& part = parts[c];
        if (part.instance.deadlines.distinct_count() > p_cap)
            return {posmatch::SolveStatus::Undecided, std::nullopt,
                    "cluster distinct-value count above p-cap"};
        auto reduced = pm_to_ewpm(part.instance);
        std::uint64_t cluster_seed = Rng::stream(seed, "cluster", c).next();
        auto verdict =
            ewpm_decide_randomized(reduced.ewpm, cluster_seed, trials);
        if (!verdict.yes())
            return {posmatch::SolveStatus::ProbablyInfeasible, std::nullopt,
                    "no weight-" + reduced.ewpm.target.str() +
                        " matching found in cluster " + std::to_string(c)};

        // A certain yes: extract the certificate.
        Extraction ex;
        for (int attempt = 0; attempt < 3 && !ex.ok; ++attempt)
            ex = extract_matching(
                reduced.ewpm,
                Rng::stream(cluster_seed, "attempt",
                            static_cast<std::uint64_t>(attempt))
                    .next());
        if (!ex.ok)
            throw std::logic_error(
                "witness extraction failed to isolate a matching");

        // Base-(n+1) uniqueness: the tag counts must reproduce the
        // multiplicities exactly.
        std::vector<std::size_t> tag_count(
            reduced.mapping.distinct_values.size(), 0);
        for (std::size_t e : ex.alive) {
            const Edge& edge = reduced.ewpm.graph.edges[e];
            if (!edge.tag) throw std::logic_error("extracted edge lost its tag");
            ++tag_count[*edge.tag];
        }
        if (tag_count != reduced.mapping.multiplicities)
            throw std::logic_error(
                "extracted matching breaks base-(n+1) uniqueness");

        // Tags map back to concrete deadline indices value group by value
        // group.
        std::vector<std::vector<std::size_t>> indices_by_tag(tag_count.size());
        {
            const auto& d = part.instance.deadlines.values();
            std::size_t tag = 0;
            for (std::size_t i = 0; i < d.size(); ++i) {
                if (i > 0 && d[i] != d[i - 1]) ++tag;
                indices_by_tag[tag].push_back(i);
            }
        }
        std::vector<std::size_t> cursor(tag_count.size(), 0);
        for (std::size_t e : ex.alive) {
            const Edge& edge = reduced.ewpm.graph.edges[e];
            std::size_t d_local = indices_by_tag[*edge.tag][cursor[*edge.tag]++];
            posmatch::Triplet tr;
            tr.d_index = part.d_offset + d_local;
            tr.a_index = part.d_offset + edge.left;
            tr.t_index = part.t_offset + edge.right;
            tr.d_value = inst.deadlines[tr.d_index];
            tr.a_value = inst.seq[tr.a_index];
            tr.t_value = inst.targets[tr.t_index];
            merged.triplets.push_back(tr);
        }
    }
    posmatch::validate_matching(inst, merged);
    return {posmatch::SolveStatus::Feasible, std::move(merged), ""};
}

}  // namespace pinwheel::randmatch
