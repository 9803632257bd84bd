#include "pinwheel/hardness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pinwheel::hardness {

namespace {

bool is_simple_sorted(std::vector<std::int64_t>& v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

std::int64_t max_of(const std::vector<std::int64_t>& v) {
    return *std::max_element(v.begin(), v.end());
}

}  // namespace

Reduced<SRNMTSInstance> nmts_to_srnmts(const NMTSInstance& inst) {
    if (inst.a_set.size() != inst.b_set.size() ||
        inst.a_set.size() != inst.t_set.size())
        throw std::invalid_argument("NMTS sets must have equal size");
    if (inst.a_set.empty())
        return Reduced<SRNMTSInstance>::of(SRNMTSInstance{{}, {}});

    std::vector<std::int64_t> a = inst.a_set;
    std::vector<std::int64_t> b = inst.b_set;
    std::vector<std::int64_t> t = inst.t_set;
    if (!is_simple_sorted(a) || !is_simple_sorted(b) || !is_simple_sorted(t))
        throw std::invalid_argument(
            "nmts_to_srnmts requires duplicate-free sets");

    std::int64_t max_t = t.back();
    if (max_t <= max_of(a))
        return Reduced<SRNMTSInstance>::no("max(T) <= max(A)");
    if (max_t <= b.back())
        return Reduced<SRNMTSInstance>::no("max(T) <= max(B)");

    // S = [max(B)] \ B; pad A with 3*i*max(T) - s_i and T with 3*i*max(T).
    // The middle set becomes [max(B)] = B united with S.
    std::vector<std::int64_t> s;
    {
        std::size_t j = 0;
        for (std::int64_t x = 1; x <= b.back(); ++x) {
            if (j < b.size() && b[j] == x) {
                ++j;
            } else {
                s.push_back(x);
            }
        }
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::int64_t base = 3 * static_cast<std::int64_t>(i + 1) * max_t;
        a.push_back(base - s[i]);
        t.push_back(base);
    }
    std::sort(a.begin(), a.end());
    std::sort(t.begin(), t.end());
    return Reduced<SRNMTSInstance>::of(SRNMTSInstance{std::move(a), std::move(t)});
}

Reduced<IN3DMInstance> srnmts_to_in3dm(const SRNMTSInstance& inst) {
    std::int64_t lhs = 0, rhs = 0;
    for (std::size_t i = 0; i < inst.a_set.size(); ++i)
        lhs += inst.a_set[i] + static_cast<std::int64_t>(i) + 1;
    for (std::int64_t t : inst.t_set) rhs += t;
    if (lhs != rhs)
        return Reduced<IN3DMInstance>::no("sum(a_i + i) != sum(t_i)");
    return Reduced<IN3DMInstance>::of(IN3DMInstance{inst.a_set, inst.t_set});
}

IN3DMInstance in3dm_normalize(const IN3DMInstance& inst) {
    std::int64_t n = static_cast<std::int64_t>(inst.a_set.size());
    IN3DMInstance out = inst;
    for (auto& x : out.a_set) x += n;
    for (auto& x : out.t_set) x += n;
    return out;
}

posmatch::PMInstance in3dm_to_pm(const IN3DMInstance& inst) {
    std::vector<std::int64_t> a = inst.a_set;
    std::vector<std::int64_t> t = inst.t_set;
    if (a.size() != t.size())
        throw std::invalid_argument("IN3DM sets must have equal size");
    if (a.empty()) return posmatch::PMInstance::make(core::Deadlines{}, {});
    if (!is_simple_sorted(a) || !is_simple_sorted(t))
        throw std::invalid_argument("in3dm_to_pm requires simple sets");
    const std::int64_t n = static_cast<std::int64_t>(a.size());
    if (a.front() < n)
        throw std::invalid_argument("in3dm_to_pm requires min(A) >= n");

    const std::int64_t P = std::max(a.back(), t.back());
    std::vector<std::int64_t> deadlines = a;
    for (std::int64_t x = P + 1; x <= 2 * P - n; ++x) {
        deadlines.push_back(x);
        deadlines.push_back(x);
    }
    // L = [P+n+2, 4P-2n+1] with every third value dropped: keep the first
    // two of every three, so the padded targets are P+n+2+3q and P+n+3+3q
    // for q = 0 .. P-n-1.
    std::vector<std::int64_t> targets = t;
    for (std::int64_t q = 0; q < P - n; ++q) {
        targets.push_back(P + n + 2 + 3 * q);
        targets.push_back(P + n + 3 + 3 * q);
    }
    return posmatch::PMInstance::make(core::Deadlines(std::move(deadlines)),
                                      std::move(targets));
}

namespace {

// Exhaustive matcher for the equality problems: assign a middle element to
// each a (largest a first) and consume the produced sum from the target
// multiset. A sum that is not an available target cuts the branch, so the
// padded elements of the reductions bind immediately.
BfResult exact_sum_oracle(std::vector<std::int64_t> a,
                          std::vector<std::int64_t> b,
                          std::vector<std::int64_t> t, std::size_t cap) {
    if (a.size() != b.size() || a.size() != t.size())
        throw std::invalid_argument("set sizes must match");
    if (a.size() > cap)
        return {BfResult::Status::Refused,
                "size above oracle cap " + std::to_string(cap)};
    std::sort(a.rbegin(), a.rend());
    std::sort(b.begin(), b.end());
    std::sort(t.begin(), t.end());
    std::vector<char> b_used(b.size(), 0), t_used(t.size(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == a.size()) return true;
        std::int64_t tried = -1;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b_used[j] || b[j] == tried) continue;
            tried = b[j];
            std::int64_t sum = a[i] + b[j];
            auto it = std::lower_bound(t.begin(), t.end(), sum);
            bool took = false;
            std::size_t hit = 0;
            for (; it != t.end() && *it == sum; ++it) {
                hit = static_cast<std::size_t>(it - t.begin());
                if (!t_used[hit]) {
                    took = true;
                    break;
                }
            }
            if (!took) continue;
            b_used[j] = 1;
            t_used[hit] = 1;
            if (self(self, i + 1)) return true;
            b_used[j] = 0;
            t_used[hit] = 0;
        }
        return false;
    };
    return rec(rec, 0) ? BfResult{BfResult::Status::Yes, ""}
                       : BfResult{BfResult::Status::No, ""};
}

}  // namespace

BfResult solve_nmts_bf(const NMTSInstance& inst, std::size_t cap) {
    return exact_sum_oracle(inst.a_set, inst.b_set, inst.t_set, cap);
}

BfResult solve_srnmts_bf(const SRNMTSInstance& inst, std::size_t cap) {
    std::vector<std::int64_t> middle(inst.a_set.size());
    std::iota(middle.begin(), middle.end(), 1);
    return exact_sum_oracle(inst.a_set, middle, inst.t_set, cap);
}

BfResult solve_in3dm_bf(const IN3DMInstance& inst, std::size_t cap) {
    // Assign an a to each middle value, largest middle first; at the leaf
    // the sorted sums must dominate the sorted targets. Inner nodes prune
    // once some target exceeds every sum the remaining pairs could reach.
    std::vector<std::int64_t> a = inst.a_set;
    std::vector<std::int64_t> t = inst.t_set;
    if (a.size() != t.size())
        throw std::invalid_argument("set sizes must match");
    if (a.size() > cap)
        return {BfResult::Status::Refused,
                "size above oracle cap " + std::to_string(cap)};
    const std::size_t n = a.size();
    std::sort(a.begin(), a.end());
    std::sort(t.begin(), t.end());
    std::vector<char> a_used(n, 0);
    std::vector<std::int64_t> sums_desc;
    sums_desc.reserve(n);
    auto rec = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == n) {
            for (std::size_t i = 0; i < n; ++i)
                if (sums_desc[n - 1 - i] < t[i]) return false;
            return true;
        }
        std::int64_t middle = static_cast<std::int64_t>(n - depth);
        std::int64_t max_avail = -1;
        for (std::size_t j = n; j-- > 0;)
            if (!a_used[j]) {
                max_avail = a[j];
                break;
            }
        // targets beyond the best remaining sum need committed cover
        std::int64_t bound = max_avail + middle;
        auto first_above = std::upper_bound(t.begin(), t.end(), bound);
        std::size_t need = static_cast<std::size_t>(t.end() - first_above);
        if (need > depth) return false;
        for (std::size_t j = 0; j < need; ++j)
            if (sums_desc[j] < t[t.size() - 1 - j]) return false;

        std::int64_t tried = -1;
        for (std::size_t j = n; j-- > 0;) {
            if (a_used[j] || a[j] == tried) continue;
            tried = a[j];
            a_used[j] = 1;
            std::int64_t sum = a[j] + middle;
            auto it = std::lower_bound(sums_desc.begin(), sums_desc.end(),
                                       sum, std::greater<>());
            sums_desc.insert(it, sum);
            if (self(self, depth + 1)) return true;
            sums_desc.erase(
                std::find(sums_desc.begin(), sums_desc.end(), sum));
            a_used[j] = 0;
        }
        return false;
    };
    return rec(rec, 0) ? BfResult{BfResult::Status::Yes, ""}
                       : BfResult{BfResult::Status::No, ""};
}

ChainResult run_chain(const NMTSInstance& inst) {
    ChainResult out;
    auto step1 = nmts_to_srnmts(inst);
    if (step1.trivial_no) {
        out.trivial_no = true;
        out.stage = "nmts->srnmts";
        out.reason = step1.reason;
        return out;
    }
    out.srnmts = std::move(step1.value);

    auto step2 = srnmts_to_in3dm(*out.srnmts);
    if (step2.trivial_no) {
        out.trivial_no = true;
        out.stage = "srnmts->in3dm";
        out.reason = step2.reason;
        return out;
    }
    out.in3dm = std::move(step2.value);
    out.in3dm_shifted = in3dm_normalize(*out.in3dm);
    out.pm = in3dm_to_pm(*out.in3dm_shifted);
    return out;
}

}  // namespace pinwheel::hardness
