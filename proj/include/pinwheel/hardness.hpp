#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pinwheel/posmatch.hpp"

namespace pinwheel::hardness {

/// Numerical matching with target sums: a + b = t, every element of the
/// three equal-size lists used exactly once.
struct NMTSInstance {
    std::vector<std::int64_t> a_set;
    std::vector<std::int64_t> b_set;
    std::vector<std::int64_t> t_set;
};

/// Variant with the middle set fixed to [n] and simple input sets.
struct SRNMTSInstance {
    std::vector<std::int64_t> a_set;
    std::vector<std::int64_t> t_set;
};

/// Inequality variant: a + b >= t with middle set [n].
struct IN3DMInstance {
    std::vector<std::int64_t> a_set;
    std::vector<std::int64_t> t_set;
};

/// Reduction output. A transformer may settle the instance outright as a
/// no-instance; that is a value, not an error, so chains stay total.
template <typename T>
struct Reduced {
    bool trivial_no = false;
    std::string reason;
    std::optional<T> value;

    static Reduced no(std::string why) { return {true, std::move(why), {}}; }
    static Reduced of(T v) { return {false, "", std::move(v)}; }
};

/// Pads A with 3*i*max(T) - s_i and T with 3*i*max(T) for every s_i in
/// S = [max(B)] \ B, forcing the middle set to [max(B)]. Requires all
/// three sets duplicate-free; returns trivial-no when max(T) <= max(A) or
/// max(T) <= max(B).
Reduced<SRNMTSInstance> nmts_to_srnmts(const NMTSInstance& inst);

/// Pass-through when sum(a_i + i) == sum(t_i); trivial-no otherwise.
Reduced<IN3DMInstance> srnmts_to_in3dm(const SRNMTSInstance& inst);

/// Shifts every element of A and T up by n; afterwards min(A) >= n.
IN3DMInstance in3dm_normalize(const IN3DMInstance& inst);

/// The padding reduction into Position Matching. With
/// P = max(max(A), max(T)): two copies each of P+1 .. 2P-n join A, and the
/// run [P+n+2, 4P-2n+1] with every third value dropped joins T. The
/// output's discretized sequence is exactly [2P-n] and its maximum
/// multiplicity is 2. Requires min(A) >= n and simple sets.
posmatch::PMInstance in3dm_to_pm(const IN3DMInstance& inst);

struct BfResult {
    enum class Status { Yes, No, Refused } status;
    std::string note;

    bool yes() const { return status == Status::Yes; }
};

BfResult solve_nmts_bf(const NMTSInstance& inst, std::size_t cap = 7);
BfResult solve_srnmts_bf(const SRNMTSInstance& inst, std::size_t cap = 7);
BfResult solve_in3dm_bf(const IN3DMInstance& inst, std::size_t cap = 7);

/// The whole chain, with every intermediate kept for inspection.
struct ChainResult {
    bool trivial_no = false;
    std::string stage;  // stage that settled the instance, when trivial_no
    std::string reason;
    std::optional<SRNMTSInstance> srnmts;
    std::optional<IN3DMInstance> in3dm;
    std::optional<IN3DMInstance> in3dm_shifted;
    std::optional<posmatch::PMInstance> pm;
};
ChainResult run_chain(const NMTSInstance& inst);

}  // namespace pinwheel::hardness
