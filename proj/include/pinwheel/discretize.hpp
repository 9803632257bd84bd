#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pinwheel/core.hpp"

namespace pinwheel::discretize {

/// Latest feasible positions for the first/primary visits: a_n = d_n and
/// a_i = min(a_{i+1} - 1, d_i), computed back to front. Strictly increasing,
/// with a_i <= d_i throughout.
struct DiscretizedSequence {
    std::vector<std::int64_t> positions;

    std::size_t size() const { return positions.size(); }
    std::int64_t operator[](std::size_t i) const { return positions[i]; }
    bool operator==(const DiscretizedSequence&) const = default;
};

/// Maximal run of consecutive integers in a discretized sequence. Indices
/// are 1-based into the sequence; values are the run endpoints.
struct ClusterSpan {
    std::size_t start_index = 0;
    std::size_t end_index = 0;
    std::int64_t start_value = 0;
    std::int64_t end_value = 0;

    std::size_t size() const { return end_index - start_index + 1; }
    bool operator==(const ClusterSpan&) const = default;
};

/// Smallest 1-based j with d_j < j, if any. When such a j exists the first
/// visits of tasks 1..j cannot all fit before their deadlines, the instance
/// is infeasible for every k, and no discretized sequence exists.
std::optional<std::size_t> first_position_deficit(
    const core::Deadlines& deadlines);

/// Throws std::invalid_argument when first_position_deficit(deadlines) is
/// set; callers decide infeasibility before coming here.
DiscretizedSequence discretized_sequence(const core::Deadlines& deadlines);

std::vector<ClusterSpan> clusters(const DiscretizedSequence& seq);

/// [1..horizon] minus the sequence, sorted. Rejects positions beyond the
/// horizon; callers normalize first.
std::vector<std::int64_t> complement_targets(const DiscretizedSequence& seq,
                                             std::int64_t horizon);

}  // namespace pinwheel::discretize
