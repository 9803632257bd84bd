#include "pinwheel/discretize.hpp"

#include <algorithm>
#include <stdexcept>

namespace pinwheel::discretize {

std::optional<std::size_t> first_position_deficit(
    const core::Deadlines& deadlines) {
    const auto& d = deadlines.values();
    for (std::size_t j = 0; j < d.size(); ++j)
        if (d[j] < static_cast<std::int64_t>(j) + 1) return j + 1;
    return std::nullopt;
}

DiscretizedSequence discretized_sequence(const core::Deadlines& deadlines) {
    const auto& d = deadlines.values();
    std::vector<std::int64_t> a(d.size());
    for (std::size_t i = d.size(); i-- > 0;) {
        a[i] = (i + 1 == d.size()) ? d[i] : std::min(a[i + 1] - 1, d[i]);
        if (a[i] < 1)
            throw std::invalid_argument(
                "discretized sequence leaves no feasible position");
    }
    return DiscretizedSequence{std::move(a)};
}

std::vector<ClusterSpan> clusters(const DiscretizedSequence& seq) {
    std::vector<ClusterSpan> out;
    const auto& a = seq.positions;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        if (i == a.size() || a[i] != a[i - 1] + 1) {
            out.push_back({start + 1, i, a[start], a[i - 1]});
            start = i;
        }
    }
    return out;
}

std::vector<std::int64_t> complement_targets(const DiscretizedSequence& seq,
                                             std::int64_t horizon) {
    if (!seq.positions.empty() && seq.positions.back() > horizon)
        throw std::invalid_argument("sequence position beyond horizon");
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(horizon) - seq.size());
    std::size_t j = 0;
    for (std::int64_t p = 1; p <= horizon; ++p) {
        if (j < seq.size() && seq.positions[j] == p) {
            ++j;
        } else {
            out.push_back(p);
        }
    }
    return out;
}

}  // namespace pinwheel::discretize
