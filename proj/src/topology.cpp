#include "imtl/topology.hpp"

#include <algorithm>
#include <unordered_set>

namespace imtl {

FiniteTopology::FiniteTopology(WorldSet universe, std::vector<WorldSet> opens) : universe_(universe) {
    std::sort(opens.begin(), opens.end(), canonical_less);
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    opens_ = std::move(opens);
}

bool FiniteTopology::is_open(WorldSet x) const {
    return std::binary_search(opens_.begin(), opens_.end(), x, canonical_less);
}

std::string TopologyViolation::describe() const {
    switch (kind) {
        case Kind::MissingEmpty:
            return "empty set is not open";
        case Kind::MissingUniverse:
            return "universe " + first.to_string() + " is not open";
        case Kind::OpenOutsideUniverse:
            return "open " + first.to_string() + " is not inside the universe";
        case Kind::UnionNotOpen:
            return "union of " + first.to_string() + " and " + second.to_string() + " is not open";
        case Kind::IntersectionNotOpen:
            return "intersection of " + first.to_string() + " and " + second.to_string() + " is not open";
    }
    return {};
}

std::string describe(const std::vector<TopologyViolation>& violations) {
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "; ";
        out += v.describe();
    }
    return out;
}

std::vector<TopologyViolation> validate_topology(const FiniteTopology& t) {
    using Kind = TopologyViolation::Kind;
    std::vector<TopologyViolation> out;
    const auto& opens = t.opens();
    std::unordered_set<std::uint64_t> present;
    for (WorldSet o : opens) present.insert(o.bits());

    if (!present.contains(0)) out.push_back({Kind::MissingEmpty, {}, {}});
    if (!present.contains(t.universe().bits())) out.push_back({Kind::MissingUniverse, t.universe(), {}});
    for (WorldSet o : opens) {
        if (!o.subset_of(t.universe())) out.push_back({Kind::OpenOutsideUniverse, o, {}});
    }
    for (std::size_t i = 0; i < opens.size(); ++i) {
        for (std::size_t j = i + 1; j < opens.size(); ++j) {
            if (!present.contains((opens[i] | opens[j]).bits())) out.push_back({Kind::UnionNotOpen, opens[i], opens[j]});
            if (!present.contains((opens[i] & opens[j]).bits())) {
                out.push_back({Kind::IntersectionNotOpen, opens[i], opens[j]});
            }
        }
    }
    return out;
}

WorldSet interior(const FiniteTopology& t, WorldSet x) {
    WorldSet out;
    for (WorldSet o : t.opens()) {
        if (o.subset_of(x)) out |= o;
    }
    return out;
}

WorldSet min_open_nbhd(const FiniteTopology& t, World w) {
    if (!t.universe().contains(w)) {
        throw std::out_of_range("world " + std::to_string(w) + " is not in the universe " + t.universe().to_string());
    }
    WorldSet out = t.universe();
    for (WorldSet o : t.opens()) {
        if (o.contains(w)) out &= o;
    }
    return out;
}

namespace {

void require_buildable(const NimFrame& frame, World w, std::size_t subset_bound) {
    if (w >= frame.worlds) throw std::out_of_range("world " + std::to_string(w) + " out of range");
    if (!frame.t_condition) {
        throw InvalidModel("frame lacks the T-condition; its maximal neighborhoods need not be open");
    }
    auto violations = validate_frame(frame);
    if (!violations.empty()) throw InvalidModel("invalid NIM frame: " + describe(violations));
    if (frame.max[w].size() > subset_bound) {
        throw std::length_error("max[" + std::to_string(w) + "] has " + std::to_string(frame.max[w].size()) +
                                " worlds; subset enumeration is bounded at " + std::to_string(subset_bound));
    }
}

bool closed_under_min(const NimFrame& frame, WorldSet x) {
    for (World v : x) {
        if (!frame.min[v].subset_of(x)) return false;
    }
    return true;
}

}  // namespace

FiniteTopology build_ow(const NimFrame& frame, World w, std::size_t subset_bound) {
    require_buildable(frame, w, subset_bound);
    std::vector<WorldSet> opens;
    for_each_subset(frame.max[w], [&](WorldSet x) {
        if (closed_under_min(frame, x)) opens.push_back(x);
    });
    return FiniteTopology(frame.max[w], std::move(opens));
}

FiniteTopology build_qw(const NimFrame& frame, World w, std::size_t subset_bound) {
    require_buildable(frame, w, subset_bound);
    // The empty set does not contain min[w] but is open by fiat.
    std::vector<WorldSet> opens{WorldSet{}};
    for_each_subset(frame.max[w] - frame.min[w], [&](WorldSet extra) {
        const WorldSet x = frame.min[w] | extra;
        if (closed_under_min(frame, x)) opens.push_back(x);
    });
    return FiniteTopology(frame.max[w], std::move(opens));
}

}  // namespace imtl
