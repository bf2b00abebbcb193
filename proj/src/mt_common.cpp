#include "imtl/mt_common.hpp"

namespace imtl {

std::string MtViolation::describe() const {
    switch (kind) {
        case Kind::EmptyWorldSet:
            return "the world set is empty";
        case Kind::UniverseOutOfRange:
            return "universe out of range: " + detail;
        case Kind::InvalidTopology:
            return "invalid topology: " + detail;
        case Kind::DistinguishedEmpty:
            return "distinguished set is empty: " + detail;
        case Kind::DistinguishedNotOpen:
            return "distinguished set is not open: " + detail;
        case Kind::WorldUncovered:
            return "world in no universe: " + detail;
        case Kind::AtomOutOfRange:
            return "valuation out of range: " + detail;
        case Kind::AtomNotUnionOfOpens:
            return "valuation is not a union of opens: " + detail;
        case Kind::AtomNotMonotone:
            return "valuation is not monotone over derived minimal neighborhoods: " + detail;
        case Kind::AtomNotUnionOfMinNbhds:
            return "valuation is not a union of minimal open neighborhoods: " + detail;
    }
    return detail;
}

std::string describe(const std::vector<MtViolation>& violations) {
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "; ";
        out += v.describe();
    }
    return out;
}

std::vector<MtViolation> validate_spaces(std::size_t worlds, const std::vector<FiniteTopology>& spaces) {
    using Kind = MtViolation::Kind;
    std::vector<MtViolation> out;
    if (worlds == 0) out.push_back({Kind::EmptyWorldSet, {}});
    if (worlds > kMaxWorlds) {
        out.push_back({Kind::UniverseOutOfRange, "world count " + std::to_string(worlds)});
        return out;
    }
    const WorldSet all = WorldSet::full(worlds);
    WorldSet covered;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        const auto& t = spaces[i];
        const std::string where = "space " + std::to_string(i);
        if (!t.universe().subset_of(all)) out.push_back({Kind::UniverseOutOfRange, where + " " + t.universe().to_string()});
        if (auto tv = validate_topology(t); !tv.empty()) out.push_back({Kind::InvalidTopology, where + ": " + describe(tv)});
        covered |= t.universe();
    }
    for (World w : all - covered) out.push_back({Kind::WorldUncovered, std::to_string(w)});
    return out;
}

}  // namespace imtl
