#ifndef IMTL_MT_COMMON_HPP
#define IMTL_MT_COMMON_HPP

#include <string>
#include <vector>

#include "imtl/topology.hpp"

namespace imtl {

/// A failed invariant of a multi-topological model.
struct MtViolation {
    enum class Kind {
        EmptyWorldSet,
        UniverseOutOfRange,
        InvalidTopology,
        DistinguishedEmpty,
        DistinguishedNotOpen,
        WorldUncovered,
        AtomOutOfRange,
        AtomNotUnionOfOpens,
        AtomNotMonotone,
        AtomNotUnionOfMinNbhds,
    };

    Kind kind;
    std::string detail;

    std::string describe() const;
};

std::string describe(const std::vector<MtViolation>& violations);

/// Checks shared by every multi-topological flavor: nonempty world set,
/// universes within range, each topology valid, universes cover all worlds.
std::vector<MtViolation> validate_spaces(std::size_t worlds, const std::vector<FiniteTopology>& spaces);

}  // namespace imtl

#endif  // IMTL_MT_COMMON_HPP
