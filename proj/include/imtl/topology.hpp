#ifndef IMTL_TOPOLOGY_HPP
#define IMTL_TOPOLOGY_HPP

#include <string>
#include <vector>

#include "imtl/nim_model.hpp"
#include "imtl/world_set.hpp"

namespace imtl {

/// A finite space given by its universe and an explicit family of open sets.
/// The family is kept deduplicated and in canonical order, so two topologies
/// with the same opens compare equal.
class FiniteTopology {
public:
    FiniteTopology() = default;
    FiniteTopology(WorldSet universe, std::vector<WorldSet> opens);

    WorldSet universe() const { return universe_; }
    const std::vector<WorldSet>& opens() const { return opens_; }
    bool is_open(WorldSet x) const;

    friend bool operator==(const FiniteTopology&, const FiniteTopology&) = default;

private:
    WorldSet universe_;
    std::vector<WorldSet> opens_;
};

struct TopologyViolation {
    enum class Kind { MissingEmpty, MissingUniverse, OpenOutsideUniverse, UnionNotOpen, IntersectionNotOpen };

    Kind kind;
    WorldSet first;
    WorldSet second;

    std::string describe() const;
    friend bool operator==(const TopologyViolation&, const TopologyViolation&) = default;
};

/// Checks empty set and universe are open, every open lies in the universe,
/// and the family is closed under binary union and intersection. For a finite
/// family that is closure under arbitrary unions and intersections, so a
/// passing topology is Alexandroff.
std::vector<TopologyViolation> validate_topology(const FiniteTopology& t);

std::string describe(const std::vector<TopologyViolation>& violations);

/// Largest open contained in x (union of all opens inside x).
WorldSet interior(const FiniteTopology& t, WorldSet x);

/// Intersection of all opens containing w. Throws if w is outside the universe.
WorldSet min_open_nbhd(const FiniteTopology& t, World w);

/// Largest |max[w]| for which build_ow / build_qw will enumerate subsets.
inline constexpr std::size_t kDefaultSubsetBound = 16;

/// w-topology of a frame: universe max[w], opens all X inside max[w] with
/// min[v] inside X for every v in X. Refuses invalid frames and frames
/// without the T-condition.
FiniteTopology build_ow(const NimFrame& frame, World w, std::size_t subset_bound = kDefaultSubsetBound);

/// w_min-topology: like build_ow, restricted to X containing min[w], plus
/// the empty set.
FiniteTopology build_qw(const NimFrame& frame, World w, std::size_t subset_bound = kDefaultSubsetBound);

}  // namespace imtl

#endif  // IMTL_TOPOLOGY_HPP
