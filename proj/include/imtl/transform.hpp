#ifndef IMTL_TRANSFORM_HPP
#define IMTL_TRANSFORM_HPP

#include <stdexcept>
#include <vector>

#include "imtl/formula.hpp"
#include "imtl/mt1.hpp"
#include "imtl/mt2.hpp"
#include "imtl/mt3.hpp"
#include "imtl/nim_model.hpp"

namespace imtl {

/// One space per world w: universe max[w], the w-topology, distinguished
/// set min[w]; identical triples are merged. Atom truth sets are copied.
/// Refuses invalid models and frames without the T-condition.
Mt1Model nim_to_mt1(const NimModel& m);

/// Frame from the derived neighborhoods of the spaces; valuation copied.
NimModel mt2_to_nim(const Mt2Model& m);

/// One space per world w: universe max[w] with the w_min-topology;
/// identical spaces are merged. Atom truth sets are copied.
Mt3Model nim_to_mt3(const NimModel& m);

/// Models compared by check_pointwise_equivalence do not share a world set.
class IncompatibleModels : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Mismatch {
    Formula formula;
    World world;
    bool nim_verdict;
    bool mt_verdict;
};

struct EquivalenceReport {
    std::size_t formula_count = 0;
    std::size_t world_count = 0;
    std::vector<Mismatch> mismatches;

    bool holds() const { return mismatches.empty(); }
};

/// Compares w |= phi in the NIM model with w in V(phi) in the other model,
/// for every listed formula and world. `jobs` > 1 splits the formula list
/// across threads; the report is the same either way.
EquivalenceReport check_pointwise_equivalence(const NimModel& nim, const Mt1Model& mt,
                                              const std::vector<Formula>& formulas, unsigned jobs = 1);
EquivalenceReport check_pointwise_equivalence(const NimModel& nim, const Mt2Model& mt,
                                              const std::vector<Formula>& formulas, unsigned jobs = 1);
EquivalenceReport check_pointwise_equivalence(const NimModel& nim, const Mt3Model& mt,
                                              const std::vector<Formula>& formulas, unsigned jobs = 1);

}  // namespace imtl

#endif  // IMTL_TRANSFORM_HPP
