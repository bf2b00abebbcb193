#ifndef IMTL_RANDOM_HPP
#define IMTL_RANDOM_HPP

#include <random>
#include <string>
#include <vector>

#include "imtl/formula.hpp"
#include "imtl/mt2.hpp"
#include "imtl/mt3.hpp"
#include "imtl/nim_model.hpp"
#include "imtl/topology.hpp"

namespace imtl {

/// Generators that produce valid structures by construction, by closing
/// random seeds under the relevant conditions rather than rejection sampling.
using Rng = std::mt19937_64;

WorldSet random_subset(Rng& rng, WorldSet of);

/// Frame with 1..max_worlds worlds satisfying (a)-(f): min[w] = {w} plus a
/// random seed, closed under the ->-condition; max[w] grown from min[w] and
/// closed under the box- and T-conditions.
NimFrame random_nim_frame(Rng& rng, std::size_t max_worlds);

/// Each variable gets the union of min[w] over a random set of seed worlds,
/// which is always upward closed.
Valuation random_monotone_valuation(Rng& rng, const NimFrame& frame, const std::vector<std::string>& variables);

NimModel random_nim_model(Rng& rng, std::size_t max_worlds, const std::vector<std::string>& variables);

/// Random seeds inside `universe` closed under union and intersection,
/// together with the empty set and the universe.
FiniteTopology random_topology(Rng& rng, WorldSet universe);

/// 1..max_spaces random universes covering 1..max_worlds worlds, each with
/// a random topology.
std::vector<FiniteTopology> random_spaces(Rng& rng, std::size_t max_worlds, std::size_t max_spaces,
                                          std::size_t& worlds_out);

/// Atoms are unions of derived minimal neighborhoods.
Mt2Model random_mt2_model(Rng& rng, std::size_t max_worlds, std::size_t max_spaces,
                          const std::vector<std::string>& variables);

/// Atoms are unions of minimal open neighborhoods of the spaces.
Mt3Model random_mt3_model(Rng& rng, std::size_t max_worlds, std::size_t max_spaces,
                          const std::vector<std::string>& variables);

/// Formula of depth <= max_depth over `variables` and bottom.
Formula random_formula(Rng& rng, const std::vector<std::string>& variables, std::size_t max_depth);

}  // namespace imtl

#endif  // IMTL_RANDOM_HPP
