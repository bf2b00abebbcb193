#ifndef IMTL_SEARCH_HPP
#define IMTL_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "imtl/formula.hpp"
#include "imtl/nim_model.hpp"

namespace imtl {

struct Exhaustive {};

struct Randomized {
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
};

struct SearchConfig {
    std::size_t max_worlds = 3;
    std::vector<std::string> variables;
    /// Zero means unlimited.
    std::chrono::milliseconds time_limit{0};
    std::variant<Exhaustive, Randomized> enumeration = Exhaustive{};
    unsigned jobs = 1;
};

struct Countermodel {
    NimModel model;
    World world;
};

struct NoCountermodelUpTo {
    std::size_t max_worlds;
    std::size_t frames_checked;
    std::size_t models_checked;
};

using SearchOutcome = std::variant<Countermodel, NoCountermodelUpTo>;

class SearchTimeout : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Calls fn(frame) for every valid NIM frame (T-condition on) with exactly
/// n worlds, ordered lexicographically by (min[0], ..., min[n-1], max[0],
/// ..., max[n-1]) with each set compared by its bit pattern. Stops early
/// when fn returns false. Returns the number of frames visited.
std::size_t for_each_frame(std::size_t n, const std::function<bool(const NimFrame&)>& fn);

/// Upward-closed subsets of the world set in increasing bit-pattern order;
/// these are exactly the admissible truth sets of an atom.
std::vector<WorldSet> upward_closed_sets(const NimFrame& frame);

/// Every monotone valuation of `variables` on the frame; the first variable
/// varies slowest. Stops early when fn returns false.
void for_each_valuation(const NimFrame& frame, const std::vector<std::string>& variables,
                        const std::function<bool(const Valuation&)>& fn);

/// Throws std::invalid_argument for max_worlds == 0 or a formula atom that is
/// not among cfg.variables; SearchTimeout when the time limit is hit.
///
/// In exhaustive mode the countermodel returned is the first in canonical
/// order (by world count, frame, valuation, world), regardless of cfg.jobs.
SearchOutcome find_countermodel(const Formula& f, const SearchConfig& cfg);

/// True iff the countermodel is a valid model whose world fails f.
bool verify_countermodel(const Formula& f, const Countermodel& cm);

/// An axiom scheme; every variable of `pattern` is a metavariable.
struct Schema {
    std::string name;
    Formula pattern;
};

Schema make_schema(std::string name, std::string_view pattern_text);

/// K, T and a ten-scheme Hilbert basis for intuitionistic logic, over
/// metavariables phi, psi, chi.
std::vector<Schema> imtl_axiom_schemas();

struct SchemaViolation {
    Formula instance;
    Countermodel countermodel;
};

struct SchemaResult {
    Schema schema;
    std::size_t instances = 0;
    std::vector<SchemaViolation> violations;
};

struct SoundnessReport {
    std::size_t models_checked = 0;
    std::vector<SchemaResult> results;

    bool sound() const;
};

/// Instantiates every schema with all formulas of depth <= instance_depth
/// over cfg.variables and searches each instance for a countermodel among
/// the models enumerated by cfg. Equivalent to calling find_countermodel
/// per instance: instances are grouped by the truth sets of their
/// substituents, which determine the instance's truth set in each model.
SoundnessReport soundness_sweep(const std::vector<Schema>& schemas, const SearchConfig& cfg,
                                std::size_t instance_depth = 2);

struct NecessitationReport {
    std::size_t models_checked = 0;
    std::size_t models_satisfying = 0;
    /// Models satisfying f everywhere in which box f fails at `world`.
    std::vector<Countermodel> violations;
};

NecessitationReport necessitation_check(const Formula& f, const SearchConfig& cfg);

}  // namespace imtl

#endif  // IMTL_SEARCH_HPP
