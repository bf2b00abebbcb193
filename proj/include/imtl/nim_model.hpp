#ifndef IMTL_NIM_MODEL_HPP
#define IMTL_NIM_MODEL_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "imtl/formula.hpp"
#include "imtl/world_set.hpp"

namespace imtl {

/// Truth set of every propositional variable. Variables not present are
/// interpreted as the empty set.
using Valuation = std::map<std::string, WorldSet>;

inline WorldSet lookup(const Valuation& v, const std::string& name) {
    auto it = v.find(name);
    return it == v.end() ? WorldSet{} : it->second;
}

/// Raised by evaluators and transformations handed a structure that fails
/// its own validator. `what()` lists the violations.
class InvalidModel : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Neighborhood frame. The neighborhood family of w is represented by its
/// least element min[w] and greatest element max[w]; every X with
/// min[w] <= X <= max[w] belongs to it.
struct NimFrame {
    std::size_t worlds = 0;
    std::vector<WorldSet> min;
    std::vector<WorldSet> max;
    bool t_condition = true;

    NimFrame() = default;
    /// Rejects an empty world set, mismatched array lengths and members
    /// out of range. Frame conditions are checked by validate_frame.
    NimFrame(std::size_t worlds, std::vector<WorldSet> min, std::vector<WorldSet> max, bool t_condition = true);

    friend bool operator==(const NimFrame&, const NimFrame&) = default;
};

/// A failed frame or model condition. `condition` is one of
///   'a'  w in min[w]
///   'b'  min[w] subset of max[w]
///   'c'  u in min[w]  implies min[u] subset of min[w]
///   'e'  u in min[w]  implies max[u] subset of max[w]
///   'f'  v in max[w]  implies min[v] subset of max[w]   (T-condition)
///   'V'  valuation not monotone: w in V(q) but min[w] not inside V(q)
struct FrameViolation {
    char condition;
    World world;
    std::optional<World> witness;
    std::string variable;

    std::string describe() const;
    friend bool operator==(const FrameViolation&, const FrameViolation&) = default;
};

std::vector<FrameViolation> validate_frame(const NimFrame& frame);

struct NimModel {
    NimFrame frame;
    Valuation valuation;

    std::size_t worlds() const { return frame.worlds; }
    friend bool operator==(const NimModel&, const NimModel&) = default;
};

/// Frame violations followed by valuation-monotonicity violations.
std::vector<FrameViolation> validate_model(const NimModel& model);

/// True iff S is closed under w -> min[w], i.e. admissible as an atom's truth set.
bool is_upward_closed(const NimFrame& frame, WorldSet s);

/// Forcing by direct recursion on the formula at a single world.
bool forces(const NimModel& model, World w, const Formula& f);

/// Set-at-a-time evaluation; validates the model once on construction and
/// caches truth sets for the lifetime of one truth_sets() call.
class NimEvaluator {
public:
    /// Skips validation; for callers that enumerate models valid by construction.
    struct AssumeValid {};

    explicit NimEvaluator(const NimModel& model);
    NimEvaluator(const NimModel& model, AssumeValid);

    WorldSet truth_set(const Formula& f) const;
    /// Evaluates a batch sharing one memo; output is parallel to input.
    std::vector<WorldSet> truth_sets(const std::vector<Formula>& fs) const;

    const NimModel& model() const { return model_; }

private:
    using Memo = std::unordered_map<const void*, WorldSet>;
    WorldSet eval(const Formula& f, Memo& memo) const;

    NimModel model_;
    WorldSet all_;
};

WorldSet truth_set(const NimModel& model, const Formula& f);
bool is_satisfied_in_model(const NimModel& model, const Formula& f);

std::string describe(const std::vector<FrameViolation>& violations);

}  // namespace imtl

#endif  // IMTL_NIM_MODEL_HPP
