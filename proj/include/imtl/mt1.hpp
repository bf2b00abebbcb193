#ifndef IMTL_MT1_HPP
#define IMTL_MT1_HPP

#include <unordered_map>
#include <vector>

#include "imtl/formula.hpp"
#include "imtl/mt_common.hpp"
#include "imtl/nim_model.hpp"

namespace imtl {

struct Mt1Space {
    FiniteTopology topology;
    WorldSet distinguished;

    friend bool operator==(const Mt1Space&, const Mt1Space&) = default;
};

/// Multi-topological model with a distinguished nonempty open set per space.
struct Mt1Model {
    std::size_t worlds = 0;
    std::vector<Mt1Space> spaces;
    Valuation valuation;

    friend bool operator==(const Mt1Model&, const Mt1Model&) = default;
};

/// Besides the shared space checks: every distinguished set is a nonempty
/// open of its space, and every atom's truth set equals the union of the
/// opens (of any space) it contains.
std::vector<MtViolation> validate_mt1(const Mt1Model& m);

/// Valuation calculus:
///   phi -> psi : union over spaces of Int(T \ (V(phi) & -V(psi)))
///   box phi    : union of D over spaces whose universe T lies in V(phi)
/// with complements taken in the full world set.
class Mt1Evaluator {
public:
    explicit Mt1Evaluator(const Mt1Model& model);

    WorldSet eval(const Formula& f) const;
    std::vector<WorldSet> eval_all(const std::vector<Formula>& fs) const;

    const Mt1Model& model() const { return model_; }

private:
    using Memo = std::unordered_map<const void*, WorldSet>;
    WorldSet eval(const Formula& f, Memo& memo) const;

    Mt1Model model_;
    WorldSet all_;
};

WorldSet eval_mt1(const Mt1Model& m, const Formula& f);
bool is_true_mt1(const Mt1Model& m, const Formula& f);

}  // namespace imtl

#endif  // IMTL_MT1_HPP
