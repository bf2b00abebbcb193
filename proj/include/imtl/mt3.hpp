#ifndef IMTL_MT3_HPP
#define IMTL_MT3_HPP

#include <unordered_map>
#include <vector>

#include "imtl/formula.hpp"
#include "imtl/mt_common.hpp"
#include "imtl/nim_model.hpp"

namespace imtl {

/// Same frame data as Mt2Model; atom truth sets must be unions of minimal
/// open neighborhoods taken from the spaces.
struct Mt3Model {
    std::size_t worlds = 0;
    std::vector<FiniteTopology> spaces;
    Valuation valuation;

    friend bool operator==(const Mt3Model&, const Mt3Model&) = default;
};

/// min_open_nbhd(spaces[space], witness) == set
struct MinNbhd {
    std::size_t space;
    World witness;
    WorldSet set;
};

/// Every (space, witness) minimal open neighborhood of the model, in space
/// then witness order.
std::vector<MinNbhd> minimal_neighborhoods(const std::vector<FiniteTopology>& spaces);

std::vector<MtViolation> validate_mt3(const Mt3Model& m);

/// Valuation calculus over minimal open neighborhoods X = min_open_nbhd(tau, w):
///   phi -> psi : union of every X inside -V(phi) | V(psi)
///   box phi    : union of every X taken from a space whose universe lies in V(phi)
class Mt3Evaluator {
public:
    explicit Mt3Evaluator(const Mt3Model& model);

    WorldSet eval(const Formula& f) const;
    std::vector<WorldSet> eval_all(const std::vector<Formula>& fs) const;

    /// The neighborhoods that make up eval(f) for an implication or box;
    /// empty for other connectives.
    std::vector<MinNbhd> contributions(const Formula& f) const;

    const std::vector<MinNbhd>& neighborhoods() const { return nbhds_; }

private:
    using Memo = std::unordered_map<const void*, WorldSet>;
    WorldSet eval(const Formula& f, Memo& memo) const;
    bool contributes(const MinNbhd& x, const Formula& f, Memo& memo) const;

    Mt3Model model_;
    std::vector<MinNbhd> nbhds_;
    WorldSet all_;
};

WorldSet eval_mt3(const Mt3Model& m, const Formula& f);
bool is_true_mt3(const Mt3Model& m, const Formula& f);

}  // namespace imtl

#endif  // IMTL_MT3_HPP
