#ifndef IMTL_MT2_HPP
#define IMTL_MT2_HPP

#include <unordered_map>
#include <vector>

#include "imtl/formula.hpp"
#include "imtl/mt_common.hpp"
#include "imtl/nim_model.hpp"

namespace imtl {

/// Multi-topological model over Alexandroff spaces, without distinguished
/// sets. Atom truth sets must be upward closed over the derived minimal
/// neighborhoods.
struct Mt2Model {
    std::size_t worlds = 0;
    std::vector<FiniteTopology> spaces;
    Valuation valuation;

    friend bool operator==(const Mt2Model&, const Mt2Model&) = default;
};

/// Neighborhood pair read off a family of spaces. For each world w:
///   min[w]  intersection of min_open_nbhd(tau, w) over spaces containing w
///   max[w]  intersection of the universes of those spaces
struct DerivedNeighborhoods {
    std::vector<WorldSet> min;
    std::vector<WorldSet> max;

    NimFrame to_frame() const;
};

/// Throws InvalidModel if some world lies in no universe.
DerivedNeighborhoods derive_neighborhoods(std::size_t worlds, const std::vector<FiniteTopology>& spaces);
DerivedNeighborhoods derive_neighborhoods(const Mt2Model& m);

std::vector<MtViolation> validate_mt2(const Mt2Model& m);

/// Valuation calculus over the derived neighborhoods:
///   phi -> psi : union of min[w] with min[w] inside -V(phi) | V(psi)
///   box phi    : union of min[w] with max[w] inside V(phi)
class Mt2Evaluator {
public:
    explicit Mt2Evaluator(const Mt2Model& model);

    WorldSet eval(const Formula& f) const;
    std::vector<WorldSet> eval_all(const std::vector<Formula>& fs) const;

    const DerivedNeighborhoods& neighborhoods() const { return nbhd_; }

private:
    using Memo = std::unordered_map<const void*, WorldSet>;
    WorldSet eval(const Formula& f, Memo& memo) const;

    Mt2Model model_;
    DerivedNeighborhoods nbhd_;
    WorldSet all_;
};

WorldSet eval_mt2(const Mt2Model& m, const Formula& f);
bool is_true_mt2(const Mt2Model& m, const Formula& f);

}  // namespace imtl

#endif  // IMTL_MT2_HPP
