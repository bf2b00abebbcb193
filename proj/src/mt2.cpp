#include "imtl/mt2.hpp"

namespace imtl {

NimFrame DerivedNeighborhoods::to_frame() const { return NimFrame(min.size(), min, max, true); }

DerivedNeighborhoods derive_neighborhoods(std::size_t worlds, const std::vector<FiniteTopology>& spaces) {
    DerivedNeighborhoods out;
    out.min.reserve(worlds);
    out.max.reserve(worlds);
    for (World w = 0; w < worlds; ++w) {
        WorldSet min = WorldSet::full(worlds);
        WorldSet max = WorldSet::full(worlds);
        bool seen = false;
        for (const auto& t : spaces) {
            if (!t.universe().contains(w)) continue;
            seen = true;
            min &= min_open_nbhd(t, w);
            max &= t.universe();
        }
        if (!seen) throw InvalidModel("world " + std::to_string(w) + " lies in no universe");
        out.min.push_back(min);
        out.max.push_back(max);
    }
    return out;
}

DerivedNeighborhoods derive_neighborhoods(const Mt2Model& m) { return derive_neighborhoods(m.worlds, m.spaces); }

std::vector<MtViolation> validate_mt2(const Mt2Model& m) {
    using Kind = MtViolation::Kind;
    auto out = validate_spaces(m.worlds, m.spaces);
    if (!out.empty()) return out;

    const WorldSet all = WorldSet::full(m.worlds);
    const auto nbhd = derive_neighborhoods(m);
    for (const auto& [name, set] : m.valuation) {
        if (!set.subset_of(all)) {
            out.push_back({Kind::AtomOutOfRange, name + "=" + set.to_string()});
            continue;
        }
        for (World w : set) {
            if (!nbhd.min[w].subset_of(set)) {
                out.push_back({Kind::AtomNotMonotone, name + " at world " + std::to_string(w)});
            }
        }
    }
    return out;
}

Mt2Evaluator::Mt2Evaluator(const Mt2Model& model) : model_(model) {
    if (auto v = validate_mt2(model_); !v.empty()) throw InvalidModel("invalid MT2 model: " + describe(v));
    nbhd_ = derive_neighborhoods(model_);
    all_ = WorldSet::full(model_.worlds);
}

WorldSet Mt2Evaluator::eval(const Formula& f, Memo& memo) const {
    if (auto it = memo.find(f.identity()); it != memo.end()) return it->second;
    WorldSet result;
    switch (f.kind()) {
        case Connective::Bottom:
            break;
        case Connective::Var:
            result = lookup(model_.valuation, f.name());
            break;
        case Connective::And:
            result = eval(f.lhs(), memo) & eval(f.rhs(), memo);
            break;
        case Connective::Or:
            result = eval(f.lhs(), memo) | eval(f.rhs(), memo);
            break;
        case Connective::Implies: {
            const WorldSet good = (all_ - eval(f.lhs(), memo)) | eval(f.rhs(), memo);
            for (World w = 0; w < model_.worlds; ++w) {
                if (nbhd_.min[w].subset_of(good)) result |= nbhd_.min[w];
            }
            break;
        }
        case Connective::Box: {
            const WorldSet holds = eval(f.inner(), memo);
            for (World w = 0; w < model_.worlds; ++w) {
                if (nbhd_.max[w].subset_of(holds)) result |= nbhd_.min[w];
            }
            break;
        }
    }
    memo.emplace(f.identity(), result);
    return result;
}

WorldSet Mt2Evaluator::eval(const Formula& f) const {
    Memo memo;
    return eval(f, memo);
}

std::vector<WorldSet> Mt2Evaluator::eval_all(const std::vector<Formula>& fs) const {
    Memo memo;
    std::vector<WorldSet> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(eval(f, memo));
    return out;
}

WorldSet eval_mt2(const Mt2Model& m, const Formula& f) { return Mt2Evaluator(m).eval(f); }

bool is_true_mt2(const Mt2Model& m, const Formula& f) { return eval_mt2(m, f) == WorldSet::full(m.worlds); }

}  // namespace imtl
