#include "imtl/mt3.hpp"

namespace imtl {

std::vector<MinNbhd> minimal_neighborhoods(const std::vector<FiniteTopology>& spaces) {
    std::vector<MinNbhd> out;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        for (World w : spaces[i].universe()) out.push_back({i, w, min_open_nbhd(spaces[i], w)});
    }
    return out;
}

std::vector<MtViolation> validate_mt3(const Mt3Model& m) {
    using Kind = MtViolation::Kind;
    auto out = validate_spaces(m.worlds, m.spaces);
    if (!out.empty()) return out;

    const WorldSet all = WorldSet::full(m.worlds);
    const auto nbhds = minimal_neighborhoods(m.spaces);
    for (const auto& [name, set] : m.valuation) {
        if (!set.subset_of(all)) {
            out.push_back({Kind::AtomOutOfRange, name + "=" + set.to_string()});
            continue;
        }
        WorldSet covered;
        for (const auto& x : nbhds) {
            if (x.set.subset_of(set)) covered |= x.set;
        }
        if (covered != set) out.push_back({Kind::AtomNotUnionOfMinNbhds, name + "=" + set.to_string()});
    }
    return out;
}

Mt3Evaluator::Mt3Evaluator(const Mt3Model& model) : model_(model) {
    if (auto v = validate_mt3(model_); !v.empty()) throw InvalidModel("invalid MT3 model: " + describe(v));
    nbhds_ = minimal_neighborhoods(model_.spaces);
    all_ = WorldSet::full(model_.worlds);
}

bool Mt3Evaluator::contributes(const MinNbhd& x, const Formula& f, Memo& memo) const {
    if (f.kind() == Connective::Implies) {
        const WorldSet good = (all_ - eval(f.lhs(), memo)) | eval(f.rhs(), memo);
        return x.set.subset_of(good);
    }
    if (f.kind() == Connective::Box) {
        return model_.spaces[x.space].universe().subset_of(eval(f.inner(), memo));
    }
    return false;
}

WorldSet Mt3Evaluator::eval(const Formula& f, Memo& memo) const {
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
        case Connective::Implies:
        case Connective::Box:
            for (const auto& x : nbhds_) {
                if (contributes(x, f, memo)) result |= x.set;
            }
            break;
    }
    memo.emplace(f.identity(), result);
    return result;
}

WorldSet Mt3Evaluator::eval(const Formula& f) const {
    Memo memo;
    return eval(f, memo);
}

std::vector<WorldSet> Mt3Evaluator::eval_all(const std::vector<Formula>& fs) const {
    Memo memo;
    std::vector<WorldSet> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(eval(f, memo));
    return out;
}

std::vector<MinNbhd> Mt3Evaluator::contributions(const Formula& f) const {
    Memo memo;
    std::vector<MinNbhd> out;
    for (const auto& x : nbhds_) {
        if (contributes(x, f, memo)) out.push_back(x);
    }
    return out;
}

WorldSet eval_mt3(const Mt3Model& m, const Formula& f) { return Mt3Evaluator(m).eval(f); }

bool is_true_mt3(const Mt3Model& m, const Formula& f) { return eval_mt3(m, f) == WorldSet::full(m.worlds); }

}  // namespace imtl
