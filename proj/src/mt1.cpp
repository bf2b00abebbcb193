#include "imtl/mt1.hpp"

namespace imtl {

std::vector<MtViolation> validate_mt1(const Mt1Model& m) {
    using Kind = MtViolation::Kind;
    std::vector<FiniteTopology> topologies;
    topologies.reserve(m.spaces.size());
    for (const auto& s : m.spaces) topologies.push_back(s.topology);
    auto out = validate_spaces(m.worlds, topologies);
    if (m.worlds == 0 || m.worlds > kMaxWorlds) return out;

    for (std::size_t i = 0; i < m.spaces.size(); ++i) {
        const auto& s = m.spaces[i];
        const std::string where = "space " + std::to_string(i) + " D=" + s.distinguished.to_string();
        if (s.distinguished.empty()) out.push_back({Kind::DistinguishedEmpty, where});
        if (!s.topology.is_open(s.distinguished)) out.push_back({Kind::DistinguishedNotOpen, where});
    }

    const WorldSet all = WorldSet::full(m.worlds);
    for (const auto& [name, set] : m.valuation) {
        if (!set.subset_of(all)) {
            out.push_back({Kind::AtomOutOfRange, name + "=" + set.to_string()});
            continue;
        }
        WorldSet covered;
        for (const auto& s : m.spaces) covered |= interior(s.topology, set);
        if (covered != set) out.push_back({Kind::AtomNotUnionOfOpens, name + "=" + set.to_string()});
    }
    return out;
}

Mt1Evaluator::Mt1Evaluator(const Mt1Model& model) : model_(model) {
    if (auto v = validate_mt1(model_); !v.empty()) throw InvalidModel("invalid MT1 model: " + describe(v));
    all_ = WorldSet::full(model_.worlds);
}

WorldSet Mt1Evaluator::eval(const Formula& f, Memo& memo) const {
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
            const WorldSet bad = eval(f.lhs(), memo) & (all_ - eval(f.rhs(), memo));
            for (const auto& s : model_.spaces) {
                result |= interior(s.topology, s.topology.universe() - bad);
            }
            break;
        }
        case Connective::Box: {
            const WorldSet holds = eval(f.inner(), memo);
            for (const auto& s : model_.spaces) {
                if (s.topology.universe().subset_of(holds)) result |= s.distinguished;
            }
            break;
        }
    }
    memo.emplace(f.identity(), result);
    return result;
}

WorldSet Mt1Evaluator::eval(const Formula& f) const {
    Memo memo;
    return eval(f, memo);
}

std::vector<WorldSet> Mt1Evaluator::eval_all(const std::vector<Formula>& fs) const {
    Memo memo;
    std::vector<WorldSet> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(eval(f, memo));
    return out;
}

WorldSet eval_mt1(const Mt1Model& m, const Formula& f) { return Mt1Evaluator(m).eval(f); }

bool is_true_mt1(const Mt1Model& m, const Formula& f) { return eval_mt1(m, f) == WorldSet::full(m.worlds); }

}  // namespace imtl
