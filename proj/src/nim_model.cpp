#include "imtl/nim_model.hpp"

namespace imtl {

NimFrame::NimFrame(std::size_t worlds, std::vector<WorldSet> min, std::vector<WorldSet> max, bool t_condition)
    : worlds(worlds), min(std::move(min)), max(std::move(max)), t_condition(t_condition) {
    if (worlds == 0) throw std::invalid_argument("a frame needs at least one world");
    if (worlds > kMaxWorlds) throw std::invalid_argument("too many worlds: " + std::to_string(worlds));
    if (this->min.size() != worlds || this->max.size() != worlds) {
        throw std::invalid_argument("min/max arrays must have one entry per world");
    }
    for (World w = 0; w < worlds; ++w) {
        if (!this->min[w].within(worlds) || !this->max[w].within(worlds)) {
            throw std::invalid_argument("neighborhood of world " + std::to_string(w) + " names an unknown world");
        }
    }
}

std::string FrameViolation::describe() const {
    const std::string at = " at w=" + std::to_string(world);
    const std::string by = witness ? ", witness " + std::to_string(*witness) : std::string{};
    switch (condition) {
        case 'a':
            return "(a) w not in min[w]" + at;
        case 'b':
            return "(b) min[w] not a subset of max[w]" + at;
        case 'c':
            return "(c) ->-condition: min[u] not a subset of min[w]" + at + by;
        case 'e':
            return "(e) box-condition: max[u] not a subset of max[w]" + at + by;
        case 'f':
            return "(f) T-condition: min[v] not a subset of max[w]" + at + by;
        case 'V':
            return "valuation of '" + variable + "' not monotone" + at;
        default:
            return std::string("(") + condition + ")" + at + by;
    }
}

std::string describe(const std::vector<FrameViolation>& violations) {
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "; ";
        out += v.describe();
    }
    return out;
}

std::vector<FrameViolation> validate_frame(const NimFrame& frame) {
    std::vector<FrameViolation> out;
    const std::size_t n = frame.worlds;
    for (World w = 0; w < n; ++w) {
        if (!frame.min[w].contains(w)) out.push_back({'a', w, std::nullopt, {}});
        if (!frame.min[w].subset_of(frame.max[w])) out.push_back({'b', w, std::nullopt, {}});
        for (World u : frame.min[w]) {
            if (!frame.min[u].subset_of(frame.min[w])) out.push_back({'c', w, u, {}});
        }
        for (World u : frame.min[w]) {
            if (!frame.max[u].subset_of(frame.max[w])) out.push_back({'e', w, u, {}});
        }
        if (frame.t_condition) {
            for (World v : frame.max[w]) {
                if (!frame.min[v].subset_of(frame.max[w])) out.push_back({'f', w, v, {}});
            }
        }
    }
    return out;
}

bool is_upward_closed(const NimFrame& frame, WorldSet s) {
    for (World w : s) {
        if (!frame.min[w].subset_of(s)) return false;
    }
    return true;
}

std::vector<FrameViolation> validate_model(const NimModel& model) {
    auto out = validate_frame(model.frame);
    for (const auto& [name, set] : model.valuation) {
        if (!set.within(model.worlds())) {
            out.push_back({'V', 0, std::nullopt, name});
            continue;
        }
        for (World w : set) {
            if (!model.frame.min[w].subset_of(set)) out.push_back({'V', w, std::nullopt, name});
        }
    }
    return out;
}

namespace {

void require_valid(const NimModel& model) {
    auto violations = validate_model(model);
    if (!violations.empty()) throw InvalidModel("invalid NIM model: " + describe(violations));
}

bool forces_at(const NimModel& m, World w, const Formula& f) {
    switch (f.kind()) {
        case Connective::Bottom:
            return false;
        case Connective::Var:
            return lookup(m.valuation, f.name()).contains(w);
        case Connective::Or:
            return forces_at(m, w, f.lhs()) || forces_at(m, w, f.rhs());
        case Connective::And:
            return forces_at(m, w, f.lhs()) && forces_at(m, w, f.rhs());
        case Connective::Implies:
            for (World v : m.frame.min[w]) {
                if (forces_at(m, v, f.lhs()) && !forces_at(m, v, f.rhs())) return false;
            }
            return true;
        case Connective::Box:
            for (World v : m.frame.max[w]) {
                if (!forces_at(m, v, f.inner())) return false;
            }
            return true;
    }
    return false;
}

}  // namespace

bool forces(const NimModel& model, World w, const Formula& f) {
    if (w >= model.worlds()) throw std::out_of_range("world " + std::to_string(w) + " out of range");
    require_valid(model);
    return forces_at(model, w, f);
}

NimEvaluator::NimEvaluator(const NimModel& model) : model_(model) {
    require_valid(model_);
    all_ = WorldSet::full(model_.worlds());
}

NimEvaluator::NimEvaluator(const NimModel& model, AssumeValid) : model_(model) {
    all_ = WorldSet::full(model_.worlds());
}

WorldSet NimEvaluator::eval(const Formula& f, Memo& memo) const {
    if (auto it = memo.find(f.identity()); it != memo.end()) return it->second;
    const auto& min = model_.frame.min;
    const auto& max = model_.frame.max;
    WorldSet result;
    switch (f.kind()) {
        case Connective::Bottom:
            break;
        case Connective::Var:
            result = lookup(model_.valuation, f.name()) & all_;
            break;
        case Connective::And:
            result = eval(f.lhs(), memo) & eval(f.rhs(), memo);
            break;
        case Connective::Or:
            result = eval(f.lhs(), memo) | eval(f.rhs(), memo);
            break;
        case Connective::Implies: {
            const WorldSet good = (all_ - eval(f.lhs(), memo)) | eval(f.rhs(), memo);
            for (World w = 0; w < model_.worlds(); ++w) {
                if (min[w].subset_of(good)) result.insert(w);
            }
            break;
        }
        case Connective::Box: {
            const WorldSet holds = eval(f.inner(), memo);
            for (World w = 0; w < model_.worlds(); ++w) {
                if (max[w].subset_of(holds)) result.insert(w);
            }
            break;
        }
    }
    memo.emplace(f.identity(), result);
    return result;
}

WorldSet NimEvaluator::truth_set(const Formula& f) const {
    Memo memo;
    return eval(f, memo);
}

std::vector<WorldSet> NimEvaluator::truth_sets(const std::vector<Formula>& fs) const {
    Memo memo;
    std::vector<WorldSet> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(eval(f, memo));
    return out;
}

WorldSet truth_set(const NimModel& model, const Formula& f) { return NimEvaluator(model).truth_set(f); }

bool is_satisfied_in_model(const NimModel& model, const Formula& f) {
    return truth_set(model, f) == WorldSet::full(model.worlds());
}

}  // namespace imtl
