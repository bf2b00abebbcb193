#include "imtl/transform.hpp"

#include <algorithm>
#include <future>

#include "imtl/topology.hpp"

namespace imtl {

namespace {

void require_translatable(const NimModel& m) {
    if (auto v = validate_model(m); !v.empty()) throw InvalidModel("invalid NIM model: " + describe(v));
    if (!m.frame.t_condition) {
        throw InvalidModel("NIM frame without the T-condition cannot be treated as multi-topological");
    }
}

template <typename Evaluator, typename Model>
EquivalenceReport compare(const NimModel& nim, const Model& mt, const std::vector<Formula>& formulas, unsigned jobs) {
    if (nim.worlds() != mt.worlds) {
        throw IncompatibleModels("world counts differ: " + std::to_string(nim.worlds()) + " vs " +
                                 std::to_string(mt.worlds));
    }
    const NimEvaluator lhs(nim);
    const Evaluator rhs(mt);

    auto run = [&](std::size_t begin, std::size_t end) {
        std::vector<Formula> chunk(formulas.begin() + static_cast<std::ptrdiff_t>(begin),
                                   formulas.begin() + static_cast<std::ptrdiff_t>(end));
        const auto a = lhs.truth_sets(chunk);
        const auto b = rhs.eval_all(chunk);
        std::vector<Mismatch> found;
        for (std::size_t i = 0; i < chunk.size(); ++i) {
            if (a[i] == b[i]) continue;
            for (World w = 0; w < nim.worlds(); ++w) {
                if (a[i].contains(w) != b[i].contains(w)) found.push_back({chunk[i], w, a[i].contains(w), b[i].contains(w)});
            }
        }
        return found;
    };

    EquivalenceReport report;
    report.formula_count = formulas.size();
    report.world_count = nim.worlds();

    const std::size_t workers = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(formulas.size(), 1));
    if (workers == 1) {
        report.mismatches = run(0, formulas.size());
        return report;
    }
    std::vector<std::future<std::vector<Mismatch>>> parts;
    const std::size_t step = (formulas.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < formulas.size(); begin += step) {
        parts.push_back(std::async(std::launch::async, run, begin, std::min(formulas.size(), begin + step)));
    }
    for (auto& p : parts) {
        auto found = p.get();
        report.mismatches.insert(report.mismatches.end(), found.begin(), found.end());
    }
    return report;
}

}  // namespace

Mt1Model nim_to_mt1(const NimModel& m) {
    require_translatable(m);
    Mt1Model out;
    out.worlds = m.worlds();
    for (World w = 0; w < m.worlds(); ++w) {
        Mt1Space space{build_ow(m.frame, w), m.frame.min[w]};
        if (std::find(out.spaces.begin(), out.spaces.end(), space) == out.spaces.end()) {
            out.spaces.push_back(std::move(space));
        }
    }
    out.valuation = m.valuation;
    return out;
}

NimModel mt2_to_nim(const Mt2Model& m) {
    if (auto v = validate_mt2(m); !v.empty()) throw InvalidModel("invalid MT2 model: " + describe(v));
    NimModel out{derive_neighborhoods(m).to_frame(), m.valuation};
    return out;
}

Mt3Model nim_to_mt3(const NimModel& m) {
    require_translatable(m);
    Mt3Model out;
    out.worlds = m.worlds();
    for (World w = 0; w < m.worlds(); ++w) {
        FiniteTopology space = build_qw(m.frame, w);
        if (std::find(out.spaces.begin(), out.spaces.end(), space) == out.spaces.end()) {
            out.spaces.push_back(std::move(space));
        }
    }
    out.valuation = m.valuation;
    return out;
}

EquivalenceReport check_pointwise_equivalence(const NimModel& nim, const Mt1Model& mt,
                                              const std::vector<Formula>& formulas, unsigned jobs) {
    return compare<Mt1Evaluator>(nim, mt, formulas, jobs);
}

EquivalenceReport check_pointwise_equivalence(const NimModel& nim, const Mt2Model& mt,
                                              const std::vector<Formula>& formulas, unsigned jobs) {
    return compare<Mt2Evaluator>(nim, mt, formulas, jobs);
}

EquivalenceReport check_pointwise_equivalence(const NimModel& nim, const Mt3Model& mt,
                                              const std::vector<Formula>& formulas, unsigned jobs) {
    return compare<Mt3Evaluator>(nim, mt, formulas, jobs);
}

}  // namespace imtl
