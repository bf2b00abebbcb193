#include "imtl/random.hpp"

#include <set>

#include "imtl/mt3.hpp"

namespace imtl {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Sparse seeds keep the generated structures varied instead of collapsing
// every neighborhood to the whole world set.
WorldSet sparse_subset(Rng& rng, WorldSet of) {
    WorldSet out;
    for (World w : of) {
        if (uniform(rng, 0, 3) == 0) out.insert(w);
    }
    return out;
}

}  // namespace

WorldSet random_subset(Rng& rng, WorldSet of) { return WorldSet::from_bits(rng() & of.bits()); }

NimFrame random_nim_frame(Rng& rng, std::size_t max_worlds) {
    const std::size_t n = uniform(rng, 1, max_worlds);
    const WorldSet all = WorldSet::full(n);
    std::vector<WorldSet> min(n), max(n);
    for (World w = 0; w < n; ++w) min[w] = WorldSet::singleton(w) | sparse_subset(rng, all);
    for (bool changed = true; changed;) {
        changed = false;
        for (World w = 0; w < n; ++w) {
            WorldSet grown = min[w];
            for (World u : min[w]) grown |= min[u];
            if (grown != min[w]) {
                min[w] = grown;
                changed = true;
            }
        }
    }
    for (World w = 0; w < n; ++w) max[w] = min[w] | sparse_subset(rng, all);
    for (bool changed = true; changed;) {
        changed = false;
        for (World w = 0; w < n; ++w) {
            WorldSet grown = max[w];
            for (World u : min[w]) grown |= max[u];
            for (World v : max[w]) grown |= min[v];
            if (grown != max[w]) {
                max[w] = grown;
                changed = true;
            }
        }
    }
    return NimFrame(n, std::move(min), std::move(max), true);
}

Valuation random_monotone_valuation(Rng& rng, const NimFrame& frame, const std::vector<std::string>& variables) {
    Valuation out;
    for (const auto& v : variables) {
        WorldSet set;
        for (World w : random_subset(rng, WorldSet::full(frame.worlds))) set |= frame.min[w];
        out[v] = set;
    }
    return out;
}

NimModel random_nim_model(Rng& rng, std::size_t max_worlds, const std::vector<std::string>& variables) {
    NimModel m;
    m.frame = random_nim_frame(rng, max_worlds);
    m.valuation = random_monotone_valuation(rng, m.frame, variables);
    return m;
}

FiniteTopology random_topology(Rng& rng, WorldSet universe) {
    std::set<std::uint64_t> family{0, universe.bits()};
    const std::size_t seeds = uniform(rng, 0, 3);
    for (std::size_t i = 0; i < seeds; ++i) family.insert(random_subset(rng, universe).bits());
    for (bool changed = true; changed;) {
        changed = false;
        const std::vector<std::uint64_t> snapshot(family.begin(), family.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i) {
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                changed |= family.insert(snapshot[i] | snapshot[j]).second;
                changed |= family.insert(snapshot[i] & snapshot[j]).second;
            }
        }
    }
    std::vector<WorldSet> opens;
    for (auto bits : family) opens.push_back(WorldSet::from_bits(bits));
    return FiniteTopology(universe, std::move(opens));
}

std::vector<FiniteTopology> random_spaces(Rng& rng, std::size_t max_worlds, std::size_t max_spaces,
                                          std::size_t& worlds_out) {
    const std::size_t n = uniform(rng, 1, max_worlds);
    const std::size_t k = uniform(rng, 1, max_spaces);
    std::vector<WorldSet> universes(k);
    for (World w = 0; w < n; ++w) universes[uniform(rng, 0, k - 1)].insert(w);
    for (auto& u : universes) u |= random_subset(rng, WorldSet::full(n));
    std::vector<FiniteTopology> spaces;
    for (auto u : universes) {
        if (!u.empty()) spaces.push_back(random_topology(rng, u));
    }
    worlds_out = n;
    return spaces;
}

Mt2Model random_mt2_model(Rng& rng, std::size_t max_worlds, std::size_t max_spaces,
                          const std::vector<std::string>& variables) {
    Mt2Model m;
    m.spaces = random_spaces(rng, max_worlds, max_spaces, m.worlds);
    const auto nbhd = derive_neighborhoods(m.worlds, m.spaces);
    for (const auto& v : variables) {
        WorldSet set;
        for (World w : random_subset(rng, WorldSet::full(m.worlds))) set |= nbhd.min[w];
        m.valuation[v] = set;
    }
    return m;
}

Mt3Model random_mt3_model(Rng& rng, std::size_t max_worlds, std::size_t max_spaces,
                          const std::vector<std::string>& variables) {
    Mt3Model m;
    m.spaces = random_spaces(rng, max_worlds, max_spaces, m.worlds);
    const auto nbhds = minimal_neighborhoods(m.spaces);
    for (const auto& v : variables) {
        WorldSet set;
        for (const auto& x : nbhds) {
            if (uniform(rng, 0, 2) == 0) set |= x.set;
        }
        m.valuation[v] = set;
    }
    return m;
}

Formula random_formula(Rng& rng, const std::vector<std::string>& variables, std::size_t max_depth) {
    const std::size_t leaves = variables.size() + 1;
    if (max_depth <= 1 || uniform(rng, 0, 4) == 0) {
        const std::size_t pick = uniform(rng, 0, leaves - 1);
        return pick == variables.size() ? Formula::bottom() : Formula::var(variables[pick]);
    }
    switch (uniform(rng, 0, 3)) {
        case 0:
            return Formula::conj(random_formula(rng, variables, max_depth - 1),
                                 random_formula(rng, variables, max_depth - 1));
        case 1:
            return Formula::disj(random_formula(rng, variables, max_depth - 1),
                                 random_formula(rng, variables, max_depth - 1));
        case 2:
            return Formula::implies(random_formula(rng, variables, max_depth - 1),
                                    random_formula(rng, variables, max_depth - 1));
        default:
            return Formula::box(random_formula(rng, variables, max_depth - 1));
    }
}

}  // namespace imtl
