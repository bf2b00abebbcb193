#include "imtl/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <thread>

#include "imtl/random.hpp"

namespace imtl {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
public:
    explicit Deadline(std::chrono::milliseconds limit)
        : limited_(limit.count() > 0), end_(Clock::now() + limit) {}

    bool expired() const { return limited_ && Clock::now() >= end_; }
    void check() const {
        if (expired()) throw SearchTimeout("search time limit exceeded");
    }

private:
    bool limited_;
    Clock::time_point end_;
};

// Frames are built position by position; each step only re-checks the
// constraints that mention the newly assigned world, so the recursion
// never descends below a partial assignment that is already invalid.
class FrameWalker {
public:
    FrameWalker(std::size_t n, const std::function<bool(const NimFrame&)>& fn)
        : n_(n), all_(WorldSet::full(n)), min_(n), max_(n), fn_(fn) {}

    std::size_t run() {
        assign_min(0);
        return visited_;
    }

private:
    bool min_consistent(World k) const {
        for (World w = 0; w <= k; ++w) {
            for (World u : min_[w]) {
                if (u > k) continue;
                if ((w == k || u == k) && !min_[u].subset_of(min_[w])) return false;
            }
        }
        return true;
    }

    bool max_consistent(World k) const {
        for (World v : max_[k]) {
            if (!min_[v].subset_of(max_[k])) return false;
        }
        for (World w = 0; w <= k; ++w) {
            for (World u : min_[w]) {
                if (u > k) continue;
                if ((w == k || u == k) && !max_[u].subset_of(max_[w])) return false;
            }
        }
        return true;
    }

    void assign_min(World k) {
        if (stop_) return;
        if (k == n_) {
            assign_max(0);
            return;
        }
        const WorldSet base = WorldSet::singleton(k);
        for_each_subset(all_ - base, [&](WorldSet extra) {
            if (stop_) return;
            min_[k] = base | extra;
            if (min_consistent(k)) assign_min(k + 1);
        });
    }

    void assign_max(World k) {
        if (stop_) return;
        if (k == n_) {
            ++visited_;
            if (!fn_(NimFrame(n_, min_, max_, true))) stop_ = true;
            return;
        }
        for_each_subset(all_ - min_[k], [&](WorldSet extra) {
            if (stop_) return;
            max_[k] = min_[k] | extra;
            if (max_consistent(k)) assign_max(k + 1);
        });
    }

    std::size_t n_;
    WorldSet all_;
    std::vector<WorldSet> min_;
    std::vector<WorldSet> max_;
    const std::function<bool(const NimFrame&)>& fn_;
    std::size_t visited_ = 0;
    bool stop_ = false;
};

void require_config(const Formula& f, const SearchConfig& cfg) {
    if (cfg.max_worlds == 0) throw std::invalid_argument("max_worlds must be at least 1");
    if (cfg.max_worlds > kMaxWorlds) throw std::invalid_argument("max_worlds exceeds capacity");
    for (const auto& a : atoms(f)) {
        if (std::find(cfg.variables.begin(), cfg.variables.end(), a) == cfg.variables.end()) {
            throw std::invalid_argument("formula variable '" + a + "' is not among the search variables");
        }
    }
}

std::optional<World> first_outside(WorldSet truth, std::size_t n) {
    const WorldSet missing = WorldSet::full(n) - truth;
    if (missing.empty()) return std::nullopt;
    return *missing.begin();
}

/// First falsifying (valuation, world) on one frame, in valuation order.
std::optional<Countermodel> falsify_on_frame(const Formula& f, const NimFrame& frame,
                                             const std::vector<std::string>& variables, std::size_t& models) {
    std::optional<Countermodel> found;
    for_each_valuation(frame, variables, [&](const Valuation& val) {
        ++models;
        NimModel m{frame, val};
        const WorldSet truth = NimEvaluator(m, NimEvaluator::AssumeValid{}).truth_set(f);
        if (auto w = first_outside(truth, frame.worlds)) {
            found = Countermodel{std::move(m), *w};
            return false;
        }
        return true;
    });
    return found;
}

/// Visits every model admitted by the configuration, in canonical order for
/// exhaustive enumeration. Returns the number of frames visited.
std::size_t for_each_model(const SearchConfig& cfg, const Deadline& deadline,
                           const std::function<bool(const NimModel&)>& fn) {
    if (const auto* r = std::get_if<Randomized>(&cfg.enumeration)) {
        Rng rng(r->seed);
        for (std::size_t i = 0; i < r->samples; ++i) {
            deadline.check();
            if (!fn(random_nim_model(rng, cfg.max_worlds, cfg.variables))) return i + 1;
        }
        return r->samples;
    }
    std::size_t frames = 0;
    bool stopped = false;
    for (std::size_t n = 1; n <= cfg.max_worlds && !stopped; ++n) {
        frames += for_each_frame(n, [&](const NimFrame& frame) {
            deadline.check();
            for_each_valuation(frame, cfg.variables, [&](const Valuation& val) {
                if (!fn(NimModel{frame, val})) stopped = true;
                return !stopped;
            });
            return !stopped;
        });
    }
    return frames;
}

SearchOutcome search_exhaustive_parallel(const Formula& f, const SearchConfig& cfg, const Deadline& deadline) {
    std::size_t frames_total = 0;
    std::size_t models_total = 0;
    for (std::size_t n = 1; n <= cfg.max_worlds; ++n) {
        std::vector<NimFrame> frames;
        for_each_frame(n, [&](const NimFrame& frame) {
            deadline.check();
            frames.push_back(frame);
            return true;
        });

        std::atomic<std::size_t> best{frames.size()};
        std::atomic<std::size_t> models{0};
        std::atomic<bool> timed_out{false};
        std::mutex mu;
        std::map<std::size_t, Countermodel> found;

        auto worker = [&](std::size_t first, std::size_t stride) {
            for (std::size_t i = first; i < frames.size(); i += stride) {
                if (i >= best.load() || timed_out.load()) return;
                if (deadline.expired()) {
                    timed_out = true;
                    return;
                }
                std::size_t local = 0;
                auto cm = falsify_on_frame(f, frames[i], cfg.variables, local);
                models += local;
                if (cm) {
                    std::lock_guard lock(mu);
                    found.emplace(i, std::move(*cm));
                    std::size_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < cfg.jobs; ++j) pool.emplace_back(worker, j, cfg.jobs);
        for (auto& t : pool) t.join();
        if (timed_out) throw SearchTimeout("search time limit exceeded");

        if (best.load() < frames.size()) return found.at(best.load());
        frames_total += frames.size();
        models_total += models.load();
    }
    return NoCountermodelUpTo{cfg.max_worlds, frames_total, models_total};
}

}  // namespace

std::size_t for_each_frame(std::size_t n, const std::function<bool(const NimFrame&)>& fn) {
    if (n == 0 || n > kMaxWorlds) throw std::invalid_argument("frame size out of range");
    return FrameWalker(n, fn).run();
}

std::vector<WorldSet> upward_closed_sets(const NimFrame& frame) {
    std::vector<WorldSet> out;
    for_each_subset(WorldSet::full(frame.worlds), [&](WorldSet s) {
        if (is_upward_closed(frame, s)) out.push_back(s);
    });
    return out;
}

void for_each_valuation(const NimFrame& frame, const std::vector<std::string>& variables,
                        const std::function<bool(const Valuation&)>& fn) {
    const auto sets = upward_closed_sets(frame);
    std::vector<std::size_t> digits(variables.size(), 0);
    Valuation val;
    while (true) {
        for (std::size_t i = 0; i < variables.size(); ++i) val[variables[i]] = sets[digits[i]];
        if (!fn(val)) return;
        std::size_t pos = variables.size();
        while (pos > 0) {
            --pos;
            if (++digits[pos] < sets.size()) break;
            digits[pos] = 0;
            if (pos == 0) return;
        }
        if (variables.empty()) return;
    }
}

SearchOutcome find_countermodel(const Formula& f, const SearchConfig& cfg) {
    require_config(f, cfg);
    const Deadline deadline(cfg.time_limit);

    if (std::holds_alternative<Exhaustive>(cfg.enumeration) && cfg.jobs > 1) {
        return search_exhaustive_parallel(f, cfg, deadline);
    }

    std::optional<Countermodel> found;
    std::size_t models = 0;
    const std::size_t frames = for_each_model(cfg, deadline, [&](const NimModel& m) {
        ++models;
        const WorldSet truth = NimEvaluator(m, NimEvaluator::AssumeValid{}).truth_set(f);
        if (auto w = first_outside(truth, m.worlds())) {
            found = Countermodel{m, *w};
            return false;
        }
        return true;
    });
    if (found) return *found;
    return NoCountermodelUpTo{cfg.max_worlds, frames, models};
}

bool verify_countermodel(const Formula& f, const Countermodel& cm) {
    if (!validate_model(cm.model).empty()) return false;
    if (cm.world >= cm.model.worlds()) return false;
    return !forces(cm.model, cm.world, f);
}

Schema make_schema(std::string name, std::string_view pattern_text) { return {std::move(name), parse(pattern_text)}; }

std::vector<Schema> imtl_axiom_schemas() {
    return {
        make_schema("K", "[](phi -> psi) -> ([]phi -> []psi)"),
        make_schema("T", "[]phi -> phi"),
        make_schema("IPC1", "phi -> (psi -> phi)"),
        make_schema("IPC2", "(phi -> (psi -> chi)) -> ((phi -> psi) -> (phi -> chi))"),
        make_schema("IPC3", "phi & psi -> phi"),
        make_schema("IPC4", "phi & psi -> psi"),
        make_schema("IPC5", "phi -> (psi -> phi & psi)"),
        make_schema("IPC6", "phi -> phi | psi"),
        make_schema("IPC7", "psi -> phi | psi"),
        make_schema("IPC8", "(phi -> chi) -> ((psi -> chi) -> (phi | psi -> chi))"),
        make_schema("IPC9", "_|_ -> phi"),
        make_schema("IPC10", "(phi -> psi) -> ((phi -> ~psi) -> ~phi)"),
    };
}

bool SoundnessReport::sound() const {
    return std::all_of(results.begin(), results.end(), [](const SchemaResult& r) { return r.violations.empty(); });
}

SoundnessReport soundness_sweep(const std::vector<Schema>& schemas, const SearchConfig& cfg,
                                std::size_t instance_depth) {
    if (cfg.max_worlds == 0) throw std::invalid_argument("max_worlds must be at least 1");
    const Deadline deadline(cfg.time_limit);
    const auto pool = enumerate_formulas(cfg.variables, instance_depth);

    struct Work {
        std::vector<std::string> metavars;
        std::map<std::uint64_t, SchemaViolation> violations;
    };
    std::vector<Work> work(schemas.size());
    SoundnessReport report;
    for (std::size_t s = 0; s < schemas.size(); ++s) {
        const auto names = atoms(schemas[s].pattern);
        work[s].metavars.assign(names.begin(), names.end());
        std::size_t count = 1;
        for (std::size_t i = 0; i < work[s].metavars.size(); ++i) count *= pool.size();
        report.results.push_back({schemas[s], count, {}});
    }

    for_each_model(cfg, deadline, [&](const NimModel& m) {
        ++report.models_checked;
        const auto truths = NimEvaluator(m, NimEvaluator::AssumeValid{}).truth_sets(pool);
        // Distinct truth sets of the pool, each with the pool indices realizing it.
        std::vector<std::pair<WorldSet, std::vector<std::size_t>>> classes;
        for (std::size_t i = 0; i < truths.size(); ++i) {
            auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& c) { return c.first == truths[i]; });
            if (it == classes.end()) {
                classes.push_back({truths[i], {i}});
            } else {
                it->second.push_back(i);
            }
        }

        for (std::size_t s = 0; s < schemas.size(); ++s) {
            const auto& metavars = work[s].metavars;
            const std::size_t k = metavars.size();
            std::vector<std::size_t> tuple(k, 0);
            while (true) {
                NimModel probe{m.frame, {}};
                for (std::size_t i = 0; i < k; ++i) probe.valuation[metavars[i]] = classes[tuple[i]].first;
                const WorldSet truth = NimEvaluator(probe, NimEvaluator::AssumeValid{}).truth_set(schemas[s].pattern);
                if (auto w = first_outside(truth, m.worlds())) {
                    // Every instance whose substituents fall in these classes fails at w.
                    std::vector<std::size_t> pick(k, 0);
                    while (true) {
                        std::uint64_t id = 0;
                        std::map<std::string, Formula> binding;
                        for (std::size_t i = 0; i < k; ++i) {
                            const std::size_t idx = classes[tuple[i]].second[pick[i]];
                            id = id * pool.size() + idx;
                            binding.emplace(metavars[i], pool[idx]);
                        }
                        if (!work[s].violations.contains(id)) {
                            work[s].violations.emplace(
                                id, SchemaViolation{substitute(schemas[s].pattern, binding), Countermodel{m, *w}});
                        }
                        std::size_t pos = k;
                        bool done = true;
                        while (pos > 0) {
                            --pos;
                            if (++pick[pos] < classes[tuple[pos]].second.size()) {
                                done = false;
                                break;
                            }
                            pick[pos] = 0;
                        }
                        if (done) break;
                    }
                }
                std::size_t pos = k;
                bool done = true;
                while (pos > 0) {
                    --pos;
                    if (++tuple[pos] < classes.size()) {
                        done = false;
                        break;
                    }
                    tuple[pos] = 0;
                }
                if (done) break;
            }
        }
        return true;
    });

    for (std::size_t s = 0; s < schemas.size(); ++s) {
        for (auto& [id, v] : work[s].violations) report.results[s].violations.push_back(std::move(v));
    }
    return report;
}

NecessitationReport necessitation_check(const Formula& f, const SearchConfig& cfg) {
    require_config(f, cfg);
    const Deadline deadline(cfg.time_limit);
    const Formula boxed = Formula::box(f);
    NecessitationReport report;
    for_each_model(cfg, deadline, [&](const NimModel& m) {
        ++report.models_checked;
        const NimEvaluator ev(m, NimEvaluator::AssumeValid{});
        const auto truths = ev.truth_sets({f, boxed});
        if (first_outside(truths[0], m.worlds())) return true;
        ++report.models_satisfying;
        if (auto w = first_outside(truths[1], m.worlds())) report.violations.push_back({m, *w});
        return true;
    });
    return report;
}

}  // namespace imtl
